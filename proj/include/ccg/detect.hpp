#pragma once

#include <optional>
#include <string>

#include "ccg/graph.hpp"
#include "ccg/util.hpp"

namespace ccg {

enum class Structure { claw, diamond, suspended_cycle, ear };

// A found forbidden structure; `witness` induces it in the host graph.
struct StructureReport {
    Structure kind;
    VertexSet witness;
    int center = -1;  // claw centre / the one high-degree vertex of a suspended cycle
};

// Induced K_{1,3}: a vertex with three pairwise non-adjacent neighbours.
std::optional<StructureReport> find_claw(const Graph& g);

// Induced K_4 minus an edge.
std::optional<StructureReport> find_diamond(const Graph& g);

// Cycle in which exactly one vertex has degree > 2 in g and the rest have
// degree exactly 2.  Reported as `ear` when the cycle is a triangle.  A bare
// cycle component does not count.
std::optional<StructureReport> find_suspended_cycle(const Graph& g);

// Necessary conditions for being a compressed cliques graph: claw-free,
// no suspended cycle, and an induced embedding into the Johnson-style host
// on CC(g) symbols.  The diamond is reported for information only; it can
// occur inside legitimate compressed graphs.
struct CandidateReport {
    bool claw_free = false;
    bool no_suspended_cycle = false;
    bool embeds_in_jprime = false;
    int cc = 0;
    std::optional<StructureReport> claw;
    std::optional<StructureReport> suspended;
    std::optional<StructureReport> diamond;

    bool admissible() const { return claw_free && no_suspended_cycle && embeds_in_jprime; }
    std::string summary() const;
};

CandidateReport check_compressed_candidate(const Graph& g, const Deadline* deadline = nullptr);

// No induced cycle of length four or more, decided by greedy simplicial
// elimination (exact: vertices on an induced long cycle are never
// simplicial, and eliminating a simplicial vertex preserves chordality).
bool is_chordal(const Graph& g);

}  // namespace ccg
