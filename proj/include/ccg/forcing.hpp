#pragma once

#include <vector>

#include "ccg/graph.hpp"
#include "ccg/util.hpp"

namespace ccg {

// One application of the positive colour change rule: `forcer` is black,
// `forced` was the unique white neighbour of `forcer` inside the white
// component recorded here.
struct ForceStep {
    int forcer;
    int forced;
    VertexSet component;
};

struct ForcingRecord {
    VertexSet initial;
    std::vector<ForceStep> steps;
    VertexSet final_black;
};

// Runs the positive colour change rule to a fixed point, one force at a
// time, always picking the lowest-indexed eligible forcer and then the
// lowest-indexed forced vertex.  The final set does not depend on the order
// (checked by the confluence property suite), the step list does.
ForcingRecord positive_closure(const Graph& g, VertexSet black);

// Final black set only; applies every available force of a round at once.
VertexSet positive_closure_set(const Graph& g, VertexSet black);

// Classic zero forcing closure: a black vertex with exactly one white
// neighbour in the whole graph forces it.
VertexSet standard_closure_set(const Graph& g, VertexSet black);

// Replays a record from its initial set, checking every step against the
// rule at its time.  Throws std::invalid_argument on the first bad step.
void validate_record(const Graph& g, const ForcingRecord& r);

struct ZplusResult {
    int number = 0;
    VertexSet optimal;       // lexicographically least optimal set per component
    ForcingRecord record;    // deterministic closure from that set
};

// Exact positive zero forcing number.  Searches subset sizes upward from
// max(clique number - 1, n - CC) per connected component and sums the
// components.  Subsets leaving two vertices with equal closed
// neighbourhoods white are skipped; no such set can force.
ZplusResult zplus(const Graph& g, const Deadline* deadline = nullptr);

// Exact classic zero forcing number Z(g); Z+(g) <= Z(g) always.
int standard_zero_forcing(const Graph& g, const Deadline* deadline = nullptr);

// Rooted forest traced by the forces of a complete closure: parent of a
// forced vertex is its forcer, roots are the initial black vertices.  Each
// tree is an induced subtree of the host graph; construction verifies this.
struct ForcingForest {
    std::vector<int> parent;             // -1 at roots
    std::vector<VertexSet> trees;        // vertex set per root, covers V
};
ForcingForest forcing_forest(const Graph& g, const ForcingRecord& r);

// Fixed point of deleting degree-one vertices and smoothing degree-two
// vertices whose neighbours are non-adjacent (contracting suspended paths
// to an edge).  Preserves the positive zero forcing number; cycles of
// length > 3 collapse to triangles.
Graph reduced_graph(const Graph& g);

// Classes of vertices sharing a closed neighbourhood, size >= 2 only.
std::vector<VertexSet> closed_twin_classes(const Graph& g);

}  // namespace ccg
