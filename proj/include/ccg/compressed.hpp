#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccg/cliques.hpp"
#include "ccg/graph.hpp"

namespace ccg {

// Cell of a cover: the vertices lying in cliques i and j and nothing else
// (i < j), or privately in clique i (i == j).  Indices are 0-based positions
// in the cover; display strings are 1-based to read like set labels.
struct CellLabel {
    int i = 0;
    int j = 0;

    bool contains_index(int k) const { return k == i || k == j; }
    bool intersects(const CellLabel& o) const {
        return contains_index(o.i) || contains_index(o.j);
    }
    std::string to_string() const;

    auto operator<=>(const CellLabel&) const = default;
};

using CellMap = std::map<CellLabel, VertexSet>;

// The non-empty cells of a minimum all-maximal simply-intersecting cover.
// They partition the vertex set.
CellMap cells(const Graph& g, const CliqueCover& c);

struct CompressedGraph {
    Graph graph;                     // one vertex per non-empty cell
    std::vector<CellLabel> labels;   // per compressed vertex, sorted by (i,j)
    std::vector<int> phi;            // source vertex -> compressed vertex
    CliqueCover source_cover;
};

// Contract every cell to a single labelled vertex.  Two compressed vertices
// are adjacent exactly when their labels intersect; the construction goes
// through the quotient of g and asserts that law.
CompressedGraph compress(const Graph& g, const CliqueCover& c);

// The compressed cliques graph over the canonically first minimum
// all-maximal simply-intersecting cover.  When several such covers exist,
// verifies that all of them compress to isomorphic graphs before returning.
// Throws NotSimplyCoverable when no such cover exists.
CompressedGraph compressed_cliques_graph(const Graph& g, const Deadline* deadline = nullptr);

// Compressed vertex holding v's cell.
int phi_map(const CompressedGraph& cg, int v);

// Whether the compressed cliques graph of g is g itself, decided two ways
// that must agree: isomorphism, and every cell having at most one vertex.
bool is_self_compressed(const Graph& g, const Deadline* deadline = nullptr);

// The cover {D_1..D_l} of the compressed graph, where D_i collects the
// compressed vertices whose label mentions i.
CliqueCover induced_cover(const CompressedGraph& cg);

// Positive zero forcing set for the source graph built from one for the
// compressed graph: cells of white compressed vertices keep one white
// vertex each, everything else is black.
VertexSet lift_forcing_set(const Graph& g, const CompressedGraph& cg,
                           VertexSet black_in_compressed);

}  // namespace ccg
