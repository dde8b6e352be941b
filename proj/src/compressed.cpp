#include "ccg/compressed.hpp"

#include <cassert>
#include <stdexcept>

namespace ccg {

std::string CellLabel::to_string() const {
    if (i == j) return "{" + std::to_string(i + 1) + "}";
    return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

namespace {

void require_minmax_si(const CliqueCover& c) {
    if (c.covers_all_edges != Tri::yes || c.all_maximal != Tri::yes ||
        c.minimum_size != Tri::yes || c.simple_intersection != Tri::yes)
        throw std::invalid_argument(
            "cover must be certified minimum, all-maximal, edge-covering and "
            "simply intersecting (see annotate_cover)");
}

}  // namespace

CellMap cells(const Graph& g, const CliqueCover& c) {
    require_minmax_si(c);
    int l = c.size();
    CellMap out;
    VertexSet seen;
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            VertexSet inter = c.cliques[i] & c.cliques[j];
            if (!inter.empty()) out[{i, j}] = inter;
            seen |= inter;
        }
    }
    for (int i = 0; i < l; ++i) {
        VertexSet priv = c.cliques[i];
        for (int j = 0; j < l; ++j)
            if (j != i) priv = priv - c.cliques[j];
        if (!priv.empty()) out[{i, i}] = priv;
        seen |= priv;
    }
    if (seen != g.vertices())
        throw std::invalid_argument("cover does not reach every vertex of the graph");
    return out;
}

CompressedGraph compress(const Graph& g, const CliqueCover& c) {
    CellMap cell_map = cells(g, c);

    CompressedGraph out;
    out.source_cover = c;
    out.labels.reserve(cell_map.size());
    std::vector<VertexSet> cell_sets;
    for (const auto& [label, members] : cell_map) {
        out.labels.push_back(label);
        cell_sets.push_back(members);
    }

    int m = static_cast<int>(cell_sets.size());
    out.graph = Graph(m);
    out.phi.assign(g.n(), -1);
    for (int a = 0; a < m; ++a) {
        for (int v : cell_sets[a]) out.phi[v] = a;
        out.graph.set_name(a, out.labels[a].to_string());
    }

    // Quotient adjacency: cells are joined when the source graph has an edge
    // between them.
    for (auto [u, v] : g.edges()) {
        int a = out.phi[u], b = out.phi[v];
        if (a != b && !out.graph.has_edge(a, b)) out.graph.add_edge(a, b);
    }

    // The label law must coincide with the quotient.
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (out.graph.has_edge(a, b) != out.labels[a].intersects(out.labels[b]))
                throw std::logic_error("cell adjacency disagrees with label intersection");
    return out;
}

CompressedGraph compressed_cliques_graph(const Graph& g, const Deadline* deadline) {
    auto covers = enumerate_minmax_si_covers(g, deadline);
    if (covers.empty()) throw NotSimplyCoverable{};
    CompressedGraph first = compress(g, covers.front());
    for (size_t k = 1; k < covers.size(); ++k) {
        CompressedGraph other = compress(g, covers[k]);
        if (!are_isomorphic(first.graph, other.graph))
            throw std::logic_error("compressed graphs of two covers are not isomorphic");
    }
    return first;
}

int phi_map(const CompressedGraph& cg, int v) {
    if (v < 0 || v >= static_cast<int>(cg.phi.size()))
        throw std::out_of_range("phi_map: source vertex out of range");
    return cg.phi[v];
}

bool is_self_compressed(const Graph& g, const Deadline* deadline) {
    CompressedGraph cg = compressed_cliques_graph(g, deadline);
    bool by_iso = are_isomorphic(g, cg.graph).has_value();
    bool by_cells = cg.graph.n() == g.n();  // every cell a single vertex
    if (by_iso != by_cells)
        throw std::logic_error("isomorphism and cell-size criteria disagree");
    return by_iso;
}

CliqueCover induced_cover(const CompressedGraph& cg) {
    int l = cg.source_cover.size();
    std::vector<VertexSet> ds(l);
    for (int a = 0; a < cg.graph.n(); ++a) {
        ds[cg.labels[a].i].insert(a);
        ds[cg.labels[a].j].insert(a);
    }
    return annotate_cover(cg.graph, std::move(ds));
}

VertexSet lift_forcing_set(const Graph& g, const CompressedGraph& cg,
                           VertexSet black_in_compressed) {
    if (!black_in_compressed.subset_of(cg.graph.vertices()))
        throw std::out_of_range("black set not within the compressed graph");
    VertexSet white_cells = cg.graph.vertices() - black_in_compressed;
    VertexSet black = g.vertices();
    for (int cell : white_cells) {
        // One white representative per white cell: the lowest member.
        for (int v = 0; v < g.n(); ++v)
            if (cg.phi[v] == cell) { black.erase(v); break; }
    }
    return black;
}

}  // namespace ccg
