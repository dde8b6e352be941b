#include "ccg/forcing.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ccg/cliques.hpp"

namespace ccg {

namespace {

// White components of g - black, as masks, ordered by minimum element.
std::vector<VertexSet> white_components(const Graph& g, VertexSet black) {
    std::vector<VertexSet> out;
    VertexSet rest = g.vertices() - black;
    while (!rest.empty()) {
        int s = rest.min();
        VertexSet comp{s};
        VertexSet frontier{s};
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = (next & rest) - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        rest = rest - comp;
    }
    return out;
}

}  // namespace

ForcingRecord positive_closure(const Graph& g, VertexSet black) {
    if (!black.subset_of(g.vertices()))
        throw std::out_of_range("black set not within the graph");
    ForcingRecord r;
    r.initial = black;
    while (true) {
        auto comps = white_components(g, black);
        int forcer = -1, forced = -1;
        VertexSet witness;
        for (int u : black) {
            for (const auto& comp : comps) {
                VertexSet cand = g.neighbors(u) & comp;
                if (cand.size() != 1) continue;
                int w = cand.min();
                if (forcer == -1 || w < forced) {
                    forcer = u;
                    forced = w;
                    witness = comp;
                }
            }
            if (forcer != -1) break;  // lowest eligible forcer wins
        }
        if (forcer == -1) break;
        r.steps.push_back({forcer, forced, witness});
        black.insert(forced);
    }
    r.final_black = black;
    return r;
}

VertexSet positive_closure_set(const Graph& g, VertexSet black) {
    while (true) {
        VertexSet forced;
        for (const auto& comp : white_components(g, black)) {
            for (int u : black) {
                VertexSet cand = g.neighbors(u) & comp;
                if (cand.size() == 1) forced |= cand;
            }
        }
        if (forced.empty()) break;
        black |= forced;
    }
    return black;
}

VertexSet standard_closure_set(const Graph& g, VertexSet black) {
    while (true) {
        VertexSet white = g.vertices() - black;
        VertexSet forced;
        for (int u : black) {
            VertexSet cand = g.neighbors(u) & white;
            if (cand.size() == 1) forced |= cand;
        }
        if (forced.empty()) break;
        black |= forced;
    }
    return black;
}

void validate_record(const Graph& g, const ForcingRecord& r) {
    VertexSet black = r.initial;
    for (size_t k = 0; k < r.steps.size(); ++k) {
        const auto& s = r.steps[k];
        if (!black.contains(s.forcer))
            throw std::invalid_argument("step " + std::to_string(k) + ": forcer not black");
        if (black.contains(s.forced))
            throw std::invalid_argument("step " + std::to_string(k) + ": forced already black");
        auto comps = white_components(g, black);
        auto it = std::find_if(comps.begin(), comps.end(),
                               [&](VertexSet c) { return c.contains(s.forced); });
        assert(it != comps.end());
        if (*it != s.component)
            throw std::invalid_argument("step " + std::to_string(k) +
                                        ": recorded component is wrong");
        if ((g.neighbors(s.forcer) & *it) != VertexSet{s.forced})
            throw std::invalid_argument("step " + std::to_string(k) +
                                        ": forced is not the unique white neighbour");
        black.insert(s.forced);
    }
    if (black != r.final_black)
        throw std::invalid_argument("final black set does not match the steps");
}

std::vector<VertexSet> closed_twin_classes(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int v = 0; v < g.n(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet cls{v};
        for (int u = v + 1; u < g.n(); ++u)
            if (closed_neighborhood(g, u) == closed_neighborhood(g, v)) cls.insert(u);
        if (cls.size() >= 2) {
            out.push_back(cls);
            seen |= cls;
        }
    }
    return out;
}

namespace {

// Smallest forcing set of a connected graph, lexicographically least among
// the optima.  `closure` is either positive_closure_set or
// standard_closure_set.
template <typename Closure>
std::pair<int, VertexSet> min_forcing_set(const Graph& g, int lower_bound, Closure closure,
                                          const std::vector<VertexSet>& twin_classes,
                                          const Deadline* deadline) {
    const int n = g.n();
    if (n == 0) return {0, VertexSet{}};
    DeadlineTicker ticker(deadline);
    VertexSet all = g.vertices();
    for (int k = std::max(lower_bound, 0); k <= n; ++k) {
        if (k == n) return {n, all};
        // k-subsets in ascending-list lexicographic order.
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            ticker.tick();
            VertexSet s;
            for (int i : idx) s.insert(i);
            bool plausible = true;
            for (const auto& cls : twin_classes)
                if ((cls - s).size() >= 2) { plausible = false; break; }
            if (plausible && closure(g, s) == all) return {k, s};
            // next combination
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return {n, all};
}

}  // namespace

ZplusResult zplus(const Graph& g, const Deadline* deadline) {
    ZplusResult out;
    // Components force independently, so solve each and take the union.
    for (const auto& comp_vertices : connected_components(g)) {
        VertexSet comp;
        for (int v : comp_vertices) comp.insert(v);
        auto sub = induced_subgraph(g, comp);
        int lb = std::max(clique_number(sub.graph) - 1,
                          sub.graph.n() - clique_cover_number(sub.graph, deadline));
        auto twins = closed_twin_classes(sub.graph);
        auto [k, s] = min_forcing_set(
            sub.graph, lb,
            [](const Graph& h, VertexSet b) { return positive_closure_set(h, b); }, twins,
            deadline);
        out.number += k;
        for (int v : s) out.optimal.insert(sub.new_to_old[v]);
    }
    out.record = positive_closure(g, out.optimal);
    assert(out.record.final_black == g.vertices());
    return out;
}

int standard_zero_forcing(const Graph& g, const Deadline* deadline) {
    int total = 0;
    for (const auto& comp_vertices : connected_components(g)) {
        VertexSet comp;
        for (int v : comp_vertices) comp.insert(v);
        auto sub = induced_subgraph(g, comp);
        // Z >= Z+ >= n - CC and Z >= clique number - 1.
        int lb = std::max(clique_number(sub.graph) - 1,
                          sub.graph.n() - clique_cover_number(sub.graph, deadline));
        auto twins = closed_twin_classes(sub.graph);
        auto [k, s] = min_forcing_set(
            sub.graph, lb,
            [](const Graph& h, VertexSet b) { return standard_closure_set(h, b); }, twins,
            deadline);
        (void)s;
        total += k;
    }
    return total;
}

ForcingForest forcing_forest(const Graph& g, const ForcingRecord& r) {
    if (r.final_black != g.vertices())
        throw std::invalid_argument("forcing_forest needs a record that forced every vertex");
    validate_record(g, r);

    ForcingForest f;
    f.parent.assign(g.n(), -1);
    for (const auto& s : r.steps) f.parent[s.forced] = s.forcer;

    // Root of each vertex.
    std::vector<int> root(g.n());
    for (int v = 0; v < g.n(); ++v) {
        int r2 = v;
        while (f.parent[r2] != -1) r2 = f.parent[r2];
        root[v] = r2;
    }
    for (int rt : r.initial) {
        VertexSet tree;
        for (int v = 0; v < g.n(); ++v)
            if (root[v] == rt) tree.insert(v);
        f.trees.push_back(tree);
    }

    // Each tree must be induced: the subgraph on its vertices is exactly the
    // parent-child edge set.
    for (const auto& tree : f.trees) {
        int internal_edges = 0;
        for (int v : tree) internal_edges += (g.neighbors(v) & tree).size();
        internal_edges /= 2;
        int tree_edges = 0;
        for (int v : tree)
            if (f.parent[v] != -1) {
                ++tree_edges;
                if (!g.has_edge(v, f.parent[v]))
                    throw std::logic_error("forcing edge missing from the graph");
            }
        if (internal_edges != tree_edges)
            throw std::logic_error("forcing tree is not induced");
    }
    return f;
}

Graph reduced_graph(const Graph& g) {
    std::vector<VertexSet> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    VertexSet alive = g.vertices();

    auto deg = [&](int v) { return (adj[v] & alive).size(); };

    bool changed = true;
    while (changed) {
        changed = false;
        // Delete degree-one vertices, lowest first, one at a time.
        for (bool more = true; more;) {
            more = false;
            for (int v : alive) {
                if (deg(v) == 1) {
                    alive.erase(v);
                    changed = more = true;
                    break;
                }
            }
        }
        // Smooth degree-two vertices whose neighbours are not adjacent:
        // drop the vertex, join the neighbours.
        for (bool more = true; more;) {
            more = false;
            for (int v : alive) {
                VertexSet nb = adj[v] & alive;
                if (nb.size() != 2) continue;
                auto ms = nb.members();
                int x = ms[0], y = ms[1];
                if (adj[x].contains(y)) continue;
                alive.erase(v);
                adj[x].insert(y);
                adj[y].insert(x);
                changed = more = true;
                break;
            }
        }
    }

    auto keep = alive.members();
    std::vector<int> remap(g.n(), -1);
    for (size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
    Graph out(static_cast<int>(keep.size()));
    for (int v : alive)
        for (int u : adj[v] & alive)
            if (u < v) out.add_edge(remap[u], remap[v]);
    return out;
}

}  // namespace ccg
