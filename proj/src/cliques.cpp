#include "ccg/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace ccg {

void CliqueCover::canonicalize() {
    std::sort(cliques.begin(), cliques.end(), lex_less);
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
}

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s)
        if (!(s - VertexSet{v}).subset_of(g.neighbors(v))) return false;
    return true;
}

bool is_maximal_clique(const Graph& g, VertexSet s) {
    if (s.empty() || !is_clique(g, s)) return false;
    VertexSet common = g.vertices() - s;
    for (int v : s) common &= g.neighbors(v);
    return common.empty();
}

bool covers_all_edges(const Graph& g, const std::vector<VertexSet>& cliques) {
    for (auto [u, v] : g.edges()) {
        bool hit = false;
        for (const auto& c : cliques)
            if (c.contains(u) && c.contains(v)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of p|x with the most neighbours in p.
    int pivot = -1, best = -1;
    for (int u : p | x) {
        int k = (g.neighbors(u) & p).size();
        if (k > best) { best = k; pivot = u; }
    }
    for (int v : p - g.neighbors(pivot)) {
        VertexSet vs{v};
        bron_kerbosch(g, r | vs, p & g.neighbors(v), x & g.neighbors(v), out);
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.n() == 0) return out;
    bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

int clique_number(const Graph& g) {
    int best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
    return best;
}

namespace {

// Exact set cover of the edge set by maximal cliques.  Edges are indexed;
// per-clique coverage is a bitmask over edge indices.
struct CoverSolver {
    const Graph& g;
    std::vector<VertexSet> cliques;              // maximal, size >= 2, canonical order
    std::vector<std::vector<std::uint64_t>> edge_masks;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<std::vector<int>> cliques_with_edge;
    size_t words;
    DeadlineTicker ticker;

    int best_size;
    std::vector<int> best_choice;
    std::vector<int> choice;

    CoverSolver(const Graph& graph, const Deadline* dl)
        : g(graph), edge_list(graph.edges()), ticker(dl) {
        for (const auto& c : maximal_cliques(g))
            if (c.size() >= 2) cliques.push_back(c);
        words = (edge_list.size() + 63) / 64;
        edge_masks.assign(cliques.size(), std::vector<std::uint64_t>(words, 0));
        cliques_with_edge.assign(edge_list.size(), {});
        for (size_t ci = 0; ci < cliques.size(); ++ci)
            for (size_t e = 0; e < edge_list.size(); ++e)
                if (cliques[ci].contains(edge_list[e].first) &&
                    cliques[ci].contains(edge_list[e].second)) {
                    edge_masks[ci][e / 64] |= 1ull << (e % 64);
                    cliques_with_edge[e].push_back(static_cast<int>(ci));
                }
    }

    bool covered(const std::vector<std::uint64_t>& mask, size_t e) const {
        return (mask[e / 64] >> (e % 64)) & 1;
    }

    // Lower bound: greedy set of uncovered edges no two of which lie in a
    // common clique; each needs its own clique.
    int independent_edges_bound(const std::vector<std::uint64_t>& mask) const {
        std::vector<std::uint64_t> blocked(words, 0);
        int count = 0;
        for (size_t e = 0; e < edge_list.size(); ++e) {
            if (covered(mask, e) || covered(blocked, e)) continue;
            ++count;
            for (int ci : cliques_with_edge[e])
                for (size_t w = 0; w < words; ++w) blocked[w] |= edge_masks[ci][w];
        }
        return count;
    }

    void search(size_t chosen, std::vector<std::uint64_t>& mask) {
        ticker.tick();
        size_t first_uncovered = edge_list.size();
        for (size_t e = 0; e < edge_list.size(); ++e)
            if (!covered(mask, e)) { first_uncovered = e; break; }
        if (first_uncovered == edge_list.size()) {
            if (static_cast<int>(chosen) < best_size) {
                best_size = static_cast<int>(chosen);
                best_choice = choice;
            }
            return;
        }
        if (static_cast<int>(chosen) + independent_edges_bound(mask) >= best_size) return;
        for (int ci : cliques_with_edge[first_uncovered]) {
            std::vector<std::uint64_t> next = mask;
            for (size_t w = 0; w < words; ++w) next[w] |= edge_masks[ci][w];
            choice.push_back(ci);
            search(chosen + 1, next);
            choice.pop_back();
        }
    }

    // Greedy cover for the initial upper bound.
    int greedy() {
        std::vector<std::uint64_t> mask(words, 0);
        int used = 0;
        while (true) {
            size_t uncovered = 0;
            for (size_t e = 0; e < edge_list.size(); ++e)
                if (!covered(mask, e)) ++uncovered;
            if (uncovered == 0) break;
            int pick = -1;
            int gain = -1;
            for (size_t ci = 0; ci < cliques.size(); ++ci) {
                int k = 0;
                for (size_t w = 0; w < words; ++w)
                    k += std::popcount(edge_masks[ci][w] & ~mask[w]);
                if (k > gain) { gain = k; pick = static_cast<int>(ci); }
            }
            for (size_t w = 0; w < words; ++w) mask[w] |= edge_masks[pick][w];
            ++used;
        }
        return used;
    }

    int solve() {
        if (edge_list.empty()) return 0;
        best_size = greedy() + 1;
        std::vector<std::uint64_t> mask(words, 0);
        search(0, mask);
        assert(!best_choice.empty());
        return static_cast<int>(best_choice.size());
    }
};

int isolated_count(const Graph& g) {
    int k = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) ++k;
    return k;
}

}  // namespace

int clique_cover_number(const Graph& g, const Deadline* deadline) {
    CoverSolver solver(g, deadline);
    return solver.solve() + isolated_count(g);
}

namespace {

// All edge covers using exactly `target` cliques from `cliques`, emitted in
// lexicographic order of the chosen index sets.  Prunes on coverage
// feasibility of the remaining suffix.
struct ExactEnumerator {
    const std::vector<VertexSet>& cliques;
    const std::vector<std::vector<std::uint64_t>>& edge_masks;
    size_t words;
    size_t n_edges;
    int target;
    bool si_only;
    bool only_first = false;  // stop at the lexicographically least cover
    DeadlineTicker ticker;
    std::vector<int> choice;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<std::uint64_t>> suffix_union;  // coverage of cliques i..end

    ExactEnumerator(const std::vector<VertexSet>& cl,
                    const std::vector<std::vector<std::uint64_t>>& masks, size_t w,
                    size_t ne, int t, bool si, const Deadline* dl)
        : cliques(cl), edge_masks(masks), words(w), n_edges(ne), target(t), si_only(si),
          ticker(dl) {
        suffix_union.assign(cliques.size() + 1, std::vector<std::uint64_t>(words, 0));
        for (size_t i = cliques.size(); i-- > 0;) {
            suffix_union[i] = suffix_union[i + 1];
            for (size_t w2 = 0; w2 < words; ++w2) suffix_union[i][w2] |= edge_masks[i][w2];
        }
    }

    bool full(const std::vector<std::uint64_t>& mask) const {
        size_t bits = 0;
        for (size_t w = 0; w < words; ++w) bits += std::popcount(mask[w]);
        return bits == n_edges;
    }

    void rec(size_t from, std::vector<std::uint64_t>& mask, VertexSet once, VertexSet twice) {
        ticker.tick();
        if (only_first && !out.empty()) return;
        if (static_cast<int>(choice.size()) == target) {
            if (full(mask)) out.push_back(choice);
            return;
        }
        int remaining = target - static_cast<int>(choice.size());
        for (size_t i = from; i + remaining <= cliques.size(); ++i) {
            // Even taking everything from i on cannot finish: stop.
            bool reachable = true;
            {
                size_t bits = 0;
                for (size_t w = 0; w < words; ++w)
                    bits += std::popcount(mask[w] | suffix_union[i][w]);
                reachable = bits == n_edges;
            }
            if (!reachable) break;
            if (si_only && cliques[i].intersects(twice)) continue;
            std::vector<std::uint64_t> next = mask;
            for (size_t w = 0; w < words; ++w) next[w] |= edge_masks[i][w];
            choice.push_back(static_cast<int>(i));
            rec(i + 1, next, once | cliques[i], twice | (once & cliques[i]));
            choice.pop_back();
        }
    }
};

}  // namespace

CliqueCover minimum_cover(const Graph& g, const Deadline* deadline) {
    CoverSolver solver(g, deadline);
    int cc_edges = solver.solve();

    CliqueCover cover;
    if (cc_edges > 0) {
        // Enumerate all optimum covers and keep the canonically least; the
        // clique list is already sorted, so the first one found is it.
        ExactEnumerator en(solver.cliques, solver.edge_masks, solver.words,
                           solver.edge_list.size(), cc_edges, false, deadline);
        en.only_first = true;
        std::vector<std::uint64_t> mask(solver.words, 0);
        en.rec(0, mask, VertexSet{}, VertexSet{});
        assert(!en.out.empty());
        for (int ci : en.out.front()) cover.cliques.push_back(solver.cliques[ci]);
    }
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) cover.cliques.push_back(VertexSet{v});
    cover.canonicalize();
    cover.covers_all_edges = Tri::yes;
    cover.minimum_size = Tri::yes;
    cover.all_maximal = Tri::yes;
    cover.simple_intersection = has_simple_intersection(cover) ? Tri::yes : Tri::no;
    return cover;
}

CliqueCover maximalize_cover(const Graph& g, const CliqueCover& c) {
    if (!covers_all_edges(g, c.cliques))
        throw std::invalid_argument("maximalize_cover: input does not cover all edges");
    CliqueCover out;
    for (VertexSet clique : c.cliques) {
        if (clique.empty() || !is_clique(g, clique))
            throw std::invalid_argument("maximalize_cover: input contains a non-clique");
        while (true) {
            VertexSet common = g.vertices() - clique;
            for (int v : clique) common &= g.neighbors(v);
            if (common.empty()) break;
            clique.insert(common.min());
        }
        out.cliques.push_back(clique);
    }
    out.canonicalize();
    out.covers_all_edges = Tri::yes;
    out.all_maximal = Tri::yes;
    out.minimum_size = c.minimum_size;
    out.simple_intersection = has_simple_intersection(out) ? Tri::yes : Tri::no;
    return out;
}

bool has_simple_intersection(const CliqueCover& c) {
    VertexSet once, twice, thrice;
    for (const auto& cl : c.cliques) {
        thrice |= twice & cl;
        twice |= once & cl;
        once |= cl;
    }
    return thrice.empty();
}

std::vector<CliqueCover> enumerate_minmax_si_covers(const Graph& g, const Deadline* deadline) {
    CoverSolver solver(g, deadline);
    int cc_edges = solver.solve();

    std::vector<std::vector<int>> picks;
    if (cc_edges == 0) {
        picks.push_back({});
    } else {
        ExactEnumerator en(solver.cliques, solver.edge_masks, solver.words,
                           solver.edge_list.size(), cc_edges, true, deadline);
        std::vector<std::uint64_t> mask(solver.words, 0);
        en.rec(0, mask, VertexSet{}, VertexSet{});
        picks = std::move(en.out);
    }

    std::vector<VertexSet> singletons;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) singletons.push_back(VertexSet{v});

    std::vector<CliqueCover> out;
    for (const auto& pick : picks) {
        CliqueCover cover;
        for (int ci : pick) cover.cliques.push_back(solver.cliques[ci]);
        cover.cliques.insert(cover.cliques.end(), singletons.begin(), singletons.end());
        cover.canonicalize();
        // Singletons never share vertices with anything, so the SI filter in
        // the enumeration is the whole condition.
        cover.covers_all_edges = Tri::yes;
        cover.all_maximal = Tri::yes;
        cover.minimum_size = Tri::yes;
        cover.simple_intersection = Tri::yes;
        out.push_back(std::move(cover));
    }
    std::sort(out.begin(), out.end(), [](const CliqueCover& a, const CliqueCover& b) {
        return std::lexicographical_compare(a.cliques.begin(), a.cliques.end(),
                                            b.cliques.begin(), b.cliques.end(), lex_less);
    });
    return out;
}

CliqueCover annotate_cover(const Graph& g, std::vector<VertexSet> cliques,
                           const Deadline* deadline) {
    CliqueCover c;
    c.cliques = std::move(cliques);
    for (const auto& cl : c.cliques)
        if (cl.empty() || !is_clique(g, cl))
            throw std::invalid_argument("annotate_cover: not a set of non-empty cliques");
    c.canonicalize();
    c.covers_all_edges = covers_all_edges(g, c.cliques) ? Tri::yes : Tri::no;
    bool allmax = true;
    for (const auto& cl : c.cliques) allmax = allmax && is_maximal_clique(g, cl);
    c.all_maximal = allmax ? Tri::yes : Tri::no;
    c.minimum_size = (c.size() == clique_cover_number(g, deadline)) ? Tri::yes : Tri::no;
    c.simple_intersection = has_simple_intersection(c) ? Tri::yes : Tri::no;
    return c;
}

}  // namespace ccg
