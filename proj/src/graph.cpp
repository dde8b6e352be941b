#include "ccg/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ccg {

bool lex_less(const VertexSet& a, const VertexSet& b) {
    if (a == b) return false;
    VertexSet diff = a ^ b;
    int first = diff.min();
    // Members below `first` coincide.  If the first difference belongs to a,
    // a has the smaller element there unless b has simply run out.
    if (a.contains(first)) {
        return true;
    }
    // first in b only: a is smaller iff it has nothing >= first (prefix case).
    return (a - VertexSet::full(first)).empty();
}

std::string to_string(const VertexSet& s) {
    std::string out = "{";
    bool sep = false;
    for (int v : s) {
        if (sep) out += ",";
        out += std::to_string(v);
        sep = true;
    }
    return out + "}";
}

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::invalid_argument("graph size out of range (0.." +
                                    std::to_string(VertexSet::max_vertices) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u].insert(v);
    adj_[v].insert(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u] - VertexSet::full(u + 1)) out.emplace_back(u, v);
    return out;
}

const std::string& Graph::name(int v) const {
    check_vertex(v);
    static const std::string empty;
    return names_.empty() ? empty : names_[v];
}

void Graph::set_name(int v, std::string name) {
    check_vertex(v);
    if (names_.empty()) names_.resize(n_);
    names_[v] = std::move(name);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range 0.." +
                                std::to_string(n_ - 1));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range("vertex set not contained in the graph");
    InducedSubgraph out;
    out.graph = Graph(s.size());
    out.old_to_new.assign(g.n(), -1);
    for (int v : s) {
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    for (int v : s) {
        for (int u : g.neighbors(v) & s)
            if (u < v) out.graph.add_edge(out.old_to_new[u], out.old_to_new[v]);
        if (g.has_names()) out.graph.set_name(out.old_to_new[v], g.name(v));
    }
    return out;
}

Graph contract_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("cannot contract the empty set");
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range("vertex set not contained in the graph");

    // Survivors keep ascending order with the merged vertex at min(s)'s slot.
    std::vector<int> old_to_new(g.n(), -1);
    int rep = s.min();
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (v == rep || !s.contains(v)) old_to_new[v] = next++;
    }
    Graph out(next);
    for (auto [u, v] : g.edges()) {
        bool us = s.contains(u), vs = s.contains(v);
        if (us && vs) continue;
        int a = us ? old_to_new[rep] : old_to_new[u];
        int b = vs ? old_to_new[rep] : old_to_new[v];
        if (!out.has_edge(a, b)) out.add_edge(a, b);
    }
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        int start = unseen.min();
        VertexSet comp{start};
        VertexSet frontier{start};
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp.members());
        unseen = unseen - comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.n() == 0 || connected_components(g).size() == 1;
}

bool CanonicalForm::operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    return bits < o.bits;
}

namespace {

// Backtracking search for the relabelling that maximises the adjacency
// bitstring read column by column: when vertex k is placed, the new bits are
// its adjacencies to positions 0..k-1.  Invariant: whenever have_best is
// set, best agrees with `current` on the whole prefix already placed, so a
// three-way comparison of just the new column decides prune / keep / beat.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::uint8_t> best;     // one byte per triangle bit
    std::vector<std::uint8_t> current;
    std::vector<int> best_perm;         // canonical position -> original vertex
    std::vector<int> perm;
    VertexSet used;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {
        current.reserve(n * (n - 1) / 2);
        perm.resize(n, -1);
    }

    void place(int k) {
        if (k == n) {
            best = current;
            best_perm = perm;
            have_best = true;
            return;
        }
        size_t base = current.size();
        for (int v = 0; v < n; ++v) {
            if (used.contains(v)) continue;
            int cmp = 0;  // vs best segment: -1 worse, 0 equal, +1 better
            for (int i = 0; i < k; ++i) {
                std::uint8_t bit = g.has_edge(v, perm[i]) ? 1 : 0;
                if (have_best && cmp == 0) {
                    std::uint8_t b = best[base + i];
                    if (bit < b) { cmp = -1; break; }
                    if (bit > b) cmp = +1;
                }
                current.push_back(bit);
            }
            if (have_best && cmp < 0) {
                current.resize(base);
                continue;
            }
            // Strictly better prefix: the stored best is stale everywhere
            // below this point; drop it and let the subtree rebuild it.
            if (have_best && cmp > 0) have_best = false;
            perm[k] = v;
            used.insert(v);
            place(k + 1);
            used.erase(v);
            current.resize(base);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm out;
    out.n = g.n();
    out.labeling.assign(g.n(), -1);
    if (g.n() == 0) return out;

    CanonSearch search(g);
    search.place(0);

    out.bits.assign((search.best.size() + 63) / 64, 0);
    for (size_t i = 0; i < search.best.size(); ++i)
        if (search.best[i]) out.bits[i / 64] |= 1ull << (i % 64);
    for (int pos = 0; pos < g.n(); ++pos) out.labeling[search.best_perm[pos]] = pos;
    return out;
}

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto deg = [](const Graph& x) {
        std::vector<int> d(x.n());
        for (int v = 0; v < x.n(); ++v) d[v] = x.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (deg(g) != deg(h)) return std::nullopt;

    CanonicalForm cg = canonical_form(g);
    CanonicalForm ch = canonical_form(h);
    if (!(cg == ch)) return std::nullopt;

    // g -> canonical position -> h
    std::vector<int> pos_to_h(h.n());
    for (int v = 0; v < h.n(); ++v) pos_to_h[ch.labeling[v]] = v;
    std::vector<int> map(g.n());
    for (int v = 0; v < g.n(); ++v) map[v] = pos_to_h[cg.labeling[v]];
    return map;
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pat;
    std::vector<int> order;      // pattern vertices, most-constrained first
    std::vector<int> map;        // pattern vertex -> host vertex, -1 unset
    VertexSet used;
    DeadlineTicker ticker;

    InducedSearch(const Graph& h, const Graph& p, const Deadline* d)
        : host(h), pat(p), map(p.n(), -1), ticker(d) {
        // Greedy order: highest degree first, then most neighbours already
        // placed; keeps the candidate sets tight.
        VertexSet placed;
        for (int step = 0; step < pat.n(); ++step) {
            int pick = -1, pick_conn = -1, pick_deg = -1;
            for (int v = 0; v < pat.n(); ++v) {
                if (placed.contains(v)) continue;
                int conn = (pat.neighbors(v) & placed).size();
                int dg = pat.degree(v);
                if (conn > pick_conn || (conn == pick_conn && dg > pick_deg)) {
                    pick = v;
                    pick_conn = conn;
                    pick_deg = dg;
                }
            }
            order.push_back(pick);
            placed.insert(pick);
        }
    }

    bool extend(size_t step) {
        if (step == order.size()) return true;
        int u = order[step];
        for (int w = 0; w < host.n(); ++w) {
            ticker.tick();
            if (used.contains(w)) continue;
            if (host.degree(w) < pat.degree(u)) continue;
            bool ok = true;
            for (size_t i = 0; i < step && ok; ++i) {
                int v = order[i];
                if (pat.has_edge(u, v) != host.has_edge(w, map[v])) ok = false;
            }
            if (!ok) continue;
            map[u] = w;
            used.insert(w);
            if (extend(step + 1)) return true;
            used.erase(w);
            map[u] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern,
                                             const Deadline* deadline) {
    if (pattern.n() > g.n()) return std::nullopt;
    if (pattern.n() == 0) return std::vector<int>{};
    InducedSearch search(g, pattern, deadline);
    if (search.extend(0)) return search.map;
    return std::nullopt;
}

}  // namespace ccg
