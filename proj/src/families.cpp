#include "ccg/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ccg {

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph circulant(int n, const std::vector<int>& connections) {
    if (n < 2) throw std::invalid_argument("circulant: need n >= 2");
    std::vector<int> ks = connections;
    std::sort(ks.begin(), ks.end());
    for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 1 || 2 * ks[i] >= n + 1)
            throw std::invalid_argument("circulant: connections must satisfy 0 < k < (n+1)/2");
        if (i > 0 && ks[i] == ks[i - 1])
            throw std::invalid_argument("circulant: repeated connection");
    }
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int k : ks)
            if (v != (v + k) % n && !g.has_edge(v, (v + k) % n)) g.add_edge(v, (v + k) % n);
    return g;
}

namespace {

std::vector<std::pair<int, int>> pairs_lex(int m) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) ps.emplace_back(a, b);
    return ps;
}

std::string set_name(std::initializer_list<int> xs) {
    std::string s = "{";
    bool sep = false;
    for (int x : xs) {
        if (sep) s += ",";
        s += std::to_string(x);
        sep = true;
    }
    return s + "}";
}

}  // namespace

Graph johnson(int m) {
    if (m < 2) throw std::invalid_argument("johnson: need m >= 2");
    auto ps = pairs_lex(m);
    int n = static_cast<int>(ps.size());
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        g.set_name(i, set_name({ps[i].first, ps[i].second}));
        for (int j = i + 1; j < n; ++j) {
            auto [a, b] = ps[i];
            auto [c, d] = ps[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    }
    return g;
}

Graph johnson_prime(int m) {
    if (m < 1) throw std::invalid_argument("johnson_prime: need m >= 1");
    auto ps = pairs_lex(m);
    int np = static_cast<int>(ps.size());
    Graph g(np + m);
    for (int i = 0; i < np; ++i) g.set_name(i, set_name({ps[i].first, ps[i].second}));
    for (int s = 0; s < m; ++s) g.set_name(np + s, set_name({s + 1}));
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            auto [a, b] = ps[i];
            auto [c, d] = ps[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    for (int i = 0; i < np; ++i)
        for (int s = 1; s <= m; ++s)
            if (ps[i].first == s || ps[i].second == s) g.add_edge(i, np + s - 1);
    return g;
}

Graph musical_graph(int n) {
    if (n < 3) throw std::invalid_argument("musical: need n >= 3");
    // Cayley graph of Z_{2n} with connection set {+-1, +-(n-1), n}.
    std::vector<int> conn = {1, 2 * n - 1, n - 1, n + 1, n};
    Graph g(2 * n);
    for (int v = 0; v < 2 * n; ++v)
        for (int k : conn) {
            int u = (v + k) % (2 * n);
            if (u != v && !g.has_edge(v, u)) g.add_edge(v, u);
        }
    return g;
}

Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel: need n >= 4 (hub plus a cycle)");
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v % (n - 1) + 1);
    }
    return g;
}

Graph biclique(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("biclique: need positive part sizes");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph cartesian_k2_kn(int n) {
    if (n < 1) throw std::invalid_argument("k2xk: need n >= 1");
    Graph g(2 * n);
    for (int side = 0; side < 2; ++side)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(side * n + u, side * n + v);
    for (int v = 0; v < n; ++v) g.add_edge(v, n + v);
    return g;
}

Graph t3_graph() {
    // Three triangles pairwise sharing a vertex, no common vertex.
    return Graph::from_edges(
        6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

Graph fig1_2tree() {
    // Five-vertex 2-tree whose minimum covers all pass through one vertex.
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {0, 2}, {2, 4}, {3, 4}});
}

Graph x_graph(int n, const std::vector<int>& cycle_lengths) {
    int k = static_cast<int>(cycle_lengths.size());
    if (n < 3) throw std::invalid_argument("X: need n >= 3");
    if (n < 2 * k)
        throw std::invalid_argument("X: need n >= 2k so the cycles attach to disjoint pairs");
    for (int l : cycle_lengths)
        if (l < 3) throw std::invalid_argument("X: cycle lengths must be >= 3");

    int total = n;
    for (int l : cycle_lengths) total += l - 2;
    Graph g(total);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    int next = n;
    for (int i = 0; i < k; ++i) {
        // Cycle i runs from clique vertex 2i through fresh vertices to 2i+1;
        // the clique edge {2i, 2i+1} closes it.
        int prev = 2 * i;
        for (int t = 0; t < cycle_lengths[i] - 2; ++t) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 2 * i + 1);
    }
    return g;
}

Graph vertex_clique_graph(const Graph& g) {
    // Vertices of the result are the incidences (v, e); same-v pairs form
    // the cliques, same-e pairs are the cross edges.
    std::vector<std::pair<int, int>> inc;  // (vertex, edge index)
    auto edges = g.edges();
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0)
            throw std::invalid_argument("vertex_clique_graph: isolated vertex has no clique");
        for (size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first == v || edges[e].second == v)
                inc.emplace_back(v, static_cast<int>(e));
    }
    Graph h(static_cast<int>(inc.size()));
    for (size_t a = 0; a < inc.size(); ++a)
        for (size_t b = a + 1; b < inc.size(); ++b)
            if (inc[a].first == inc[b].first || inc[a].second == inc[b].second)
                h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

namespace {

Graph cliques_chain(const std::vector<int>& sizes, const std::vector<int>& overlaps,
                    bool closed) {
    int k = static_cast<int>(sizes.size());
    int boundaries = closed ? k : k - 1;
    if (k < (closed ? 3 : 1))
        throw std::invalid_argument("cliques chain: need >= 1 cliques (>= 3 for a cycle)");
    if (static_cast<int>(overlaps.size()) != boundaries)
        throw std::invalid_argument("cliques chain: want one overlap per consecutive pair");
    for (int i = 0; i < boundaries; ++i) {
        int s1 = sizes[i], s2 = sizes[(i + 1) % k];
        if (overlaps[i] < 1 || overlaps[i] >= s1 || overlaps[i] >= s2)
            throw std::invalid_argument(
                "cliques chain: overlap must be positive and smaller than both cliques");
    }
    // The left and right shared blocks of each clique must not collide,
    // otherwise non-consecutive cliques would intersect.
    for (int i = 0; i < k; ++i) {
        int left = (i == 0 && !closed) ? 0 : overlaps[(i + boundaries - 1) % boundaries];
        int right = (i == k - 1 && !closed) ? 0 : overlaps[i % boundaries];
        if (left + right > sizes[i])
            throw std::invalid_argument("cliques chain: overlaps exceed clique " +
                                        std::to_string(i));
    }

    // Lay the cliques out left to right, sharing suffix blocks; the closing
    // overlap of a cycle reuses the first `overlaps[k-1]` vertices.
    std::vector<std::vector<int>> members(k);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        std::vector<int>& cur = members[i];
        if (i > 0) {
            const auto& prev = members[i - 1];
            cur.insert(cur.end(), prev.end() - overlaps[i - 1], prev.end());
        }
        int fresh = sizes[i] - static_cast<int>(cur.size());
        if (closed && i == k - 1) fresh -= overlaps[k - 1];
        for (int t = 0; t < fresh; ++t) cur.push_back(next++);
        if (closed && i == k - 1)
            for (int t = 0; t < overlaps[k - 1]; ++t) cur.push_back(t);
    }
    Graph g(next);
    for (const auto& cl : members)
        for (size_t a = 0; a < cl.size(); ++a)
            for (size_t b = a + 1; b < cl.size(); ++b)
                if (!g.has_edge(cl[a], cl[b])) g.add_edge(cl[a], cl[b]);
    return g;
}

}  // namespace

Graph path_of_cliques(const std::vector<int>& sizes, const std::vector<int>& overlaps) {
    return cliques_chain(sizes, overlaps, false);
}

Graph cycle_of_cliques(const std::vector<int>& sizes, const std::vector<int>& overlaps) {
    return cliques_chain(sizes, overlaps, true);
}

namespace {

const std::vector<std::pair<std::string, Family>>& family_names() {
    static const std::vector<std::pair<std::string, Family>> table = {
        {"complete", Family::complete},
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"kminus", Family::complete_minus_edge},
        {"circ", Family::circulant},
        {"johnson", Family::johnson},
        {"jprime", Family::johnson_prime},
        {"musical", Family::musical},
        {"pathcliques", Family::path_of_cliques},
        {"cyclecliques", Family::cycle_of_cliques},
        {"vc", Family::vertex_clique_of},
        {"X", Family::x_graph},
        {"wheel", Family::wheel},
        {"t3", Family::t3},
        {"fig1", Family::fig1_2tree},
        {"k2xk", Family::cartesian_k2_kn},
        {"biclique", Family::biclique},
    };
    return table;
}

std::vector<int> parse_int_list(const std::string& part) {
    std::vector<int> out;
    std::istringstream in(part);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("family: bad integer '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("family: empty parameter list");
    return out;
}

}  // namespace

std::string FamilySpec::to_string() const {
    std::string name;
    for (const auto& [nm, fam] : family_names())
        if (fam == kind) name = nm;
    std::string out = name;
    if (kind == Family::vertex_clique_of) return out + ":" + inner->to_string();
    auto join = [](const std::vector<int>& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
        return s;
    };
    if (!params.empty()) out += ":" + join(params);
    if (!extra.empty()) out += ":" + join(extra);
    return out;
}

FamilySpec FamilySpec::parse(std::string_view text) {
    std::string s(text);
    size_t colon = s.find(':');
    std::string head = s.substr(0, colon);
    FamilySpec spec;
    bool found = false;
    for (const auto& [nm, fam] : family_names())
        if (nm == head) { spec.kind = fam; found = true; }
    if (!found) throw std::invalid_argument("unknown family '" + head + "'");

    std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (spec.kind == Family::vertex_clique_of) {
        if (rest.empty()) throw std::invalid_argument("vc: needs an operand family");
        spec.inner = std::make_shared<FamilySpec>(parse(rest));
        return spec;
    }
    std::vector<std::vector<int>> lists;
    if (!rest.empty()) {
        std::istringstream in(rest);
        std::string part;
        while (std::getline(in, part, ':')) lists.push_back(parse_int_list(part));
    }
    if (lists.size() > 2) throw std::invalid_argument("family: too many ':' sections");
    if (!lists.empty()) spec.params = lists[0];
    if (lists.size() == 2) spec.extra = lists[1];
    return spec;
}

namespace {

int single(const FamilySpec& s, const char* what) {
    if (s.params.size() != 1 || !s.extra.empty())
        throw std::invalid_argument(std::string(what) + ": want exactly one parameter");
    return s.params[0];
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::complete: return complete_graph(single(spec, "complete"));
        case Family::path: return path_graph(single(spec, "path"));
        case Family::cycle: return cycle_graph(single(spec, "cycle"));
        case Family::complete_minus_edge: {
            int n = single(spec, "kminus");
            if (n < 3) throw std::invalid_argument("kminus: need n >= 3");
            Graph g = complete_graph(n);
            Graph h(n);
            for (auto [u, v] : g.edges())
                if (!(u == n - 2 && v == n - 1)) h.add_edge(u, v);
            return h;
        }
        case Family::circulant: {
            if (spec.params.size() != 1 || spec.extra.empty())
                throw std::invalid_argument("circ: want circ:<n>:<k1,k2,...>");
            return circulant(spec.params[0], spec.extra);
        }
        case Family::johnson: return johnson(single(spec, "johnson"));
        case Family::johnson_prime: return johnson_prime(single(spec, "jprime"));
        case Family::musical: return musical_graph(single(spec, "musical"));
        case Family::path_of_cliques:
        case Family::cycle_of_cliques: {
            if (spec.params.empty() || spec.extra.empty())
                throw std::invalid_argument("cliques chain: want <sizes>:<overlaps>");
            std::vector<int> overlaps = spec.extra;
            bool closed = spec.kind == Family::cycle_of_cliques;
            size_t want = closed ? spec.params.size() : spec.params.size() - 1;
            if (overlaps.size() == 1 && want > 1) overlaps.assign(want, overlaps[0]);
            return closed ? cycle_of_cliques(spec.params, overlaps)
                          : path_of_cliques(spec.params, overlaps);
        }
        case Family::vertex_clique_of: return vertex_clique_graph(generate(*spec.inner));
        case Family::x_graph: {
            if (spec.params.size() != 1 || spec.extra.empty())
                throw std::invalid_argument("X: want X:<n>:<l1,l2,...>");
            return x_graph(spec.params[0], spec.extra);
        }
        case Family::wheel: return wheel(single(spec, "wheel"));
        case Family::t3: return t3_graph();
        case Family::fig1_2tree: return fig1_2tree();
        case Family::cartesian_k2_kn: return cartesian_k2_kn(single(spec, "k2xk"));
        case Family::biclique: {
            if (spec.params.size() != 2 || !spec.extra.empty())
                throw std::invalid_argument("biclique: want biclique:<a>,<b>");
            return biclique(spec.params[0], spec.params[1]);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace ccg
