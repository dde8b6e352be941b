#include "ccg/detect.hpp"

#include "ccg/cliques.hpp"
#include "ccg/families.hpp"

namespace ccg {

std::optional<StructureReport> find_claw(const Graph& g) {
    for (int c = 0; c < g.n(); ++c) {
        auto nb = g.neighbors(c).members();
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (size_t d = b + 1; d < nb.size(); ++d) {
                    if (g.has_edge(nb[a], nb[d]) || g.has_edge(nb[b], nb[d])) continue;
                    return StructureReport{Structure::claw,
                                           VertexSet{c, nb[a], nb[b], nb[d]}, c};
                }
            }
    }
    return std::nullopt;
}

std::optional<StructureReport> find_diamond(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto common = (g.neighbors(u) & g.neighbors(v)).members();
        for (size_t a = 0; a < common.size(); ++a)
            for (size_t b = a + 1; b < common.size(); ++b)
                if (!g.has_edge(common[a], common[b]))
                    return StructureReport{Structure::diamond,
                                           VertexSet{u, v, common[a], common[b]}, -1};
    }
    return std::nullopt;
}

std::optional<StructureReport> find_suspended_cycle(const Graph& g) {
    // Walk degree-2 paths away from each vertex of degree >= 3; coming back
    // to the start closes a suspended cycle.
    for (int x = 0; x < g.n(); ++x) {
        if (g.degree(x) <= 2) continue;
        for (int y : g.neighbors(x)) {
            if (g.degree(y) != 2) continue;
            VertexSet cyc{x, y};
            int prev = x, cur = y;
            while (true) {
                VertexSet step = g.neighbors(cur) - VertexSet{prev};
                int nxt = step.min();
                if (nxt == x) {
                    return StructureReport{
                        cyc.size() == 3 ? Structure::ear : Structure::suspended_cycle, cyc, x};
                }
                if (g.degree(nxt) != 2) break;
                cyc.insert(nxt);
                prev = cur;
                cur = nxt;
            }
        }
    }
    return std::nullopt;
}

std::string CandidateReport::summary() const {
    std::string s;
    s += claw_free ? "claw-free" : "claw at " + to_string(claw->witness);
    s += "; ";
    s += no_suspended_cycle ? "no suspended cycle"
                            : "suspended cycle at " + to_string(suspended->witness);
    s += "; ";
    s += diamond ? "diamond at " + to_string(diamond->witness) : "diamond-free";
    s += "; ";
    s += embeds_in_jprime ? "embeds induced in J'(" + std::to_string(cc) + ",2)"
                          : "no induced embedding into J'(" + std::to_string(cc) + ",2)";
    return s;
}

bool is_chordal(const Graph& g) {
    VertexSet alive = g.vertices();
    while (!alive.empty()) {
        int pick = -1;
        for (int v : alive) {
            VertexSet nb = g.neighbors(v) & alive;
            bool simplicial = true;
            for (int u : nb)
                if (!(nb - VertexSet{u}).subset_of(g.neighbors(u))) { simplicial = false; break; }
            if (simplicial) { pick = v; break; }
        }
        if (pick == -1) return false;
        alive.erase(pick);
    }
    return true;
}

CandidateReport check_compressed_candidate(const Graph& g, const Deadline* deadline) {
    CandidateReport r;
    r.claw = find_claw(g);
    r.claw_free = !r.claw.has_value();
    r.suspended = find_suspended_cycle(g);
    r.no_suspended_cycle = !r.suspended.has_value();
    r.diamond = find_diamond(g);
    r.cc = clique_cover_number(g, deadline);
    r.embeds_in_jprime =
        g.n() == 0 || find_induced(johnson_prime(std::max(r.cc, 1)), g, deadline).has_value();
    return r;
}

}  // namespace ccg
