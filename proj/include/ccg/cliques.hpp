#pragma once

#include <cstdint>
#include <vector>

#include "ccg/graph.hpp"
#include "ccg/util.hpp"

namespace ccg {

enum class Tri : std::uint8_t { unchecked, yes, no };

// A set of cliques, kept in canonical form: every clique is a sorted vertex
// set and the list is sorted in ascending-member-list order with no
// duplicates.  The four flags certify properties relative to a host graph.
struct CliqueCover {
    std::vector<VertexSet> cliques;
    Tri covers_all_edges = Tri::unchecked;
    Tri all_maximal = Tri::unchecked;
    Tri minimum_size = Tri::unchecked;
    Tri simple_intersection = Tri::unchecked;

    int size() const { return static_cast<int>(cliques.size()); }
    void canonicalize();
    bool operator==(const CliqueCover& o) const { return cliques == o.cliques; }
};

bool is_clique(const Graph& g, VertexSet s);
bool is_maximal_clique(const Graph& g, VertexSet s);
bool covers_all_edges(const Graph& g, const std::vector<VertexSet>& cliques);

// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), in canonical
// order.  Isolated vertices appear as singleton cliques.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Size of the largest clique.
int clique_number(const Graph& g);

// Exact minimum number of cliques covering every edge; isolated vertices
// each cost one singleton clique.
int clique_cover_number(const Graph& g, const Deadline* deadline = nullptr);

// A minimum cover in canonical form: the lexicographically least cover of
// size CC(G) among subsets of the maximal-clique list.  Flags
// covers_all_edges and minimum_size are set (all_maximal too, since the
// search only uses maximal cliques).
CliqueCover minimum_cover(const Graph& g, const Deadline* deadline = nullptr);

// Extend every clique of an edge cover to a maximal one, adding vertices in
// ascending index order.  For a minimum cover the clique count is unchanged;
// duplicates arising from non-minimum input collapse.
CliqueCover maximalize_cover(const Graph& g, const CliqueCover& c);

// True iff every three distinct cliques have empty common intersection,
// equivalently no vertex lies in three of them.
bool has_simple_intersection(const CliqueCover& c);

// Every cover that is simultaneously minimum-size, all-maximal,
// edge-covering and simply intersecting, in canonical order.  Exhaustive
// over size-CC subsets of the maximal cliques, which loses nothing: the
// cliques of any such cover are maximal.
std::vector<CliqueCover> enumerate_minmax_si_covers(const Graph& g,
                                                    const Deadline* deadline = nullptr);

// Compute all four flags of an arbitrary clique list against g.
CliqueCover annotate_cover(const Graph& g, std::vector<VertexSet> cliques,
                           const Deadline* deadline = nullptr);

}  // namespace ccg
