#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

enum class Family {
    complete,
    path,
    cycle,
    complete_minus_edge,
    circulant,
    johnson,
    johnson_prime,
    musical,
    path_of_cliques,
    cycle_of_cliques,
    vertex_clique_of,
    x_graph,
    wheel,
    t3,
    fig1_2tree,
    cartesian_k2_kn,
    biclique,
};

// Parameters naming one generated graph.  Textual syntax (used by the CLI
// and fixtures): kind and parameters separated by colons, lists by commas:
//   complete:5  path:4  cycle:6  kminus:4  circ:6:1,2  johnson:4  jprime:5
//   musical:4  pathcliques:3,3:1  cyclecliques:4,4,4,4:1,1,1,1  vc:cycle:3
//   X:8:4,4,4,4  wheel:7  t3  fig1  k2xk:3  biclique:2,3
struct FamilySpec {
    Family kind = Family::complete;
    std::vector<int> params;
    std::vector<int> extra;                // second list (generators, overlaps, lengths)
    std::shared_ptr<FamilySpec> inner;     // operand of vc:

    std::string to_string() const;
    static FamilySpec parse(std::string_view text);
};

Graph generate(const FamilySpec& spec);

// Convenience constructors used directly in places.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph circulant(int n, const std::vector<int>& connections);
Graph johnson(int m);        // 2-subsets of {1..m}, adjacent iff intersecting
Graph johnson_prime(int m);  // 2-subsets then singletons, adjacent iff intersecting
Graph musical_graph(int n);
Graph wheel(int n);          // hub 0 plus an (n-1)-cycle
Graph biclique(int a, int b);
Graph cartesian_k2_kn(int n);
Graph t3_graph();
Graph fig1_2tree();
Graph x_graph(int n, const std::vector<int>& cycle_lengths);

// Blow each vertex v up to a d(v)-clique and join cliques by one edge per
// original edge, so every clique vertex has at most one outside neighbour.
// Equals the line graph of the full edge subdivision of g.
Graph vertex_clique_graph(const Graph& g);

// Chain (or ring) of cliques where only consecutive cliques intersect, in
// sets of the given sizes.  overlaps[i] vertices are shared between clique
// i and clique i+1 (and last with first in the cycle form).
Graph path_of_cliques(const std::vector<int>& sizes, const std::vector<int>& overlaps);
Graph cycle_of_cliques(const std::vector<int>& sizes, const std::vector<int>& overlaps);

}  // namespace ccg
