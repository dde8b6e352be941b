#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccg/util.hpp"

namespace ccg {

// Vertices are dense integers 0..n-1 and a vertex set is a fixed-width
// bitmask.  The default cap of 128 leaves room for the Johnson-style host
// graphs used by the embedding checks (about a hundred vertices for the
// largest instances this tool generates).
#ifndef CCG_MAX_VERTICES
#define CCG_MAX_VERTICES 128
#endif
static_assert(CCG_MAX_VERTICES >= 1 && CCG_MAX_VERTICES <= 1024,
              "vertex cap out of supported range");

class VertexSet {
    static constexpr int kWords = (CCG_MAX_VERTICES + 63) / 64;

public:
    static constexpr int max_vertices = CCG_MAX_VERTICES;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static VertexSet full(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.w_[w] = n >= 64 ? ~0ull : (1ull << n) - 1;
        return s;
    }

    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void insert(int v) { w_[v >> 6] |= 1ull << (v & 63); }
    void erase(int v) { w_[v >> 6] &= ~(1ull << (v & 63)); }

    int size() const {
        int k = 0;
        for (auto w : w_) k += std::popcount(w);
        return k;
    }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    // Lowest member; -1 when empty.
    int min() const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w]) return w * 64 + std::countr_zero(w_[w]);
        return -1;
    }

    bool subset_of(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & ~o.w_[w]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & o.w_[w]) return true;
        return false;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.minus(b); }
    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= o.w_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] |= o.w_[w];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] ^= o.w_[w];
        return *this;
    }
    VertexSet& minus(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= ~o.w_[w];
        return *this;
    }

    VertexSet complement_in(int n) const { return full(n) - *this; }

    bool operator==(const VertexSet&) const = default;

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Iteration over members in ascending order.
    class iterator {
    public:
        iterator(const VertexSet* s, int word) : s_(s), word_(word) { advance(); }
        int operator*() const { return word_ * 64 + std::countr_zero(cur_); }
        iterator& operator++() {
            cur_ &= cur_ - 1;
            advance();
            return *this;
        }
        bool operator!=(const iterator& o) const { return word_ != o.word_ || cur_ != o.cur_; }

    private:
        void advance() {
            while (cur_ == 0 && word_ < kWords) {
                if (++word_ < kWords) cur_ = s_->w_[word_];
            }
        }
        const VertexSet* s_;
        int word_;
        std::uint64_t cur_ = 0;
    };
    iterator begin() const { return iterator(this, -1); }
    iterator end() const { return iterator(this, kWords); }

private:
    std::array<std::uint64_t, kWords> w_{};
};

// Ascending-member-list lexicographic order ({0,5} < {1,2}, {1,2} < {1,2,3}).
// This is the order used everywhere canonical output is promised.
bool lex_less(const VertexSet& a, const VertexSet& b);

std::string to_string(const VertexSet& s);

// Immutable simple graph: symmetric, irreflexive adjacency over 0..n-1.
// Build it with from_edges or add_edge and then treat it as read-only; all
// operations on graphs are pure functions.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);

    int n() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { check_vertex(v); return adj_[v]; }
    int degree(int v) const { check_vertex(v); return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<std::pair<int, int>> edges() const;

    bool has_names() const { return !names_.empty(); }
    const std::string& name(int v) const;
    void set_name(int v, std::string name);

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> names_;
};

// {v} together with v's neighbours.
VertexSet closed_neighborhood(const Graph& g, int v);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices outside the chosen set
    std::vector<int> new_to_old;
};

// Subgraph on s, relabelled 0..|s|-1 in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Replace the vertices of s by a single vertex adjacent to every outside
// neighbour of s.  The merged vertex sits where min(s) was; other vertices
// keep their relative order.
Graph contract_set(const Graph& g, const VertexSet& s);

// Maximal connected vertex sets, each sorted, ordered by minimum element.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Exact isomorphism via canonical labellings.  Returns a bijection p with
// p[v in g] = vertex in h, or nullopt.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

// Canonical form: the lexicographically largest upper-triangle adjacency
// bitstring over all relabellings, found by backtracking.  Equal forms <=>
// isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> bits;   // packed column-major upper triangle
    std::vector<int> labeling;         // original vertex -> canonical position

    // The class identity is (n, bits); the labeling is a witness.
    bool operator==(const CanonicalForm& o) const { return n == o.n && bits == o.bits; }
    bool operator<(const CanonicalForm& o) const;
};
CanonicalForm canonical_form(const Graph& g);

// Injective map under which pattern appears as an induced subgraph of g
// (edges and non-edges both preserved), or nullopt.  Exact backtracking.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern,
                                             const Deadline* deadline = nullptr);

}  // namespace ccg
