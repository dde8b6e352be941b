#include "ccg/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "ccg/io.hpp"

namespace ccg {

Corpus generated_corpus(int max_n, int guard) {
    if (max_n < 1) throw std::invalid_argument("corpus: need max_n >= 1");
    if (max_n > guard)
        throw std::invalid_argument(
            "corpus: generation is capped at " + std::to_string(guard) +
            " vertices; read larger corpora from a graph6 file instead");

    Corpus out;
    out.source = "generated(n<=" + std::to_string(max_n) + ")";
    out.graphs.push_back(Graph(1));

    // Every connected graph on n vertices arises from a connected graph on
    // n-1 vertices by adding one vertex with a non-empty neighbourhood
    // (remove any non-cut vertex to see this), so growing level by level
    // and deduplicating canonical forms enumerates each class exactly once.
    std::vector<Graph> level = {Graph(1)};
    for (int n = 2; n <= max_n; ++n) {
        std::map<CanonicalForm, Graph> reps;
        for (const Graph& base : level) {
            for (std::uint64_t nb = 1; nb < (1ull << (n - 1)); ++nb) {
                Graph g(n);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int v = 0; v < n - 1; ++v)
                    if ((nb >> v) & 1) g.add_edge(v, n - 1);
                CanonicalForm cf = canonical_form(g);
                cf.labeling.clear();  // identity of the class only
                reps.emplace(std::move(cf), std::move(g));
            }
        }
        level.clear();
        for (auto& [cf, g] : reps) level.push_back(g);
        out.graphs.insert(out.graphs.end(), level.begin(), level.end());
    }
    return out;
}

Corpus file_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file " + path);
    Corpus out;
    out.source = path;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        try {
            out.graphs.push_back(from_graph6(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace ccg
