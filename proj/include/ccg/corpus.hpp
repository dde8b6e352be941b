#pragma once

#include <string>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

// A stream of test instances: either every connected graph up to
// isomorphism with at most max_n vertices, or the graphs of a graph6 file.
struct Corpus {
    std::string source;
    std::vector<Graph> graphs;
};

// One representative per isomorphism class of connected graphs on
// 1..max_n vertices, grown by attaching a new vertex to every smaller
// connected graph and deduplicating canonical forms.  Ordered by vertex
// count, then canonical form.  The generated mode is guarded: pass a file
// corpus for anything above the guard.
Corpus generated_corpus(int max_n, int guard = 7);

// One graph6 line per graph; blank lines and '#' comments are skipped.
Corpus file_corpus(const std::string& path);

}  // namespace ccg
