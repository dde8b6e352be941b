#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ccg/graph.hpp"

namespace ccg {

enum class GraphFormat { edgelist, graph6, dot, json };

std::optional<GraphFormat> format_from_name(std::string_view name);

// Input formats: edgelist ("n m" header then one "u v" line per edge,
// 0-indexed) and graph6 (short form, n <= 62).  dot and json are emit-only.
Graph parse_graph(std::string_view text, GraphFormat format);

// Sniffs edgelist (leading digit header) vs graph6.
Graph parse_graph_auto(std::string_view text);

std::string emit_graph(const Graph& g, GraphFormat format);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

}  // namespace ccg
