#include "ccg/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ccg {

std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "dot") return GraphFormat::dot;
    if (name == "json") return GraphFormat::json;
    return std::nullopt;
}

namespace {

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw std::invalid_argument("edgelist: malformed header, want \"n m\"");
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::invalid_argument("edgelist: vertex count out of range");
    if (m < 0) throw std::invalid_argument("edgelist: negative edge count");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edgelist: expected " + std::to_string(m) + " edges");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edgelist: vertex out of range in edge " +
                                        std::to_string(i));
        if (u == v) throw std::invalid_argument("edgelist: self-loop rejected");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

std::string quote_dot(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string emit_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v;
        if (g.has_names() && !g.name(v).empty()) out << " [label=" << quote_dot(g.name(v)) << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_names()) {
        auto names = nlohmann::json::array();
        for (int v = 0; v < g.n(); ++v) names.push_back(g.name(v));
        j["names"] = std::move(names);
    }
    return j.dump() + "\n";
}

}  // namespace

// graph6 short form: byte n+63, then the upper triangle read column by
// column ((0,1),(0,2),(1,2),(0,3),...) packed big-endian into 6-bit groups,
// each offset by 63.
std::string to_graph6(const Graph& g) {
    if (g.n() > 62) throw std::invalid_argument("graph6 short form handles at most 62 vertices");
    std::string out;
    out += static_cast<char>(g.n() + 63);
    int acc = 0, nbits = 0;
    for (int col = 1; col < g.n(); ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
    return out;
}

Graph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty input");
    if (line.front() == '~')
        throw std::invalid_argument("graph6: long form (>62 vertices) not supported");
    int n = static_cast<unsigned char>(line[0]) - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6: malformed header byte");
    size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() != 1 + need)
        throw std::invalid_argument("graph6: wrong length for " + std::to_string(n) +
                                    " vertices");
    Graph g(n);
    size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("graph6: byte out of range");
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    // Padding bits must be zero.
    size_t total = need * 6;
    for (; bit < total; ++bit) {
        int byte = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
        if ((byte >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edgelist: return parse_edgelist(text);
        case GraphFormat::graph6: return from_graph6(text);
        default: throw std::invalid_argument("parse supports edgelist and graph6 only");
    }
}

Graph parse_graph_auto(std::string_view text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        return parse_edgelist(text);
    // graph6 payload sits on a single line; trim leading whitespace.
    return from_graph6(text.substr(i));
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::edgelist: return emit_edgelist(g);
        case GraphFormat::graph6: return to_graph6(g) + "\n";
        case GraphFormat::dot: return emit_dot(g);
        case GraphFormat::json: return emit_json(g);
    }
    throw std::logic_error("unreachable");
}

}  // namespace ccg
