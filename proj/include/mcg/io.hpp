#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Parsed "mcg/1" file: the graph plus any `c doubleton i j` annotations
/// (0-based positions into the edge list).
struct McgFile {
    Graph graph;
    std::vector<std::pair<EdgeId, EdgeId>> doubletons;
};

inline McgFile read_mcg(std::istream& in) {
    McgFile out;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0, edges_seen = 0;
    std::vector<std::pair<int, int>> pending_doubletons;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "c") {
            std::string tag;
            if (ls >> tag && tag == "doubleton") {
                int i, j;
                if (!(ls >> i >> j)) throw parse_error(lineno, "malformed doubleton comment");
                pending_doubletons.emplace_back(i, j);
            }
            continue;
        }
        if (kind == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "mcg")
                throw parse_error(lineno, "expected 'p mcg <n> <m>'");
            if (n < 0 || m < 0) throw parse_error(lineno, "negative counts");
            if (have_header) throw parse_error(lineno, "duplicate header");
            have_header = true;
            out.graph = Graph(n);
            continue;
        }
        if (kind == "e") {
            if (!have_header) throw parse_error(lineno, "edge before header");
            int u, v;
            if (!(ls >> u >> v)) throw parse_error(lineno, "expected 'e <u> <v>'");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error(lineno, "endpoint out of range");
            if (u == v) throw parse_error(lineno, "loop edge");
            if (++edges_seen > m) throw parse_error(lineno, "more edges than declared");
            out.graph.add_edge(u, v);
            continue;
        }
        throw parse_error(lineno, "unknown line kind '" + kind + "'");
    }
    if (!have_header) throw parse_error(lineno, "missing 'p mcg' header");
    if (edges_seen != m) throw parse_error(lineno, "fewer edges than declared");
    for (auto [i, j] : pending_doubletons) {
        if (i < 0 || i >= m || j < 0 || j >= m || i == j)
            throw parse_error(lineno, "doubleton refers to bad edge position");
        out.doubletons.emplace_back(out.graph.edges()[i].id, out.graph.edges()[j].id);
    }
    return out;
}

inline McgFile read_mcg(const std::string& text) {
    std::istringstream in(text);
    return read_mcg(in);
}

/// Writes the normal form: header, doubleton comments, then edges in id
/// order. Positions in doubleton comments refer to that edge order.
inline void write_mcg(std::ostream& os, const Graph& g,
                      const std::vector<std::pair<EdgeId, EdgeId>>& doubletons = {}) {
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    auto position = [&](EdgeId id) {
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].id == id) return int(i);
        throw unknown_edge(id);
    };
    os << "p mcg " << g.order() << ' ' << g.size() << '\n';
    for (auto [a, b] : doubletons) os << "c doubleton " << position(a) << ' ' << position(b) << '\n';
    for (const Edge& e : edges) os << "e " << e.u << ' ' << e.v << '\n';
}

inline std::string to_mcg(const Graph& g,
                          const std::vector<std::pair<EdgeId, EdgeId>>& doubletons = {}) {
    std::ostringstream os;
    write_mcg(os, g, doubletons);
    return os.str();
}

}  // namespace mcg
