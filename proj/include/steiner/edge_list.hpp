#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/graph.hpp"

namespace steiner {

// Plain-text edge-list format: a header line "n m" followed by exactly m
// lines "u v" with 0 <= u,v < n. Lines starting with '#' are comments;
// blank lines are ignored. Vertex ids must already be dense 0..n-1;
// arbitrary labels are rejected, not relabeled.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream input(text);
    std::string line;
    int lineno = 0;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(input, line)) {
            ++lineno;
            std::size_t i = 0;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size() || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    auto fail = [&](const std::string& what) -> void {
        throw InputError("line " + std::to_string(lineno) + ": " + what);
    };

    std::string content;
    if (!next_content_line(content)) {
        lineno = 1;
        fail("missing header line \"n m\"");
    }

    long n = 0, m = 0;
    {
        std::istringstream header(content);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra))
            fail("malformed header, expected \"n m\"");
        if (n < 1) fail("vertex count must be at least 1");
        if (m < 0) fail("negative edge count");
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        if (!next_content_line(content))
            fail("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
        std::istringstream edge_line(content);
        long u = 0, v = 0;
        std::string extra;
        if (!(edge_line >> u >> v) || (edge_line >> extra))
            fail("malformed edge line, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("vertex id out of range (valid ids are 0.." + std::to_string(n - 1) + ")");
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_content_line(content)) fail("trailing content after the declared edge list");

    // Re-check pair-level problems here so the diagnostic can carry context
    // the Graph constructor does not have.
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const InputError& e) {
        throw InputError(std::string("edge list invalid: ") + e.what());
    }
}

// Canonical serialization; parse_edge_list round-trips this byte-for-byte.
inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace steiner
