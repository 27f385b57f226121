#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

using Edge = std::pair<int, int>; // canonical: first < second

// Immutable simple undirected connected graph on vertices 0..n-1.
// Construction validates simplicity and connectivity; every analysis in
// the library relies on those invariants, so violations are hard errors.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 1) throw InputError("graph must have at least one vertex");
        adjacency_.resize(n);
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InputError("vertex id out of range in edge (" +
                                 std::to_string(u) + ", " + std::to_string(v) + ")");
            if (u == v)
                throw InputError("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw InputError("duplicate edge (" + std::to_string(edges[i].first) +
                                 ", " + std::to_string(edges[i].second) + ")");
        for (auto [u, v] : edges) {
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
        edges_ = std::move(edges);
        if (!reaches_all_from_zero())
            throw InputError("graph is not connected");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges in canonical order: u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    bool has_edge(int u, int v) const {
        const auto& nbrs = adjacency_[u];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    bool is_tree() const { return edge_count() == n_ - 1; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    bool reaches_all_from_zero() const {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adjacency_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_;
    }

    int n_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Edge> edges_;
};

// 2-colorability check; used as an independent witness that recognized
// modular graphs are bipartite.
inline bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (color[w] == -1) {
                color[w] = color[u] ^ 1;
                stack.push_back(w);
            } else if (color[w] == color[u]) {
                return false;
            }
        }
    }
    return true;
}

// Sizes of the connected components of the subgraph induced by the
// vertices with keep[v] != 0.
inline std::vector<int> component_sizes(const Graph& g, const std::vector<char>& keep) {
    const int n = g.vertex_count();
    std::vector<int> sizes;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (!keep[s] || seen[s]) continue;
        int count = 0;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++count;
            for (int w : g.neighbors(u))
                if (keep[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        sizes.push_back(count);
    }
    return sizes;
}

} // namespace steiner
