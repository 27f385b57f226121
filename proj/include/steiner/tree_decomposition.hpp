#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/exact.hpp"
#include "steiner/graph.hpp"

namespace steiner {

// Component sizes of a forest. Only the sizes matter for the selection
// counts below.
struct ForestPartition {
    std::vector<int> component_sizes;

    int components() const { return static_cast<int>(component_sizes.size()); }
    int total_vertices() const {
        int total = 0;
        for (int size : component_sizes) total += size;
        return total;
    }
};

// Number of ways to choose k vertices of the forest that touch at least
// two components. Closed form by inclusion-exclusion: all C(N,k) choices
// minus those confined to a single component. This is the fast path; the
// literal sum over part assignments below is kept as the executable
// reference definition.
inline BigCount split_selection_count(const ForestPartition& fp, int k) {
    if (k < 2) throw InputError("split selections need k >= 2");
    BigCount result = binomial(fp.total_vertices(), k);
    for (int size : fp.component_sizes) result -= binomial(size, k);
    return result;
}

// Reference definition: sum over all assignments (l_1,...,l_p) with
// sum l_i = k and every l_i < k of the products of per-component
// binomials. A single-component forest yields 0.
inline BigCount split_selection_count_by_partitions(const ForestPartition& fp, int k) {
    if (k < 2) throw InputError("split selections need k >= 2");
    const auto& sizes = fp.component_sizes;
    BigCount total = 0;
    // l[i] assigned recursively; remaining tracks k minus the prefix sum.
    std::vector<int> l(sizes.size(), 0);
    auto recurse = [&](auto&& self, std::size_t i, int remaining, const BigCount& product) -> void {
        if (i + 1 == sizes.size()) {
            if (remaining < k) // every part must stay below k
                total += product * binomial(sizes[i], remaining);
            return;
        }
        const int cap = std::min(remaining, k - 1);
        for (int pick = 0; pick <= cap; ++pick)
            self(self, i + 1, remaining - pick, product * binomial(sizes[i], pick));
    };
    if (!sizes.empty()) recurse(recurse, 0, k, BigCount(1));
    return total;
}

namespace detail {

inline void require_tree(const Graph& g, const std::string& what) {
    if (!g.is_tree())
        throw InputError(what + " requires a tree; the input has " +
                         std::to_string(g.edge_count()) + " edges on " +
                         std::to_string(g.vertex_count()) + " vertices");
}

} // namespace detail

inline ForestPartition partition_after_edge_removal(const Graph& tree, const Edge& e) {
    const int n = tree.vertex_count();
    // Flood from e.first avoiding the removed edge; the rest is the second side.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{e.first};
    seen[e.first] = 1;
    int side = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : tree.neighbors(u)) {
            if (u == e.first && w == e.second) continue;
            if (u == e.second && w == e.first) continue;
            if (!seen[w]) {
                seen[w] = 1;
                ++side;
                stack.push_back(w);
            }
        }
    }
    return ForestPartition{{side, n - side}};
}

inline ForestPartition partition_after_vertex_removal(const Graph& tree, int v) {
    const int n = tree.vertex_count();
    std::vector<char> keep(n, 1);
    keep[v] = 0;
    return ForestPartition{component_sizes(tree, keep)};
}

// Steiner k-Wiener index of a tree from edge contributions: each edge is
// counted once per k-subset whose Steiner tree uses it, which is the
// split-selection count of the two components it separates.
inline BigCount sw_k_edge_decomposition(const Graph& tree, int k) {
    detail::require_tree(tree, "sw_k_edge_decomposition");
    const int n = tree.vertex_count();
    if (k < 2 || k > n)
        throw InputError("k must satisfy 2 <= k <= n");
    BigCount total = 0;
    for (const Edge& e : tree.edges())
        total += split_selection_count(partition_after_edge_removal(tree, e), k);
    return total;
}

// Steiner k-Wiener index of a tree from vertex contributions: each vertex
// is counted once per k-subset whose Steiner tree has it as a non-terminal
// vertex, plus (k-1) per subset. Pendant removals leave one component and
// contribute nothing.
inline BigCount sw_k_vertex_decomposition(const Graph& tree, int k) {
    detail::require_tree(tree, "sw_k_vertex_decomposition");
    const int n = tree.vertex_count();
    if (k < 2 || k > n)
        throw InputError("k must satisfy 2 <= k <= n");
    BigCount total = 0;
    for (int v = 0; v < n; ++v) {
        if (tree.degree(v) <= 1) continue;
        total += split_selection_count(partition_after_vertex_removal(tree, v), k);
    }
    return total + (k - 1) * binomial(n, k);
}

} // namespace steiner
