#pragma once

#include <vector>

#include "steiner/exact.hpp"
#include "steiner/graph.hpp"

namespace steiner {

namespace detail {

// Fraction-free Bareiss elimination. Every intermediate value is an exact
// integer (the divisions are exact by construction), so no rounding can
// occur anywhere in the pipeline. Returns the determinant.
inline BigCount bareiss_determinant(std::vector<std::vector<BigCount>>& m) {
    const int r = static_cast<int>(m.size());
    if (r == 0) return 1;
    BigCount prev = 1;
    int sign = 1;
    for (int col = 0; col < r - 1; ++col) {
        if (m[col][col] == 0) {
            int pivot = -1;
            for (int row = col + 1; row < r; ++row)
                if (m[row][col] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot == -1) return 0;
            std::swap(m[col], m[pivot]);
            sign = -sign;
        }
        for (int row = col + 1; row < r; ++row) {
            for (int j = col + 1; j < r; ++j) {
                BigCount numerator = m[row][j] * m[col][col] - m[row][col] * m[col][j];
                mpz_divexact(m[row][j].get_mpz_t(), numerator.get_mpz_t(), prev.get_mpz_t());
            }
            m[row][col] = 0;
        }
        prev = m[col][col];
    }
    return sign > 0 ? m[r - 1][r - 1] : BigCount(-m[r - 1][r - 1]);
}

} // namespace detail

// Number of spanning trees of the subgraph induced by `vertices`, by the
// matrix-tree theorem: any cofactor of the induced Laplacian. Returns 0
// when the induced subgraph is disconnected; a single vertex counts 1.
inline BigCount spanning_tree_count_induced(const Graph& g, const std::vector<int>& vertices) {
    const int t = static_cast<int>(vertices.size());
    if (t == 0) return 0;
    if (t == 1) return 1;
    // Laplacian minor: drop the row/column of vertices[0].
    std::vector<std::vector<BigCount>> minor(t - 1, std::vector<BigCount>(t - 1, 0));
    for (int i = 1; i < t; ++i)
        for (int j = i; j < t; ++j) {
            if (i == j) continue;
            if (g.has_edge(vertices[i], vertices[j])) {
                minor[i - 1][j - 1] = -1;
                minor[j - 1][i - 1] = -1;
                minor[i - 1][i - 1] += 1;
                minor[j - 1][j - 1] += 1;
            }
        }
    for (int i = 1; i < t; ++i)
        if (g.has_edge(vertices[0], vertices[i])) minor[i - 1][i - 1] += 1;

    BigCount det = detail::bareiss_determinant(minor);
    return det;
}

// Number of spanning trees of the whole (connected) graph.
inline BigCount spanning_tree_count(const Graph& g) {
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    return spanning_tree_count_induced(g, all);
}

} // namespace steiner
