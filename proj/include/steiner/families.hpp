#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/graph.hpp"
#include "steiner/prng.hpp"

namespace steiner {

enum class Family {
    path,
    cycle,
    star,
    complete,
    complete_bipartite,
    hypercube,
    grid,
    random_tree,
    gnp_connected,
};

inline Family parse_family(std::string name) {
    for (auto& c : name)
        if (c == '-') c = '_';
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "complete") return Family::complete;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "hypercube") return Family::hypercube;
    if (name == "grid") return Family::grid;
    if (name == "random_tree") return Family::random_tree;
    if (name == "gnp_connected") return Family::gnp_connected;
    throw InputError("unknown graph family \"" + name + "\"");
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete-bipartite";
        case Family::hypercube: return "hypercube";
        case Family::grid: return "grid";
        case Family::random_tree: return "random-tree";
        case Family::gnp_connected: return "gnp-connected";
    }
    return "?";
}

namespace detail {

inline void require_params(const std::vector<int>& params, std::size_t count,
                           const std::string& what) {
    if (params.size() != count)
        throw InputError(what + " expects " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
}

inline int positive_param(int value, const std::string& what, int minimum = 1) {
    if (value < minimum)
        throw InputError(what + " must be at least " + std::to_string(minimum) +
                         ", got " + std::to_string(value));
    return value;
}

// Prufer-sequence decoding; the sequence itself is drawn from the seeded
// splitmix64 stream, so trees are reproducible across platforms.
inline std::vector<Edge> random_tree_edges(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    if (n == 1) return edges;
    if (n == 2) return {{0, 1}};
    std::vector<int> prufer(n - 2);
    for (auto& p : prufer) p = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    std::vector<int> degree(n, 1);
    for (int p : prufer) ++degree[p];
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int p : prufer) {
        edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
        if (--degree[p] == 1 && p < ptr) {
            leaf = p;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
    return edges;
}

} // namespace detail

// Deterministic generator for the graph families used throughout the test
// corpus. Output is a pure function of (family, params, seed).
//
// Parameters per family:
//   path n; cycle n (n >= 3); star n; complete n;
//   complete_bipartite a b; hypercube d (d >= 1); grid rows cols;
//   random_tree n; gnp_connected n [edge_percent, default 50].
inline Graph generate_family(Family family, const std::vector<int>& params,
                             std::optional<std::uint64_t> seed = std::nullopt) {
    using detail::positive_param;
    using detail::require_params;
    std::vector<Edge> edges;
    switch (family) {
        case Family::path: {
            require_params(params, 1, "path");
            int n = positive_param(params[0], "path length");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph(n, std::move(edges));
        }
        case Family::cycle: {
            require_params(params, 1, "cycle");
            int n = positive_param(params[0], "cycle length", 3);
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            return Graph(n, std::move(edges));
        }
        case Family::star: {
            require_params(params, 1, "star");
            int n = positive_param(params[0], "star size");
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            return Graph(n, std::move(edges));
        }
        case Family::complete: {
            require_params(params, 1, "complete");
            int n = positive_param(params[0], "complete size");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, std::move(edges));
        }
        case Family::complete_bipartite: {
            require_params(params, 2, "complete_bipartite");
            int a = positive_param(params[0], "left part size");
            int b = positive_param(params[1], "right part size");
            for (int u = 0; u < a; ++u)
                for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
            return Graph(a + b, std::move(edges));
        }
        case Family::hypercube: {
            require_params(params, 1, "hypercube");
            int d = positive_param(params[0], "hypercube dimension");
            if (d > 20) throw InputError("hypercube dimension too large");
            int n = 1 << d;
            for (int u = 0; u < n; ++u)
                for (int bit = 0; bit < d; ++bit) {
                    int v = u ^ (1 << bit);
                    if (u < v) edges.emplace_back(u, v);
                }
            return Graph(n, std::move(edges));
        }
        case Family::grid: {
            require_params(params, 2, "grid");
            int rows = positive_param(params[0], "grid rows");
            int cols = positive_param(params[1], "grid cols");
            auto at = [cols](int r, int c) { return r * cols + c; };
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) {
                    if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
                    if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
                }
            return Graph(rows * cols, std::move(edges));
        }
        case Family::random_tree: {
            require_params(params, 1, "random_tree");
            int n = positive_param(params[0], "random_tree size");
            SplitMix64 rng(seed.value_or(0));
            return Graph(n, detail::random_tree_edges(n, rng));
        }
        case Family::gnp_connected: {
            if (params.size() != 1 && params.size() != 2)
                throw InputError("gnp_connected expects n [edge_percent]");
            int n = positive_param(params[0], "gnp_connected size");
            int percent = params.size() == 2 ? params[1] : 50;
            if (percent < 1 || percent > 100)
                throw InputError("gnp_connected edge percent must be in 1..100");
            SplitMix64 rng(seed.value_or(0));
            // Rejection sampling: resample the whole graph until connected.
            for (int attempt = 0; attempt < 100000; ++attempt) {
                edges.clear();
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (rng.next_percent(static_cast<unsigned>(percent)))
                            edges.emplace_back(u, v);
                try {
                    return Graph(n, std::move(edges));
                } catch (const InputError&) {
                    edges.clear();
                }
            }
            throw InputError("gnp_connected failed to draw a connected graph; raise the edge percent");
        }
    }
    throw InputError("unknown family");
}

} // namespace steiner
