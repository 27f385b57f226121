#pragma once

// Shared test corpora and independent oracles. Everything here is
// deterministic: corpora are pure functions of hard-coded seeds.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "steiner/steiner.hpp"

namespace testutil {

using steiner::BigCount;
using steiner::ExactRatio;
using steiner::Graph;

struct NamedGraph {
    std::string name;
    Graph graph;
};

// Random connected graphs with varied edge density, n in [n_min, n_max].
// Seeds are fixed so every run sees the same corpus.
inline std::vector<NamedGraph> random_graph_corpus(int count, int n_min, int n_max) {
    static const int percents[] = {20, 35, 50, 65, 80};
    std::vector<NamedGraph> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int n = n_min + i % (n_max - n_min + 1);
        const int percent = percents[(i / (n_max - n_min + 1)) % 5];
        const std::uint64_t seed = 1000 + i;
        corpus.push_back({"gnp(n=" + std::to_string(n) + ",p=" + std::to_string(percent) +
                              "%,seed=" + std::to_string(seed) + ")",
                          steiner::generate_family(steiner::Family::gnp_connected,
                                                   {n, percent}, seed)});
    }
    return corpus;
}

inline std::vector<NamedGraph> random_tree_corpus(int count, int n_min, int n_max) {
    std::vector<NamedGraph> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int n = n_min + i % (n_max - n_min + 1);
        const std::uint64_t seed = 5000 + i;
        corpus.push_back({"tree(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                          steiner::generate_family(steiner::Family::random_tree, {n}, seed)});
    }
    return corpus;
}

// A small deterministic zoo of structured graphs, capped at max_n vertices.
inline std::vector<NamedGraph> family_zoo(int max_n) {
    using steiner::Family;
    using steiner::generate_family;
    std::vector<NamedGraph> zoo;
    auto add = [&](const std::string& name, Family f, std::vector<int> params) {
        Graph g = generate_family(f, params);
        if (g.vertex_count() <= max_n) zoo.push_back({name, std::move(g)});
    };
    for (int n = 2; n <= 7; ++n) add("P" + std::to_string(n), Family::path, {n});
    for (int n = 3; n <= 7; ++n) add("C" + std::to_string(n), Family::cycle, {n});
    for (int n = 4; n <= 7; ++n) add("K1," + std::to_string(n - 1), Family::star, {n});
    for (int n = 3; n <= 6; ++n) add("K" + std::to_string(n), Family::complete, {n});
    add("K2,2", Family::complete_bipartite, {2, 2});
    add("K2,3", Family::complete_bipartite, {2, 3});
    add("K3,3", Family::complete_bipartite, {3, 3});
    add("Q2", Family::hypercube, {2});
    add("Q3", Family::hypercube, {3});
    add("grid2x3", Family::grid, {2, 3});
    add("grid2x4", Family::grid, {2, 4});
    add("grid3x3", Family::grid, {3, 3});
    return zoo;
}

// Mixed corpus used by the exhaustive oracle tests.
inline std::vector<NamedGraph> small_zoo(int max_n) {
    auto zoo = family_zoo(max_n);
    for (auto& entry : random_graph_corpus(20, 4, std::min(max_n, 8)))
        if (entry.graph.vertex_count() <= max_n) zoo.push_back(std::move(entry));
    for (auto& entry : random_tree_corpus(8, 2, std::min(max_n, 8)))
        if (entry.graph.vertex_count() <= max_n) zoo.push_back(std::move(entry));
    return zoo;
}

// All k-subsets of {0..n-1}, in the library's colexicographic order.
inline std::vector<std::vector<int>> all_subsets(int n, int k) {
    std::vector<std::vector<int>> subsets;
    if (k > n) return subsets;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
        subsets.push_back(idx);
    } while (steiner::colex_next(idx, n));
    return subsets;
}

// Independent oracle for geodesic betweenness: explicitly enumerates every
// shortest path by walking distance-decreasing edges, and tallies interior
// vertices. No shortest-path counting DP is involved.
inline std::vector<ExactRatio> brute_force_geodesic_betweenness(const Graph& g) {
    const int n = g.vertex_count();
    const auto dm = steiner::all_pairs_distances(g);
    std::vector<ExactRatio> centrality(n, ExactRatio(0));
    std::vector<std::vector<int>> paths;
    std::vector<int> current;

    std::function<void(int, int)> walk = [&](int v, int target) {
        current.push_back(v);
        if (v == target) {
            paths.push_back(current);
        } else {
            for (int w : g.neighbors(v))
                if (dm(w, target) + 1 == dm(v, target)) walk(w, target);
        }
        current.pop_back();
    };

    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            paths.clear();
            walk(x, y);
            const BigCount total = static_cast<long>(paths.size());
            std::vector<long> through(n, 0);
            for (const auto& path : paths)
                for (std::size_t i = 1; i + 1 < path.size(); ++i) ++through[path[i]];
            for (int v = 0; v < n; ++v)
                if (through[v] != 0)
                    centrality[v] += steiner::make_ratio(through[v], total);
        }
    return centrality;
}

} // namespace testutil
