#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steiner/combinations.hpp"
#include "steiner/distances.hpp"
#include "steiner/error.hpp"
#include "steiner/exact.hpp"
#include "steiner/graph.hpp"
#include "steiner/limits.hpp"
#include "steiner/parallel.hpp"
#include "steiner/spanning_trees.hpp"
#include "steiner/steiner_distance.hpp"
#include "steiner/steiner_wiener.hpp"

namespace steiner {

// Exact counts of minimum Steiner trees for one terminal set: the total
// number of such trees and, per vertex, how many contain that vertex as a
// non-terminal. through[v] is 0 for every terminal v.
struct SteinerTreeCount {
    std::vector<int> terminals;
    int distance = 0; // Steiner distance of the terminal set
    BigCount total;
    std::vector<BigCount> through;
};

// Per-vertex centrality values plus the graph-level aggregates and the
// decomposition residual they must satisfy. k is empty for the total
// (size >= 2) variant. identity_residual is 0 whenever the implementation
// is correct; it is recomputed, not assumed.
struct CentralityReport {
    std::optional<int> k;
    std::vector<ExactRatio> per_vertex;
    ExactRatio sum;
    ExactRatio average;
    ExactRatio identity_residual;
};

// Shared evaluation context: distance matrix, the full Steiner distance
// table when n fits its cap, and a per-terminal-set result cache shared
// between the fixed-k and total betweenness sweeps. The sweeps spread
// terminal sets across worker threads internally; the cache is only read
// during a sweep and extended between sweeps, so results are identical
// for every thread count. External callers drive one engine from one
// thread at a time.
class SteinerCountingEngine {
public:
    explicit SteinerCountingEngine(const Graph& g, Limits limits = {})
        : g_(g), limits_(limits), dm_(all_pairs_distances(g)) {
        if (g.vertex_count() <= limits_.full_table_max_n)
            table_.emplace(g, dm_, limits_);
    }

    const Graph& graph() const { return g_; }
    const DistanceMatrix& distances() const { return dm_; }
    const Limits& limits() const { return limits_; }
    const SteinerDistanceTable* table() const { return table_ ? &*table_ : nullptr; }

    int steiner_distance_of(const std::vector<int>& members) {
        if (members.size() == 1) return 0;
        if (table_) {
            std::uint32_t mask = 0;
            for (int v : members) mask |= std::uint32_t{1} << v;
            return table_->delta(mask);
        }
        auto dp = detail::steiner_dp(dm_, members);
        return dp[(std::uint32_t{1} << members.size()) - 1][members.front()];
    }

    // Counts minimum Steiner trees for the terminal set. A minimum Steiner
    // tree has exactly distance+1 vertices and is a spanning tree of the
    // subgraph induced by its own vertex set, so the count is the sum of
    // induced spanning-tree counts over all supersets of that size.
    SteinerTreeCount count(const TerminalSet& s) {
        if (cache_enabled()) {
            if (auto it = cache_.find(s.members()); it != cache_.end()) return it->second;
        }
        SteinerTreeCount result = compute_count(s.members());
        if (cache_enabled()) cache_.emplace(s.members(), result);
        return result;
    }

    CentralityReport k_steiner_betweenness(int k) {
        const int n = g_.vertex_count();
        detail::check_k_range(k, n);
        CentralityReport report;
        report.k = k;
        report.per_vertex.assign(n, ExactRatio(0));

        BigCount delta_sum = sweep(k, report.per_vertex);

        finalize_sums(report);
        const BigCount sw_k = table_ ? steiner_wiener_k(*table_, k).value
                                     : steiner_wiener_k(g_, k, limits_).value;
        if (delta_sum != sw_k)
            throw Error("internal inconsistency: subset sweep and Steiner Wiener index disagree");
        report.identity_residual =
            report.sum - ExactRatio(sw_k - (k - 1) * binomial(n, k));
        return report;
    }

    CentralityReport total_steiner_betweenness() {
        const int n = g_.vertex_count();
        if (n > limits_.total_betweenness_max_n)
            throw CapacityError("total_steiner_betweenness is limited to n <= " +
                                std::to_string(limits_.total_betweenness_max_n));
        if (n < 2) throw InputError("total Steiner betweenness needs at least 2 vertices");
        CentralityReport report;
        report.per_vertex.assign(n, ExactRatio(0));
        for (int k = 2; k <= n - 1; ++k) sweep(k, report.per_vertex);

        finalize_sums(report);
        const BigCount sw_total =
            (table_ ? total_steiner_wiener(*table_) : total_steiner_wiener(g_, limits_)).value;
        report.identity_residual =
            report.sum -
            ExactRatio(sw_total - pow2(static_cast<unsigned long>(n - 1)) * (n - 2) - 1);
        return report;
    }

private:
    bool cache_enabled() const { return g_.vertex_count() <= 16; }

    void finalize_sums(CentralityReport& report) const {
        report.sum = 0;
        for (const auto& value : report.per_vertex) report.sum += value;
        report.average = report.sum / g_.vertex_count();
    }

    SteinerTreeCount compute_count(const std::vector<int>& members) {
        const int n = g_.vertex_count();
        const int k = static_cast<int>(members.size());
        SteinerTreeCount result;
        result.terminals = members;
        result.distance = steiner_distance_of(members);
        result.total = 0;
        result.through.assign(n, BigCount(0));

        const int tree_vertices = result.distance + 1;
        const int extra = tree_vertices - k;
        std::vector<char> is_terminal(n, 0);
        for (int v : members) is_terminal[v] = 1;
        std::vector<int> others;
        others.reserve(n - k);
        for (int v = 0; v < n; ++v)
            if (!is_terminal[v]) others.push_back(v);

        const std::uint64_t supersets =
            binomial_u64(static_cast<std::uint64_t>(others.size()),
                         static_cast<std::uint64_t>(extra));
        if (supersets > limits_.max_subsets)
            throw CapacityError("count_steiner_trees: C(" + std::to_string(others.size()) +
                                "," + std::to_string(extra) +
                                ") supersets exceed the subset budget");

        std::vector<int> world(members);
        world.resize(static_cast<std::size_t>(tree_vertices));
        if (extra == 0) {
            result.total = spanning_tree_count_induced(g_, members);
        } else {
            std::vector<int> pick(extra);
            for (int i = 0; i < extra; ++i) pick[i] = i;
            do {
                for (int i = 0; i < extra; ++i) world[k + i] = others[pick[i]];
                BigCount trees = spanning_tree_count_induced(g_, world);
                if (trees != 0) {
                    result.total += trees;
                    for (int i = 0; i < extra; ++i) result.through[world[k + i]] += trees;
                }
            } while (colex_next(pick, static_cast<int>(others.size())));
        }

        if (result.total == 0)
            throw Error("internal inconsistency: no Steiner tree found at the minimum size");
        return result;
    }

    // One pass over all k-subsets in colexicographic order, adding each
    // vertex's through-fraction into `accumulate`. Returns the sum of
    // Steiner distances seen (the k-Wiener contribution of the sweep).
    // Chunks run on worker threads and are folded in rank order, so the
    // result is independent of the thread count.
    BigCount sweep(int k, std::vector<ExactRatio>& accumulate) {
        const int n = g_.vertex_count();
        const std::uint64_t total_sets =
            detail::checked_subset_count(n, k, limits_, "steiner betweenness sweep");

        struct Chunk {
            std::vector<ExactRatio> per_vertex;
            BigCount delta_sum;
            std::vector<std::pair<std::vector<int>, SteinerTreeCount>> fresh;
        };

        auto chunks = map_chunks<Chunk>(
            total_sets, limits_.threads, [&](std::uint64_t begin, std::uint64_t end) {
                Chunk local;
                local.per_vertex.assign(n, ExactRatio(0));
                local.delta_sum = 0;
                std::vector<int> members = colex_unrank(begin, k);
                SteinerTreeCount scratch;
                for (std::uint64_t r = begin; r < end; ++r) {
                    const SteinerTreeCount* counted = nullptr;
                    if (cache_enabled()) {
                        if (auto it = cache_.find(members); it != cache_.end())
                            counted = &it->second;
                        if (counted == nullptr) {
                            local.fresh.emplace_back(members, compute_count(members));
                            counted = &local.fresh.back().second;
                        }
                    } else {
                        scratch = compute_count(members);
                        counted = &scratch;
                    }
                    local.delta_sum += counted->distance;
                    for (int v = 0; v < n; ++v)
                        if (counted->through[v] != 0)
                            local.per_vertex[v] += make_ratio(counted->through[v], counted->total);
                    colex_next(members, n);
                }
                return local;
            });

        BigCount delta_sum = 0;
        for (auto& chunk : chunks) {
            for (int v = 0; v < n; ++v) accumulate[v] += chunk.per_vertex[v];
            delta_sum += chunk.delta_sum;
            if (cache_enabled())
                for (auto& [key, value] : chunk.fresh) cache_.emplace(std::move(key), std::move(value));
        }
        return delta_sum;
    }

    const Graph& g_;
    Limits limits_;
    DistanceMatrix dm_;
    std::optional<SteinerDistanceTable> table_;
    std::map<std::vector<int>, SteinerTreeCount> cache_;
};

inline SteinerTreeCount count_steiner_trees(const Graph& g, const TerminalSet& s,
                                            const Limits& limits = {}) {
    SteinerCountingEngine engine(g, limits);
    return engine.count(s);
}

inline CentralityReport k_steiner_betweenness(const Graph& g, int k, const Limits& limits = {}) {
    SteinerCountingEngine engine(g, limits);
    return engine.k_steiner_betweenness(k);
}

inline CentralityReport total_steiner_betweenness(const Graph& g, const Limits& limits = {}) {
    SteinerCountingEngine engine(g, limits);
    return engine.total_steiner_betweenness();
}

// Both routes to the average k-Steiner betweenness: the definition
// (average of the per-vertex values) and the closed form
// C(n,k)/n * (average Steiner k-Wiener - k + 1). They are equal for every
// connected graph; computing both keeps the equality an executable check.
inline ExactRatio average_k_steiner_betweenness(const Graph& g, int k,
                                                const Limits& limits = {}) {
    const int n = g.vertex_count();
    const CentralityReport report = k_steiner_betweenness(g, k, limits);
    const SteinerIndexSummary sw = steiner_wiener_k(g, k, limits);
    ExactRatio closed_form =
        make_ratio(binomial(n, k), n) * (sw.average - (k - 1));
    if (closed_form != report.average)
        throw Error("internal inconsistency: average betweenness routes disagree");
    return report.average;
}

// Brute-force oracle: every edge subset of size equal to the Steiner
// distance that forms a tree containing the terminals. Used only to
// validate count_steiner_trees; independent of the matrix-tree route (the
// distance itself comes from the superset oracle, not the DP).
inline std::vector<std::vector<Edge>> enumerate_min_steiner_trees(const Graph& g,
                                                                  const TerminalSet& s,
                                                                  const Limits& limits = {}) {
    const int n = g.vertex_count();
    if (n > limits.enumerate_trees_max_n)
        throw CapacityError("enumerate_min_steiner_trees is limited to n <= " +
                            std::to_string(limits.enumerate_trees_max_n));
    const int target = steiner_distance_bruteforce(g, s, limits);
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());

    const std::uint64_t combos = binomial_u64(static_cast<std::uint64_t>(m),
                                              static_cast<std::uint64_t>(target));
    if (combos > limits.max_subsets)
        throw CapacityError("enumerate_min_steiner_trees: C(" + std::to_string(m) + "," +
                            std::to_string(target) + ") exceeds the subset budget");

    std::uint64_t terminal_mask = 0;
    for (int v : s.members()) terminal_mask |= std::uint64_t{1} << v;

    std::vector<std::vector<Edge>> trees;
    std::vector<int> pick(target);
    for (int i = 0; i < target; ++i) pick[i] = i;
    std::vector<int> parent(n);
    do {
        std::uint64_t vertex_mask = 0;
        for (int i = 0; i < target; ++i) {
            vertex_mask |= std::uint64_t{1} << edges[pick[i]].first;
            vertex_mask |= std::uint64_t{1} << edges[pick[i]].second;
        }
        if (std::popcount(vertex_mask) != target + 1) continue;
        if ((vertex_mask & terminal_mask) != terminal_mask) continue;
        // Acyclicity via union-find; with target edges over target+1
        // vertices this also implies connectivity.
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (int i = 0; i < target && acyclic; ++i) {
            int a = find(edges[pick[i]].first);
            int b = find(edges[pick[i]].second);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        if (!acyclic) continue;
        std::vector<Edge> tree;
        tree.reserve(static_cast<std::size_t>(target));
        for (int i = 0; i < target; ++i) tree.push_back(edges[pick[i]]);
        trees.push_back(std::move(tree));
    } while (colex_next(pick, m));
    return trees;
}

} // namespace steiner
