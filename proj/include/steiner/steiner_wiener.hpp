#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/combinations.hpp"
#include "steiner/exact.hpp"
#include "steiner/parallel.hpp"
#include "steiner/steiner_distance.hpp"

namespace steiner {

// Value and average of a Steiner Wiener index. k is empty for the total
// index (all subsets of size >= 2).
struct SteinerIndexSummary {
    std::optional<int> k;
    BigCount value;
    ExactRatio average;
};

namespace detail {

inline void check_k_range(int k, int n) {
    if (k < 2 || k > n)
        throw InputError("subset size k must satisfy 2 <= k <= n, got k=" +
                         std::to_string(k) + " with n=" + std::to_string(n));
}

inline std::uint64_t checked_subset_count(int n, int k, const Limits& limits,
                                          const std::string& what) {
    const std::uint64_t total = binomial_u64(static_cast<std::uint64_t>(n),
                                             static_cast<std::uint64_t>(k));
    if (total > limits.max_subsets)
        throw CapacityError(what + ": C(" + std::to_string(n) + "," + std::to_string(k) +
                            ") exceeds the subset budget of " +
                            std::to_string(limits.max_subsets));
    return total;
}

} // namespace detail

// Steiner k-Wiener index over a precomputed distance table.
inline SteinerIndexSummary steiner_wiener_k(const SteinerDistanceTable& table, int k) {
    const int n = table.vertex_count();
    detail::check_k_range(k, n);
    BigCount sum = 0;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < end; ++mask)
        if (std::popcount(mask) == k) sum += table.delta(mask);
    SteinerIndexSummary summary;
    summary.k = k;
    summary.value = sum;
    summary.average = make_ratio(sum, binomial(n, k));
    return summary;
}

// Steiner k-Wiener index: the sum of Steiner distances over all C(n,k)
// k-subsets of vertices, with its average. Small graphs reuse the full
// distance table; larger ones run the subset DP per combination, swept in
// colexicographic order and partitioned across workers.
inline SteinerIndexSummary steiner_wiener_k(const Graph& g, int k, const Limits& limits = {}) {
    const int n = g.vertex_count();
    detail::check_k_range(k, n);
    const std::uint64_t total_sets =
        detail::checked_subset_count(n, k, limits, "steiner_wiener_k");

    if (n <= limits.full_table_max_n)
        return steiner_wiener_k(SteinerDistanceTable(g, limits), k);

    BigCount sum = 0;
    {
        const DistanceMatrix dm = all_pairs_distances(g);
        auto chunk_sums = map_chunks<BigCount>(
            total_sets, limits.threads, [&](std::uint64_t begin, std::uint64_t end) {
                BigCount local = 0;
                std::vector<int> idx = colex_unrank(begin, k);
                for (std::uint64_t r = begin; r < end; ++r) {
                    auto dp = detail::steiner_dp(dm, idx);
                    local += dp[(std::uint32_t{1} << k) - 1][idx.front()];
                    colex_next(idx, n);
                }
                return local;
            });
        for (const auto& part : chunk_sums) sum += part;
    }

    SteinerIndexSummary summary;
    summary.k = k;
    summary.value = sum;
    summary.average = make_ratio(sum, binomial(n, k));
    return summary;
}

// Total Steiner Wiener index over a precomputed distance table.
inline SteinerIndexSummary total_steiner_wiener(const SteinerDistanceTable& table) {
    const int n = table.vertex_count();
    if (n < 2) throw InputError("total Steiner Wiener index needs at least 2 vertices");
    BigCount sum = 0;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < end; ++mask) sum += table.delta(mask);

    SteinerIndexSummary summary;
    summary.value = sum;
    summary.average = make_ratio(sum, pow2(static_cast<unsigned long>(n)) - n - 1);
    return summary;
}

// Total Steiner Wiener index: the sum of Steiner distances over every
// vertex subset of size >= 2. The average divides by 2^n - n - 1, the
// number of such subsets.
inline SteinerIndexSummary total_steiner_wiener(const Graph& g, const Limits& limits = {}) {
    const int n = g.vertex_count();
    if (n > limits.total_steiner_wiener_max_n)
        throw CapacityError("total_steiner_wiener is limited to n <= " +
                            std::to_string(limits.total_steiner_wiener_max_n));
    return total_steiner_wiener(SteinerDistanceTable(g, limits));
}

} // namespace steiner
