#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "steiner/distances.hpp"
#include "steiner/error.hpp"
#include "steiner/graph.hpp"
#include "steiner/limits.hpp"

namespace steiner {

// A set of terminal vertices. Stored sorted; duplicates are rejected
// rather than silently merged.
class TerminalSet {
public:
    TerminalSet(std::vector<int> members, int n) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] < 0 || members_[i] >= n)
                throw InputError("terminal id " + std::to_string(members_[i]) + " out of range");
            if (i > 0 && members_[i] == members_[i - 1])
                throw InputError("duplicate terminal " + std::to_string(members_[i]));
        }
        if (size() < 2)
            throw InputError("terminal sets must contain at least 2 vertices");
        if (size() > n)
            throw InputError("terminal set larger than the graph");
    }

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

private:
    std::vector<int> members_;
};

namespace detail {

// Subset dynamic program over a terminal list. dp[mask][v] is the exact
// minimum edge count of a connected subgraph containing
// {terminals[i] : bit i set in mask} together with v. The recurrence
// combines bipartitions of the terminal mask at a merge vertex and then
// closes over shortest paths; with exact BFS distances a single closure
// pass suffices.
inline std::vector<std::vector<int>> steiner_dp(const DistanceMatrix& dm,
                                                const std::vector<int>& terminals) {
    const int n = dm.size();
    const int t = static_cast<int>(terminals.size());
    if (t > 24 || (std::uint64_t{1} << t) * static_cast<std::uint64_t>(n) > 50'000'000ULL)
        throw CapacityError("steiner distance DP state budget exceeded (" +
                            std::to_string(t) + " terminals on " + std::to_string(n) +
                            " vertices)");
    const std::uint32_t full = (t == 32) ? ~0u : ((std::uint32_t{1} << t) - 1);
    std::vector<std::vector<int>> dp(full + 1, std::vector<int>(n, 0));
    for (int i = 0; i < t; ++i)
        for (int v = 0; v < n; ++v) dp[std::uint32_t{1} << i][v] = dm(terminals[i], v);

    std::vector<int> merged(n);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        const std::uint32_t low = mask & (~mask + 1);
        std::fill(merged.begin(), merged.end(), INT_MAX / 2);
        // Each unordered bipartition is visited once by keeping the lowest
        // terminal on the `sub` side.
        for (std::uint32_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            const std::uint32_t rest = mask ^ sub;
            const auto& a = dp[sub];
            const auto& b = dp[rest];
            for (int v = 0; v < n; ++v) merged[v] = std::min(merged[v], a[v] + b[v]);
        }
        auto& row = dp[mask];
        for (int v = 0; v < n; ++v) {
            int best = INT_MAX / 2;
            for (int u = 0; u < n; ++u) best = std::min(best, merged[u] + dm(u, v));
            row[v] = best;
        }
    }
    return dp;
}

// Per-vertex neighborhoods as bitmasks, for graphs small enough to live
// in a single word.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

inline bool induced_connected(const std::vector<std::uint64_t>& adj, std::uint64_t world) {
    if (world == 0) return false;
    std::uint64_t reached = world & (~world + 1);
    for (;;) {
        std::uint64_t frontier = reached;
        std::uint64_t grown = reached;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grown |= adj[v] & world;
        }
        if (grown == reached) break;
        reached = grown;
    }
    return reached == world;
}

} // namespace detail

// Exact Steiner distance (diversity) of the terminal set: the number of
// edges of a minimum connected subgraph spanning it.
inline int steiner_distance(const Graph&, const TerminalSet& s, const DistanceMatrix& dm) {
    auto dp = detail::steiner_dp(dm, s.members());
    const std::uint32_t full = (std::uint32_t{1} << s.size()) - 1;
    return dp[full][s.members().front()];
}

inline int steiner_distance(const Graph& g, const TerminalSet& s) {
    return steiner_distance(g, s, all_pairs_distances(g));
}

// Independent oracle: minimum |W| - 1 over all vertex supersets W of the
// terminals whose induced subgraph is connected. Exponential in n; guarded.
inline int steiner_distance_bruteforce(const Graph& g, const TerminalSet& s,
                                       const Limits& limits = {}) {
    const int n = g.vertex_count();
    if (n > limits.steiner_bruteforce_max_n)
        throw CapacityError("steiner_distance_bruteforce is limited to n <= " +
                            std::to_string(limits.steiner_bruteforce_max_n));
    const auto adj = detail::adjacency_masks(g);
    std::uint64_t base = 0;
    for (int v : s.members()) base |= std::uint64_t{1} << v;
    std::uint64_t others = ((n == 64 ? ~0ULL : (std::uint64_t{1} << n) - 1)) & ~base;

    int best = n; // spanning tree upper bound
    // Enumerate every subset of the non-terminal vertices.
    std::uint64_t extra = 0;
    for (;;) {
        std::uint64_t world = base | extra;
        if (detail::induced_connected(adj, world)) {
            best = std::min(best, std::popcount(world) - 1);
        }
        if (extra == others) break;
        extra = (extra - others) & others; // next subset of `others`
    }
    return best;
}

// Precomputed Steiner distances for every vertex subset of a small graph.
// Backs the subset sweeps (Steiner Wiener indices, diversity axioms) when
// n fits the table cap.
class SteinerDistanceTable {
public:
    explicit SteinerDistanceTable(const Graph& g, const DistanceMatrix& dm,
                                  const Limits& limits = {})
        : n_(g.vertex_count()) {
        if (n_ > limits.full_table_max_n)
            throw CapacityError("full Steiner distance table is limited to n <= " +
                                std::to_string(limits.full_table_max_n));
        std::vector<int> all(n_);
        for (int i = 0; i < n_; ++i) all[i] = i;
        auto dp = detail::steiner_dp(dm, all);
        delta_.resize(std::size_t{1} << n_, 0);
        for (std::uint32_t mask = 1; mask < delta_.size(); ++mask) {
            const int low = std::countr_zero(mask);
            delta_[mask] = std::popcount(mask) < 2 ? 0 : dp[mask][low];
        }
    }

    explicit SteinerDistanceTable(const Graph& g, const Limits& limits = {})
        : SteinerDistanceTable(g, all_pairs_distances(g), limits) {}

    // Steiner distance of the vertex subset encoded as a bitmask; 0 for
    // sets of size <= 1 (the diversity of singletons and the empty set).
    int delta(std::uint32_t mask) const { return delta_[mask]; }
    int vertex_count() const { return n_; }

private:
    int n_;
    std::vector<int> delta_;
};

} // namespace steiner
