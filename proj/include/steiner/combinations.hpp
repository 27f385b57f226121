#pragma once

#include <cstdint>
#include <vector>

namespace steiner {

// Saturating 64-bit binomial, sufficient for subset ranks (the sweeps are
// budget-guarded far below 2^64).
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        if (result > UINT64_MAX / num) return UINT64_MAX; // saturate
        // result * num / i is always integral at this point.
        result = result * num / i;
    }
    return result;
}

// k-subsets of {0..n-1} are enumerated in colexicographic order; rank r
// corresponds to the combinatorial number system representation
// r = sum_i C(idx[i], i+1). Parallel sweeps unrank chunk boundaries and
// then step sequentially, so chunking never changes the visit order.
inline std::vector<int> colex_unrank(std::uint64_t rank, int k) {
    std::vector<int> idx(k);
    for (int i = k; i >= 1; --i) {
        std::uint64_t c = static_cast<std::uint64_t>(i) - 1;
        // smallest c with C(c+1, i) > rank
        while (binomial_u64(c + 1, static_cast<std::uint64_t>(i)) <= rank) ++c;
        idx[i - 1] = static_cast<int>(c);
        rank -= binomial_u64(c, static_cast<std::uint64_t>(i));
    }
    return idx;
}

// Advances idx to its colex successor; returns false after the last
// combination over {0..n-1}.
inline bool colex_next(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int j = 0; j < k; ++j) {
        const int limit = (j + 1 < k) ? idx[j + 1] : n;
        if (idx[j] + 1 < limit) {
            ++idx[j];
            for (int i = 0; i < j; ++i) idx[i] = i;
            return true;
        }
    }
    return false;
}

} // namespace steiner
