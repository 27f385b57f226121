#pragma once

#include <gmpxx.h>

#include <string>

#include "steiner/error.hpp"

namespace steiner {

// Arbitrary-precision nonnegative integer. Holds Steiner-tree counts,
// spanning-tree counts and index values, which overflow 64 bits already
// at modest sizes.
using BigCount = mpz_class;

// Arbitrary-precision rational, always kept in lowest terms with a
// positive denominator (mpq_class arithmetic preserves canonical form).
using ExactRatio = mpq_class;

inline ExactRatio make_ratio(const BigCount& num, const BigCount& den) {
    ExactRatio q(num, den);
    q.canonicalize();
    return q;
}

// Binomial coefficient with the conventions C(n,0) = 1 and C(n,k) = 0
// whenever n < k or k < 0.
inline BigCount binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigCount result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

inline BigCount pow2(unsigned long e) {
    BigCount result;
    mpz_ui_pow_ui(result.get_mpz_t(), 2, e);
    return result;
}

// Decimal rendering used by the JSON report: integers never pass through
// floating point.
inline std::string to_decimal(const BigCount& value) { return value.get_str(); }

// Rationals render as "p/q" in lowest terms, or as a plain integer when
// the reduced denominator is 1.
inline std::string to_decimal(const ExactRatio& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_str();
}

inline bool fits_long(const BigCount& value) { return value.fits_slong_p(); }

} // namespace steiner
