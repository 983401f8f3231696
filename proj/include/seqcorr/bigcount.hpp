#pragma once

// Exact integer arithmetic for counting. All distribution counts are exact;
// nothing in the library rounds or goes through floating point.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqcorr {

using BigCount = boost::multiprecision::cpp_int;
using BigRatio = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigCount& v) { return v.str(); }

/// C(n, r) for n >= 0, 0 <= r <= n. Multiplicative, exact at every step.
inline BigCount binomial(long long n, long long r) {
    if (n < 0 || r < 0 || r > n)
        throw std::invalid_argument("binomial: out of domain");
    if (r > n - r) r = n - r;
    BigCount acc = 1;
    for (long long j = 1; j <= r; ++j) {
        acc *= (n - r + j);
        acc /= j;            // exact: product of j consecutive integers is divisible by j!
    }
    return acc;
}

/// Binomial with the conventions used throughout the counting formulas:
/// C(t, t) = 1 for every integer t (negative included); 0 when r < 0,
/// when t >= 0 and r > t, or when t < 0 and r != t; ordinary C(t, r) otherwise.
inline BigCount binom_conv(long long t, long long r) {
    if (r == t) return 1;
    if (r < 0 || t < 0 || r > t) return 0;
    return binomial(t, r);
}

/// num / den asserting the division is exact. Counting formulas divide last;
/// a nonzero remainder means the formula was applied outside its domain.
inline BigCount div_exact(const BigCount& num, const BigCount& den) {
    if (den == 0) throw std::invalid_argument("div_exact: zero divisor");
    BigCount q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("div_exact: inexact division");
    return q;
}

} // namespace seqcorr
