#pragma once

// Exact joint distribution of the autocorrelation counts at distances 1 and 2
// over all weight-k subsets of Z_n.
//
// The count splits over compositions: with x incidences at distance 1 the
// ones form k - x runs; a is the number of distance-2 incidences realized
// inside one-runs extended by single zeros, b the number realized across.
// Both contributions are products of constrained compositions counted by
// binomials under the binom_conv conventions (the negative-argument cases
// carry the degenerate compositions).

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigcount.hpp"

namespace seqcorr {

/// Number of weight-k subsets of Z_n with x incidences at distance 1 and y at
/// distance 2 (raw counts; for n = 4 the antipodal distance-2 pairs count
/// twice, which the formula reproduces). Zero at x = k. Exact division last.
inline BigCount joint_count(int n, int k, int x, int y) {
    if (n < 4) throw std::invalid_argument("joint_count: n must be at least 4");
    if (k < 1 || 2 * k > n) throw std::invalid_argument("joint_count: requires 1 <= k <= n/2");
    if (x < 0 || x > k || y < 0 || y > k) throw std::invalid_argument("joint_count: x,y out of range");
    if (x == k) return 0;
    BigCount sum = 0;
    const int s = k + y - 2 * x;           // a + b
    for (int a = 0; a <= k - x; ++a) {
        const int b = s - a;
        if (b < 0) continue;
        BigCount term = binom_conv(k - x, a) * binom_conv(x - 1, k - x - a - 1);
        if (term == 0) continue;
        term *= binom_conv(k - x, b) * binom_conv(n - 2 * k + x - 1, k - x - b - 1);
        sum += term;
    }
    if (sum == 0) return 0;
    return div_exact(BigCount(n) * sum, k - x);
}

struct JointCount {
    int n = 0, k = 0;
    std::map<std::pair<int, int>, BigCount> table;   // nonzero cells only

    const BigCount& at(int x, int y) const {
        static const BigCount zero = 0;
        auto it = table.find({x, y});
        return it == table.end() ? zero : it->second;
    }
};

/// Full joint table; nonzero cells only, total mass C(n,k).
inline JointCount joint_table(int n, int k) {
    JointCount t;
    t.n = n; t.k = k;
    BigCount total = 0;
    for (int x = 0; x <= k; ++x)
        for (int y = 0; y <= k; ++y) {
            BigCount c = joint_count(n, k, x, y);
            if (c != 0) {
                total += c;
                t.table.emplace(std::make_pair(x, y), std::move(c));
            }
        }
    if (total != binomial(n, k)) throw std::logic_error("joint_table: counts do not sum to C(n,k)");
    return t;
}

/// Some weight-k subset has the pair (x, y) at distances (1, 2).
inline bool pair_feasible(int n, int k, int x, int y) {
    return joint_count(n, k, x, y) > 0;
}

} // namespace seqcorr
