#pragma once

// Exact marginal distributions of the autocorrelation count at one distance,
// over all weight-k subsets of Z_n.
//
// Two regimes cover every distance i:
//   * gcd(i,n) = 1: the count at distance i has the same distribution as at
//     distance 1, with the closed form in marginal_coprime (runs of ones).
//   * g = gcd(i,n) > 1: Z_n splits into g interleaved cycles of length n/g,
//     and the distance-i count is the sum of distance-1 counts over the
//     cycles. The distribution is a g-fold convolution of per-cycle tables.
// An empty cycle (weight 0) contributes a multiplicative factor 1.

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bigcount.hpp"

namespace seqcorr {

namespace detail {

/// Count of weight-k subsets of Z_v with exactly x incidences at distance 1,
/// valid for the full weight range 0 <= k <= v (cyclic, raw counts: for a
/// subsequence the wrap pair is a real pair). With r = k - x runs of ones the
/// count is (v/r) C(k-1, r-1) C(v-k-1, r-1); the constant subsets contribute
/// the single profile they realize.
inline BigCount runs_count(int v, int k, int x) {
    if (v < 1 || k < 0 || k > v || x < 0) return 0;
    if (k == 0) return x == 0 ? 1 : 0;
    if (k == v) return x == v ? 1 : 0;
    const int r = k - x;
    if (r < 1 || r > k) return 0;
    BigCount num = BigCount(v) * binom_conv(k - 1, r - 1) * binom_conv(v - k - 1, r - 1);
    if (num == 0) return 0;
    return div_exact(num, r);
}

/// Per-cycle base table for length v: T[k][x], 0 <= x <= k <= v.
inline const std::vector<std::vector<BigCount>>& base_table(int v) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<BigCount>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(v);
    if (it == cache.end()) {
        std::vector<std::vector<BigCount>> t(static_cast<std::size_t>(v) + 1);
        for (int k = 0; k <= v; ++k) {
            t[k].resize(static_cast<std::size_t>(k) + 1);
            for (int x = 0; x <= k; ++x) t[k][x] = runs_count(v, k, x);
        }
        it = cache.emplace(v, std::move(t)).first;
    }
    return it->second;
}

} // namespace detail

/// Distance coprime to n (distribution independent of which one): count of
/// weight-k subsets of Z_n with x incidences. Zero at x = k; exact division
/// by the run count r = k - x happens last.
inline BigCount marginal_coprime(int n, int k, int x) {
    if (n < 3) throw std::invalid_argument("marginal_coprime: n must be at least 3");
    if (k < 1 || 2 * k > n) throw std::invalid_argument("marginal_coprime: requires 1 <= k <= n/2");
    if (x < 0 || x > k) throw std::invalid_argument("marginal_coprime: x out of range");
    return detail::runs_count(n, k, x);
}

/// Distance i dividing n, i >= 2: g-fold convolution of per-cycle tables over
/// weight compositions k_1+...+k_i = k and incidence splits x_1+...+x_i = x.
/// Whole rows are memoized per (n, k, i).
inline BigCount marginal_divisor(int n, int k, int i, int x) {
    if (n < 3) throw std::invalid_argument("marginal_divisor: n must be at least 3");
    if (k < 1 || 2 * k > n) throw std::invalid_argument("marginal_divisor: requires 1 <= k <= n/2");
    if (i < 2 || 2 * i > n || n % i != 0)
        throw std::invalid_argument("marginal_divisor: i must divide n, 2 <= i <= n/2");
    if (x < 0 || x > k) throw std::invalid_argument("marginal_divisor: x out of range");

    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::vector<BigCount>> rows;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = rows.find({n, k, i});
        if (it != rows.end()) return it->second[static_cast<std::size_t>(x)];
    }

    const int v = n / i;
    const auto& t = detail::base_table(v);
    // dp[w][y]: ways to fill the cycles handled so far with total weight w
    // and total incidence count y
    std::vector<std::vector<BigCount>> dp(static_cast<std::size_t>(k) + 1,
                                          std::vector<BigCount>(static_cast<std::size_t>(k) + 1));
    dp[0][0] = 1;
    for (int part = 0; part < i; ++part) {
        std::vector<std::vector<BigCount>> nd(static_cast<std::size_t>(k) + 1,
                                              std::vector<BigCount>(static_cast<std::size_t>(k) + 1));
        for (int w = 0; w <= k; ++w)
            for (int y = 0; y <= w; ++y) {
                if (dp[w][y] == 0) continue;
                const int kmax = std::min(v, k - w);
                for (int kj = 0; kj <= kmax; ++kj)
                    for (int xj = 0; xj <= kj && y + xj <= k; ++xj) {
                        const BigCount& c = t[kj][xj];
                        if (c != 0) nd[w + kj][y + xj] += dp[w][y] * c;
                    }
            }
        dp.swap(nd);
    }
    std::vector<BigCount> row(dp[static_cast<std::size_t>(k)].begin(),
                              dp[static_cast<std::size_t>(k)].end());
    std::lock_guard<std::mutex> lock(mu);
    auto it = rows.emplace(std::make_tuple(n, k, i), std::move(row)).first;
    return it->second[static_cast<std::size_t>(x)];
}

/// Any distance 1 <= i <= floor(n/2): dispatch on g = gcd(i, n). The cycle
/// structure of x -> x+i depends only on g, so distance i and distance g
/// have identical distributions.
inline BigCount marginal(int n, int k, int i, int x) {
    if (n < 3) throw std::invalid_argument("marginal: n must be at least 3");
    if (i < 1 || 2 * i > n) throw std::invalid_argument("marginal: requires 1 <= i <= n/2");
    const int g = std::gcd(i, n);
    if (g == 1) return marginal_coprime(n, k, x);
    return marginal_divisor(n, k, g, x);
}

struct MarginalTable {
    int n = 0, k = 0, i = 0;
    std::vector<BigCount> counts;   // x = 0..k
};

/// Full row at one distance; the counts always sum to C(n,k).
inline MarginalTable marginal_table(int n, int k, int i) {
    MarginalTable t;
    t.n = n; t.k = k; t.i = i;
    t.counts.reserve(static_cast<std::size_t>(k) + 1);
    BigCount total = 0;
    for (int x = 0; x <= k; ++x) {
        t.counts.push_back(marginal(n, k, i, x));
        total += t.counts.back();
    }
    if (total != binomial(n, k)) throw std::logic_error("marginal_table: counts do not sum to C(n,k)");
    return t;
}

struct OrbitRefinement {
    int n = 0, k = 0, i = 0;
    std::vector<BigCount> b;   // x = 0..k-1; per-orbit counts
    BigCount total = 0;        // equals C(n,k)/n
};

/// Per-orbit counts b(i,x) = marginal(n,k,i,x)/n, requiring gcd(n,k) = 1
/// (rotation acts freely, so every count is divisible by n). The x = k cell
/// is omitted: sigma_i = k would make the subset a union of full step-i
/// cycles, impossible when gcd(n,k) = 1.
inline OrbitRefinement orbit_refinement(int n, int k, int i) {
    if (std::gcd(n, k) != 1)
        throw std::invalid_argument("orbit_refinement: requires gcd(n,k) = 1");
    OrbitRefinement r;
    r.n = n; r.k = k; r.i = i;
    if (marginal(n, k, i, k) != 0) throw std::logic_error("orbit_refinement: mass at x = k");
    r.b.reserve(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) {
        r.b.push_back(div_exact(marginal(n, k, i, x), n));
        r.total += r.b.back();
    }
    if (r.total != div_exact(binomial(n, k), n))
        throw std::logic_error("orbit_refinement: total mismatch");
    return r;
}

/// narayana(k, x) = marginal_coprime(2k+1, k, x) / (2k+1): the refinement row
/// for odd length 2k+1 at the central weight is the Narayana sequence.
inline BigCount narayana(int k, int x) {
    if (k < 1) throw std::invalid_argument("narayana: k must be positive");
    if (x < 0 || x > k) throw std::invalid_argument("narayana: x out of range");
    return div_exact(marginal_coprime(2 * k + 1, k, x), 2 * k + 1);
}

/// Number of rotation orbits at the central weight of an odd length:
/// C(n, (n-1)/2) / n, the Catalan number of (n-1)/2.
inline BigCount catalan_orbit(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("catalan_orbit: n must be odd, n >= 3");
    return div_exact(binomial(n, (n - 1) / 2), n);
}

struct ModeAnalysis {
    int n = 0, k = 0;
    int peak_r = 1;                 // mode in the run count r = k - x
    int peak_x = 0;                 // the same mode as an incidence count
    std::vector<BigRatio> ratios;   // ratios[j] = p_{j+2}/p_{j+1}, j = 0..k-2
    std::vector<int> ties;          // r with ratio exactly 1: p_r == p_{r+1}
};

/// Exact successive ratios of the coprime marginal in run form:
/// p_{r+1}/p_r = (k-r)(n-k-r) / (r(r+1)), strictly decreasing in r. The peak
/// is the last r whose incoming ratio is >= 1; an exact tie means two equal
/// modes and is reported rather than resolved.
inline ModeAnalysis mode_analysis(int n, int k) {
    if (n < 3) throw std::invalid_argument("mode_analysis: n must be at least 3");
    if (k < 1 || 2 * k > n) throw std::invalid_argument("mode_analysis: requires 1 <= k <= n/2");
    ModeAnalysis a;
    a.n = n; a.k = k;
    int peak = 1;
    for (int r = 1; r <= k - 1; ++r) {
        BigRatio ratio(BigCount(k - r) * (n - k - r), BigCount(r) * (r + 1));
        a.ratios.push_back(ratio);
        if (ratio >= 1) peak = r + 1;
        if (ratio == 1) a.ties.push_back(r);
    }
    a.peak_r = peak;
    a.peak_x = k - peak;
    return a;
}

} // namespace seqcorr
