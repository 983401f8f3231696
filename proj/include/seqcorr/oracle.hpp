#pragma once

// Brute-force ground truth: enumerate all C(n,k) weight-k subsets of Z_n and
// bin them by the full autocorrelation vector. Everything the closed forms
// claim is checked against these bins in the tests.
//
// Subsets are walked in lexicographic order of the ascending position tuple;
// the order is rank-partitionable, so the walk splits into contiguous chunks
// that threads process independently and merge additively.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "autocorr.hpp"
#include "bigcount.hpp"
#include "sequence.hpp"

namespace seqcorr {

struct OracleOptions {
    int ceiling = 28;    // refuse larger n; counts stay cheap below this
    int threads = 0;     // 0: SEQCORR_THREADS env var, else hardware_concurrency
};

struct JointProfileDistribution {
    int n = 0, k = 0;
    // full sigma vector (s = 1..floor(n/2)) -> number of subsets; std::map
    // keeps the keys in lexicographic order for deterministic dumps
    std::map<std::vector<int>, BigCount> bins;
};

namespace detail {

// C(n,r) in uint64. Exact at every step; the largest intermediate value is
// C(n,r)*r, which stays below 2^64 for n <= 62 (the oracle's hard cap).
inline std::uint64_t choose64(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    std::uint64_t acc = 1;
    for (int j = 1; j <= r; ++j) {
        acc *= static_cast<std::uint64_t>(n - r + j);
        acc /= static_cast<std::uint64_t>(j);
    }
    return acc;
}

// positions of the rank-th combination (lexicographic, ascending tuple)
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
    std::vector<int> c(static_cast<std::size_t>(k));
    int v = 0;
    for (int j = 0; j < k; ++j) {
        while (true) {
            std::uint64_t block = choose64(n - 1 - v, k - 1 - j);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        c[static_cast<std::size_t>(j)] = v++;
    }
    return c;
}

// advance ascending position tuple to the lexicographic successor;
// returns false after the last combination
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int j = k - 1;
    while (j >= 0 && c[static_cast<std::size_t>(j)] == n - k + j) --j;
    if (j < 0) return false;
    int v = ++c[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) c[static_cast<std::size_t>(t)] = ++v;
    return true;
}

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SEQCORR_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace detail

/// Exhaustive joint distribution of the full autocorrelation vector.
inline JointProfileDistribution enumerate_joint(int n, int k, const OracleOptions& opts = {}) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("enumerate_joint: out of domain");
    const int hard_cap = 62;   // masks and ranks live in uint64
    if (n > opts.ceiling || n > hard_cap)
        throw std::invalid_argument("enumerate_joint: n = " + std::to_string(n) +
                                    " exceeds the enumeration ceiling " +
                                    std::to_string(std::min(opts.ceiling, hard_cap)));
    const int m = n / 2;
    JointProfileDistribution dist;
    dist.n = n; dist.k = k;

    const std::uint64_t total = detail::choose64(n, k);
    const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    int nthreads = detail::resolve_threads(opts.threads);
    if (static_cast<std::uint64_t>(nthreads) > total) nthreads = total > 0 ? static_cast<int>(total) : 1;

    auto run_chunk = [&](std::uint64_t begin, std::uint64_t count,
                         std::map<std::vector<int>, std::uint64_t>& local) {
        if (count == 0) return;
        std::vector<int> c = detail::unrank_combination(n, k, begin);
        std::vector<int> sig(static_cast<std::size_t>(m));
        for (std::uint64_t it = 0; it < count; ++it) {
            std::uint64_t mask = 0;
            for (int p : c) mask |= 1ULL << p;
            for (int s = 1; s <= m; ++s) {
                std::uint64_t rot = ((mask >> s) | (mask << (n - s))) & full;
                sig[static_cast<std::size_t>(s - 1)] =
                    static_cast<int>(__builtin_popcountll(mask & rot));
            }
            ++local[sig];
            if (it + 1 < count) detail::next_combination(c, n);
        }
    };

    std::vector<std::map<std::vector<int>, std::uint64_t>> locals(static_cast<std::size_t>(nthreads));
    if (nthreads == 1) {
        run_chunk(0, total, locals[0]);
    } else {
        const std::uint64_t chunk = total / static_cast<std::uint64_t>(nthreads);
        const std::uint64_t rem = total % static_cast<std::uint64_t>(nthreads);
        std::vector<std::thread> pool;
        std::uint64_t begin = 0;
        for (int t = 0; t < nthreads; ++t) {
            std::uint64_t count = chunk + (static_cast<std::uint64_t>(t) < rem ? 1 : 0);
            pool.emplace_back(run_chunk, begin, count, std::ref(locals[static_cast<std::size_t>(t)]));
            begin += count;
        }
        for (auto& th : pool) th.join();
    }
    for (auto& local : locals)
        for (auto& [sig, cnt] : local) dist.bins[sig] += cnt;

    BigCount check = 0;
    for (auto& [sig, cnt] : dist.bins) check += cnt;
    if (check != binomial(n, k)) throw std::logic_error("enumerate_joint: bins do not sum to C(n,k)");
    return dist;
}

/// Project the joint distribution onto one distance: counts over x = 0..k.
inline std::vector<BigCount> marginal_from_joint(const JointProfileDistribution& dist, int i) {
    const int m = dist.n / 2;
    if (i < 1 || i > m) throw std::invalid_argument("marginal_from_joint: distance out of range");
    std::vector<BigCount> out(static_cast<std::size_t>(dist.k) + 1);
    for (auto& [sig, cnt] : dist.bins)
        out[static_cast<std::size_t>(sig[static_cast<std::size_t>(i - 1)])] += cnt;
    return out;
}

/// Project onto distances (1,2): map (x,y) -> count, nonzero cells only.
inline std::map<std::pair<int, int>, BigCount>
bivariate_from_joint(const JointProfileDistribution& dist) {
    if (dist.n < 4) throw std::invalid_argument("bivariate_from_joint: needs n >= 4");
    std::map<std::pair<int, int>, BigCount> out;
    for (auto& [sig, cnt] : dist.bins) out[{sig[0], sig[1]}] += cnt;
    return out;
}

/// The set of realized autocorrelation vectors, lexicographically sorted.
inline std::vector<std::vector<int>> support(int n, int k, const OracleOptions& opts = {}) {
    auto dist = enumerate_joint(n, k, opts);
    std::vector<std::vector<int>> out;
    out.reserve(dist.bins.size());
    for (auto& [sig, cnt] : dist.bins) out.push_back(sig);
    return out;
}

} // namespace seqcorr
