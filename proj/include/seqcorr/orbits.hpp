#pragma once

// Rotation orbits of cyclic 0/1 sequences and their lattice-path structure.
//
// Scale a weight-k sequence of length n by one -> (n-k), zero -> (-k). The
// partial sums then end at 0, and the sequence is called a path when every
// partial sum stays nonnegative. Every rotation orbit contains a path, and
// the path is unique in its orbit exactly when gcd(n,k) = 1, which makes
// paths canonical orbit representatives in the coprime case and explains
// the division by n in orbit counting.

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigcount.hpp"
#include "sequence.hpp"

namespace seqcorr {

/// All integer-scaled partial sums nonnegative (one -> n-k, zero -> -k).
inline bool is_path(const BinarySequence& f) {
    const long long n = f.n(), k = f.weight();
    long long psum = 0;
    for (int j = 0; j < n; ++j) {
        psum += f[j] ? (n - k) : -k;
        if (psum < 0) return false;
    }
    return true;
}

struct PathForm {
    BinarySequence sequence;  // the path in the orbit
    int shift = 0;            // input rotated left by shift gives sequence
    bool is_unique = false;   // no other rotation of the input is a path
};

/// Rotate to the canonical path: start right after the first index where the
/// scaled partial sum is minimal. Rejects constant sequences.
inline PathForm path_representative(const BinarySequence& f) {
    const long long n = f.n(), k = f.weight();
    if (k == 0 || k == n)
        throw std::invalid_argument("path_representative: constant sequence has no run structure");

    long long psum = 0, best = 0;
    int best_idx = -1;        // -1: empty prefix, sum 0
    for (int j = 0; j < n; ++j) {
        psum += f[j] ? (n - k) : -k;
        if (psum < best) { best = psum; best_idx = j; }
    }
    PathForm out;
    out.shift = (best_idx + 1) % static_cast<int>(n);
    out.sequence = f.rotated(out.shift);

    // count paths among the distinct rotations
    std::vector<BinarySequence> rots;
    for (int s = 0; s < n; ++s) {
        BinarySequence r = f.rotated(s);
        bool dup = false;
        for (const auto& seen : rots)
            if (seen == r) { dup = true; break; }
        if (!dup) rots.push_back(std::move(r));
    }
    int paths = 0;
    for (const auto& r : rots)
        if (is_path(r)) ++paths;
    out.is_unique = (paths == 1);
    return out;
}

/// Cyclic occurrences of the pattern "10".
inline int count_descents(const BinarySequence& f) {
    int c = 0;
    for (int j = 0; j < f.n(); ++j)
        if (f[j] == 1 && f[(j + 1) % f.n()] == 0) ++c;
    return c;
}

/// Cyclic occurrences of the pattern "01".
inline int count_ascents(const BinarySequence& f) {
    int c = 0;
    for (int j = 0; j < f.n(); ++j)
        if (f[j] == 0 && f[(j + 1) % f.n()] == 1) ++c;
    return c;
}

struct RunDecomposition {
    // (a_i, b_i): a run of a_i ones followed by a run of b_i zeros, read
    // cyclically from the first position that begins a run of ones.
    std::vector<std::pair<int, int>> runs;

    int r() const { return static_cast<int>(runs.size()); }
    int ones() const {
        int s = 0;
        for (auto& ab : runs) s += ab.first;
        return s;
    }
};

inline RunDecomposition run_decomposition(const BinarySequence& f) {
    const int n = f.n(), k = f.weight();
    if (k == 0 || k == n)
        throw std::invalid_argument("run_decomposition: constant sequence has no run structure");
    int start = -1;
    for (int j = 0; j < n; ++j)
        if (f[j] == 1 && f[(j - 1 + n) % n] == 0) { start = j; break; }
    RunDecomposition out;
    int pos = start;
    do {
        int a = 0, b = 0;
        while (f[pos] == 1) { ++a; pos = (pos + 1) % n; }
        while (f[pos] == 0 && pos != start) { ++b; pos = (pos + 1) % n; }
        out.runs.emplace_back(a, b);
    } while (pos != start);
    return out;
}

/// Number of rotation orbits of weight-k subsets of Z_n when gcd(n,k) = 1:
/// C(n,k)/n exactly (free action on paths). Rejects gcd(n,k) > 1.
inline BigCount orbit_count(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("orbit_count: out of domain");
    if (std::gcd(n, k) != 1)
        throw std::invalid_argument("orbit_count: requires gcd(n,k) = 1");
    return div_exact(binomial(n, k), n);
}

} // namespace seqcorr
