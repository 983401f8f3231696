#pragma once

// Cyclic autocorrelation of 0/1 sequences.
//
// sigma_s(f) = sum_x f(x) f(x+s mod n), stored for s = 1..floor(n/2).
// sigma is symmetric (sigma_s = sigma_{n-s}), so these entries carry the
// whole vector; sigma_0 = weight. For even n the last stored entry counts
// every antipodal pair twice. The normalized form d halves that entry, so
// sum(d) = C(k,2) for every sequence of weight k.

#include <stdexcept>
#include <vector>

#include "sequence.hpp"

namespace seqcorr {

/// sigma at one distance s >= 0 (any s; evaluated mod n).
inline int autocorrelation_at(const BinarySequence& f, int s) {
    const int n = f.n();
    int acc = 0;
    for (int x = 0; x < n; ++x) acc += f[x] * f[(x + s) % n];
    return acc;
}

struct AutocorrProfile {
    int n = 0;
    int k = 0;
    std::vector<int> sigma;   // s = 1..floor(n/2), raw counts
    std::vector<int> d;       // normalized: equal to sigma except d[m-1] = sigma[m-1]/2 for even n

    int m() const { return static_cast<int>(sigma.size()); }

    bool operator==(const AutocorrProfile& o) const {
        return n == o.n && k == o.k && sigma == o.sigma;
    }
};

inline AutocorrProfile autocorrelation(const BinarySequence& f) {
    AutocorrProfile p;
    p.n = f.n();
    p.k = f.weight();
    const int m = p.n / 2;
    p.sigma.reserve(m);
    for (int s = 1; s <= m; ++s) p.sigma.push_back(autocorrelation_at(f, s));
    p.d = p.sigma;
    if (p.n % 2 == 0 && m >= 1) {
        // antipodal distance: each pair was counted twice
        if (p.d[m - 1] % 2 != 0) throw std::logic_error("autocorrelation: odd antipodal count");
        p.d[m - 1] /= 2;
    }
    return p;
}

} // namespace seqcorr
