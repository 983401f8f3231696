#pragma once

// Hadamard matrix assembly from four circulant blocks of odd order n, plus
// the autocorrelation bookkeeping that drives the construction: four weight
// k_i sequences work exactly when their raw autocorrelations sum to
// k_1+k_2+k_3+k_4-n in every component (equivalently, their periodic +-1
// autocorrelations sum to zero at every nonzero shift).
//
// The matrix layout uses the back-diagonal reversal R:
//     [  A    BR   CR   DR  ]
//     [ -BR   A    D'R -C'R ]
//     [ -CR  -D'R  A    B'R ]
//     [ -DR   C'R -B'R  A   ]
// (X' = transpose). Orthogonality is always confirmed by exact integer
// multiplication; nothing is trusted from the block algebra.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "autocorr.hpp"
#include "sequence.hpp"

namespace seqcorr {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Characteristic sequence of the nonzero quadratic residues mod an odd
/// prime p: bit j = 1 iff j = x^2 mod p for some x != 0. Weight (p-1)/2;
/// for p = 3 mod 4 the autocorrelation is constant (p-3)/4.
inline BinarySequence quadratic_residue_sequence(int p) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("quadratic_residue_sequence: p must be an odd prime");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(p), 0);
    for (long long x = 1; x < p; ++x) bits[static_cast<std::size_t>((x * x) % p)] = 1;
    return BinarySequence(std::move(bits));
}

struct GsQuadruple {
    std::array<BinarySequence, 4> f;

    GsQuadruple(BinarySequence f1, BinarySequence f2, BinarySequence f3, BinarySequence f4)
        : f{std::move(f1), std::move(f2), std::move(f3), std::move(f4)} {
        const int n = f[0].n();
        if (n % 2 == 0) throw std::invalid_argument("GsQuadruple: length must be odd");
        for (const auto& s : f)
            if (s.n() != n) throw std::invalid_argument("GsQuadruple: lengths differ");
    }

    int n() const { return f[0].n(); }
    int weight_sum() const { return f[0].weight() + f[1].weight() + f[2].weight() + f[3].weight(); }
};

/// The construction condition: sum of the four raw autocorrelations equals
/// weight_sum - n in every component s = 1..(n-1)/2.
inline bool gs_condition(const GsQuadruple& q) {
    const int n = q.n(), m = (n - 1) / 2;
    const int want = q.weight_sum() - n;
    std::array<AutocorrProfile, 4> prof = {autocorrelation(q.f[0]), autocorrelation(q.f[1]),
                                           autocorrelation(q.f[2]), autocorrelation(q.f[3])};
    for (int s = 0; s < m; ++s) {
        int sum = 0;
        for (const auto& p : prof) sum += p.sigma[static_cast<std::size_t>(s)];
        if (sum != want) return false;
    }
    return true;
}

/// Per-component shortfall of a partial family: constant - sum of the given
/// sequences' autocorrelations. A completion must realize exactly this.
inline std::vector<int> deficit(int constant, const std::vector<BinarySequence>& fs) {
    if (fs.empty()) throw std::invalid_argument("deficit: no sequences");
    const int n = fs[0].n();
    for (const auto& f : fs)
        if (f.n() != n) throw std::invalid_argument("deficit: lengths differ");
    const int m = n / 2;
    std::vector<int> out(static_cast<std::size_t>(m), constant);
    for (const auto& f : fs) {
        const AutocorrProfile p = autocorrelation(f);
        for (int s = 0; s < m; ++s) out[static_cast<std::size_t>(s)] -= p.sigma[static_cast<std::size_t>(s)];
    }
    return out;
}

struct CodedTriple {
    int n = 0;
    std::vector<int> digits;   // base-8: digit = 4 f1 + 2 f2 + f3
};

/// Decode three sequences from one base-8 digit string; f3 is the least
/// significant bit. Bad digits are hard errors, as is a mismatch against
/// expected weights when given.
inline std::array<BinarySequence, 3>
decode_coded_triple(const CodedTriple& t, const std::vector<int>& expected_weights = {}) {
    if (t.n < 1 || static_cast<int>(t.digits.size()) != t.n)
        throw std::invalid_argument("decode_coded_triple: digit count must equal n");
    std::array<std::vector<std::uint8_t>, 3> bits;
    for (auto& b : bits) b.resize(static_cast<std::size_t>(t.n));
    for (int j = 0; j < t.n; ++j) {
        const int d = t.digits[static_cast<std::size_t>(j)];
        if (d < 0 || d > 7) throw std::invalid_argument("decode_coded_triple: digit out of range at " + std::to_string(j));
        bits[0][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((d >> 2) & 1);
        bits[1][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((d >> 1) & 1);
        bits[2][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(d & 1);
    }
    std::array<BinarySequence, 3> out = {BinarySequence(std::move(bits[0])),
                                         BinarySequence(std::move(bits[1])),
                                         BinarySequence(std::move(bits[2]))};
    if (!expected_weights.empty()) {
        if (expected_weights.size() != 3) throw std::invalid_argument("decode_coded_triple: need 3 expected weights");
        for (int j = 0; j < 3; ++j)
            if (out[static_cast<std::size_t>(j)].weight() != expected_weights[static_cast<std::size_t>(j)])
                throw std::invalid_argument("decode_coded_triple: weight mismatch in sequence " + std::to_string(j + 1));
    }
    return out;
}

inline CodedTriple encode_coded_triple(const std::array<BinarySequence, 3>& fs) {
    const int n = fs[0].n();
    if (fs[1].n() != n || fs[2].n() != n) throw std::invalid_argument("encode_coded_triple: lengths differ");
    CodedTriple t;
    t.n = n;
    t.digits.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) t.digits.push_back(4 * fs[0][j] + 2 * fs[1][j] + fs[2][j]);
    return t;
}

/// Periodic autocorrelation of the +-1 version a = 2f - 1, at shifts
/// s = 1..floor(n/2). Computed directly from the signs; the identity
/// paf(s) = n - 4k + 4 sigma(s) is a test property, not the implementation.
inline std::vector<long long> paf(const BinarySequence& f) {
    const int n = f.n(), m = n / 2;
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = 2 * f[j] - 1;
    std::vector<long long> out(static_cast<std::size_t>(m), 0);
    for (int s = 1; s <= m; ++s) {
        long long acc = 0;
        for (int x = 0; x < n; ++x) acc += a[static_cast<std::size_t>(x)] * a[static_cast<std::size_t>((x + s) % n)];
        out[static_cast<std::size_t>(s - 1)] = acc;
    }
    return out;
}

struct SignMatrix {
    int order = 0;
    std::vector<std::int8_t> e;   // row-major, entries +-1

    int at(int i, int j) const { return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(order) + static_cast<std::size_t>(j)]; }
    void set(int i, int j, int v) { e[static_cast<std::size_t>(i) * static_cast<std::size_t>(order) + static_cast<std::size_t>(j)] = static_cast<std::int8_t>(v); }
};

/// Assemble the 4n x 4n array from a quadruple satisfying the construction
/// condition (anything else is refused). Blocks are circulants of the +-1
/// rows, composed with the back-diagonal reversal as in the layout above.
inline SignMatrix build_goethals_seidel(const GsQuadruple& q) {
    if (!gs_condition(q))
        throw std::invalid_argument("build_goethals_seidel: quadruple fails the autocorrelation sum condition");
    const int n = q.n();
    std::array<std::vector<int>, 4> a;
    for (int t = 0; t < 4; ++t) {
        a[static_cast<std::size_t>(t)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] = 2 * q.f[static_cast<std::size_t>(t)][j] - 1;
    }

    // block forms: circulant X(i,j) = a[(j-i) mod n]; XR(i,j) = a[(n-1-i-j) mod n];
    // X'R(i,j) = a[(i+j+1) mod n]
    enum Form { CIRC, BACK, BACKT };
    struct Block { int seq; Form form; int sign; };
    // rows of the array in terms of (sequence index, form, sign)
    const Block layout[4][4] = {
        {{0, CIRC, +1}, {1, BACK, +1}, {2, BACK, +1}, {3, BACK, +1}},
        {{1, BACK, -1}, {0, CIRC, +1}, {3, BACKT, +1}, {2, BACKT, -1}},
        {{2, BACK, -1}, {3, BACKT, -1}, {0, CIRC, +1}, {1, BACKT, +1}},
        {{3, BACK, -1}, {2, BACKT, +1}, {1, BACKT, -1}, {0, CIRC, +1}},
    };

    SignMatrix h;
    h.order = 4 * n;
    h.e.assign(static_cast<std::size_t>(h.order) * static_cast<std::size_t>(h.order), 0);
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj) {
            const Block& b = layout[bi][bj];
            const std::vector<int>& row = a[static_cast<std::size_t>(b.seq)];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int idx;
                    switch (b.form) {
                        case CIRC: idx = (j - i + n) % n; break;
                        case BACK: idx = ((n - 1 - i - j) % n + n) % n; break;
                        default: idx = (i + j + 1) % n; break;
                    }
                    h.set(bi * n + i, bj * n + j, b.sign * row[static_cast<std::size_t>(idx)]);
                }
        }
    return h;
}

/// Exact check H H' = order * I over the integers, entries +-1.
inline bool verify_hadamard(const SignMatrix& h) {
    const int n = h.order;
    if (n <= 0 || h.e.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) return false;
    for (auto v : h.e)
        if (v != 1 && v != -1) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long dot = 0;
            for (int t = 0; t < n; ++t)
                dot += static_cast<long long>(h.at(i, t)) * h.at(j, t);
            if (i == j ? dot != n : dot != 0) return false;
        }
    return true;
}

} // namespace seqcorr
