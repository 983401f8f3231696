#pragma once

// Cyclic 0/1 sequences. Positions are indices mod n; the weight is the
// number of ones. Value type, cheap to copy at the lengths this library
// works with (n up to a few hundred).

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqcorr {

class BinarySequence {
public:
    BinarySequence() = default;

    explicit BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw std::invalid_argument("BinarySequence: empty");
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("BinarySequence: entries must be 0 or 1");
    }

    BinarySequence(std::initializer_list<int> bits) {
        bits_.reserve(bits.size());
        for (int b : bits) {
            if (b != 0 && b != 1) throw std::invalid_argument("BinarySequence: entries must be 0 or 1");
            bits_.push_back(static_cast<std::uint8_t>(b));
        }
        if (bits_.empty()) throw std::invalid_argument("BinarySequence: empty");
    }

    int n() const { return static_cast<int>(bits_.size()); }
    int weight() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

    int operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
    /// Value at index i taken mod n; accepts any integer.
    int at_mod(long long i) const {
        long long n_ = n();
        long long r = i % n_;
        if (r < 0) r += n_;
        return bits_[static_cast<std::size_t>(r)];
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    /// Left rotation: result[j] = (*this)[(j + s) mod n].
    BinarySequence rotated(int s) const {
        int n_ = n();
        s %= n_;
        if (s < 0) s += n_;
        std::vector<std::uint8_t> out(bits_.size());
        for (int j = 0; j < n_; ++j) out[j] = bits_[(j + s) % n_];
        return BinarySequence(std::move(out));
    }

    BinarySequence complemented() const {
        std::vector<std::uint8_t> out(bits_.size());
        for (std::size_t j = 0; j < bits_.size(); ++j) out[j] = bits_[j] ? 0 : 1;
        return BinarySequence(std::move(out));
    }

    /// Indices of the ones, ascending.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int j = 0; j < n(); ++j)
            if (bits_[j]) s.push_back(j);
        return s;
    }

    static BinarySequence from_support(int n, const std::vector<int>& ones) {
        if (n < 1) throw std::invalid_argument("from_support: n must be positive");
        std::vector<std::uint8_t> out(static_cast<std::size_t>(n), 0);
        for (int p : ones) {
            if (p < 0 || p >= n) throw std::invalid_argument("from_support: index out of range");
            out[static_cast<std::size_t>(p)] = 1;
        }
        return BinarySequence(std::move(out));
    }

    bool operator==(const BinarySequence& o) const { return bits_ == o.bits_; }
    bool operator!=(const BinarySequence& o) const { return bits_ != o.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// Accepts "1100100" with optional ',', ' ' or tab separators. Rejects
/// anything else, and rejects the empty string.
inline BinarySequence parse_sequence(const std::string& text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c == '0') bits.push_back(0);
        else if (c == '1') bits.push_back(1);
        else if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        else throw std::invalid_argument(std::string("parse_sequence: bad character '") + c + "'");
    }
    if (bits.empty()) throw std::invalid_argument("parse_sequence: no symbols");
    return BinarySequence(std::move(bits));
}

inline std::string format_sequence(const BinarySequence& f) {
    std::string s;
    s.reserve(static_cast<std::size_t>(f.n()));
    for (int j = 0; j < f.n(); ++j) s.push_back(f[j] ? '1' : '0');
    return s;
}

} // namespace seqcorr
