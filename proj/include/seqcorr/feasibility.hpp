#pragma once

// Feasibility of a prescribed autocorrelation vector: quick necessary
// certificates, an exhaustive search that can prove absence, and a
// stochastic search that can only find witnesses.
//
// Targets are raw sigma vectors (for even n the last entry counts antipodal
// pairs twice, hence must be even). Witnesses returned by any search are
// re-verified against the target before being reported.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "autocorr.hpp"
#include "bigcount.hpp"
#include "bivariate.hpp"
#include "marginals.hpp"
#include "rng.hpp"
#include "sequence.hpp"

namespace seqcorr {

struct TargetSpec {
    int n = 0;
    int k = 0;
    std::vector<int> d;   // raw sigma targets, s = 1..floor(n/2)

    void validate_structure() const {
        if (n < 1 || k < 0 || k > n) throw std::invalid_argument("TargetSpec: bad n or k");
        if (static_cast<int>(d.size()) != n / 2)
            throw std::invalid_argument("TargetSpec: d must have floor(n/2) entries");
        for (int v : d)
            if (v < 0) throw std::invalid_argument("TargetSpec: entries must be nonnegative");
    }
};

enum class Verdict { Found, ExhaustedInfeasible, BudgetExceeded, PrunedInfeasible };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Found: return "found";
        case Verdict::ExhaustedInfeasible: return "exhausted-infeasible";
        case Verdict::BudgetExceeded: return "budget-exceeded";
        case Verdict::PrunedInfeasible: return "pruned-infeasible";
    }
    return "?";
}

struct SearchStats {
    std::uint64_t nodes = 0;      // DFS nodes or local-search steps
    std::uint64_t restarts = 0;
    double elapsed_ms = 0.0;      // diagnostic only; keep off deterministic output
};

struct SearchOutcome {
    Verdict verdict = Verdict::BudgetExceeded;
    std::optional<BinarySequence> witness;
    std::string certificate;      // set when verdict == PrunedInfeasible
    SearchStats stats;
};

struct CheckReport {
    bool passed = false;
    std::string certificate;                  // first failing certificate, empty when passed
    std::vector<std::string> certificates;    // everything that was checked and held
};

namespace detail {

// marginal for any weight 0 <= k <= n via the complement identity
// sigma_i(complement f) = sigma_i(f) + n - 2k; returns 0 outside the support
// range instead of throwing.
inline BigCount marginal_any(int n, int k, int i, int x) {
    if (x < 0 || x > k) return 0;
    if (k == 0) return x == 0 ? 1 : 0;
    if (k == n) return x == n ? 1 : 0;
    if (2 * k > n) {
        const int shift = 2 * k - n;
        if (x < shift) return 0;
        return marginal_any(n, n - k, i, x - shift);
    }
    if (n == 2) return x == 0 ? 2 : 0;   // single weight-1 case below the formula domain
    return marginal(n, k, i, x);
}

// joint (distance 1,2) count for any weight, same complement identity
inline BigCount joint_any(int n, int k, int x, int y) {
    if (x < 0 || x > k || y < 0 || y > k) return 0;
    if (k == 0) return (x == 0 && y == 0) ? 1 : 0;
    if (k == n) return (x == n && y == n) ? 1 : 0;
    if (2 * k > n) {
        const int shift = 2 * k - n;
        if (x < shift || y < shift) return 0;
        return joint_any(n, n - k, x - shift, y - shift);
    }
    return joint_count(n, k, x, y);
}

// Sum rule on the normalized form: sum d = C(k,2), after halving the
// antipodal entry for even n (that entry must then be even).
inline bool sum_rule_holds(const TargetSpec& spec) {
    const int m = static_cast<int>(spec.d.size());
    BigCount s = 0;
    for (int i = 0; i < m; ++i) s += spec.d[static_cast<std::size_t>(i)];
    if (spec.n % 2 == 0 && m >= 1) {
        const int last = spec.d[static_cast<std::size_t>(m - 1)];
        if (last % 2 != 0) return false;
        s -= last / 2;
    }
    return s == (spec.k >= 2 ? binomial(spec.k, 2) : BigCount(0));
}

} // namespace detail

/// Necessary-condition certificates, run in order: sum rule (normalized sum
/// equals C(k,2), including parity of the antipodal entry for even n), entry
/// bounds, per-distance marginal support, and the distance-(1,2) pair. The
/// first failure names its certificate; none failing is not a feasibility
/// proof.
inline CheckReport check_necessary(const TargetSpec& spec) {
    spec.validate_structure();
    CheckReport rep;
    const int n = spec.n, k = spec.k;
    const int m = static_cast<int>(spec.d.size());

    if (!detail::sum_rule_holds(spec)) {
        rep.certificate = "sum rule";
        return rep;
    }
    rep.certificates.push_back("sum rule");

    for (int i = 1; i <= m; ++i) {
        const int di = spec.d[static_cast<std::size_t>(i - 1)];
        const int cap = (std::gcd(i, n) == 1 && k < n) ? std::max(k - 1, 0) : k;
        if (di > cap) {
            rep.certificate = "entry bounds (i=" + std::to_string(i) + ")";
            return rep;
        }
    }
    rep.certificates.push_back("entry bounds");

    for (int i = 1; i <= m; ++i) {
        const int di = spec.d[static_cast<std::size_t>(i - 1)];
        if (detail::marginal_any(n, k, i, di) == 0) {
            rep.certificate = "marginal support (i=" + std::to_string(i) +
                              ", d=" + std::to_string(di) + ")";
            return rep;
        }
    }
    rep.certificates.push_back("marginal support");

    if (m >= 2 && n >= 4) {
        const int d1 = spec.d[0], d2 = spec.d[1];
        if (detail::joint_any(n, k, d1, d2) == 0) {
            rep.certificate = "pair (" + std::to_string(d1) + "," + std::to_string(d2) + ")";
            return rep;
        }
        rep.certificates.push_back("pair");
    }

    rep.passed = true;
    return rep;
}

namespace detail {

// Exhaustive DFS over path-form sequences (scaled partial sums nonnegative).
// Every orbit contains a path and sigma is rotation invariant, so searching
// paths alone is complete for feasibility both ways. Per distance s the n
// ordered incidence terms are tracked as alive (could still be 1) or locked
// (both endpoints decided 1); a prefix survives only while
// locked[s] <= d[s] <= alive[s] for every s.
class ExactSearcher {
public:
    ExactSearcher(const TargetSpec& spec, std::uint64_t budget)
        : n_(spec.n), k_(spec.k), m_(static_cast<int>(spec.d.size())),
          d_(spec.d), budget_(budget) {
        bits_.assign(static_cast<std::size_t>(n_), -1);
        term_dead_.assign(static_cast<std::size_t>(m_ * n_), 0);
        alive_.assign(static_cast<std::size_t>(m_), n_);
        locked_.assign(static_cast<std::size_t>(m_), 0);
    }

    SearchOutcome run() {
        SearchOutcome out;
        const auto t0 = std::chrono::steady_clock::now();
        const bool complete = dfs(0, 0, 0, out);
        out.stats.nodes = nodes_;
        out.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (out.verdict != Verdict::Found)
            out.verdict = complete ? Verdict::ExhaustedInfeasible : Verdict::BudgetExceeded;
        return out;
    }

private:
    // returns true while the search is exhaustive (budget not exceeded)
    bool dfs(int p, int ones, long long psum, SearchOutcome& out) {
        if (p == n_) {
            for (int s = 0; s < m_; ++s)
                if (locked_[static_cast<std::size_t>(s)] != d_[static_cast<std::size_t>(s)]) return true;
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_));
            for (int j = 0; j < n_; ++j) bits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(bits_[static_cast<std::size_t>(j)]);
            BinarySequence f(std::move(bits));
            if (autocorrelation(f).sigma != d_) throw std::logic_error("search_exact: witness failed re-verification");
            out.verdict = Verdict::Found;
            out.witness = std::move(f);
            return true;
        }
        for (int v = 1; v >= 0; --v) {
            if (v == 1 && ones == k_) continue;
            if (v == 0 && ones + (n_ - p - 1) < k_) continue;
            long long step = v ? (n_ - k_) : -static_cast<long long>(k_);
            if (psum + step < 0) continue;   // not a path prefix
            if (budget_ && nodes_ >= budget_) return false;
            ++nodes_;
            assign(p, v);
            bool ok = viable();
            bool complete = true;
            if (ok) complete = dfs(p + 1, ones + v, psum + step, out);
            unassign(p, v);
            if (out.verdict == Verdict::Found) return true;
            if (!complete) return false;
        }
        return true;
    }

    void assign(int p, int v) {
        undo_marks_.push_back(undo_stack_.size());
        bits_[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(v);
        for (int s = 1; s <= m_; ++s) {
            // ordered terms x where position p participates at distance s
            const int xs[2] = {p, (p - s + n_) % n_};
            for (int x : xs) {
                const int q = (x == p) ? (p + s) % n_ : x;   // partner endpoint
                auto& dead = term_dead_[static_cast<std::size_t>((s - 1) * n_ + x)];
                if (dead) continue;
                if (v == 0) {
                    dead = 1;
                    --alive_[static_cast<std::size_t>(s - 1)];
                    undo_stack_.push_back((s - 1) * n_ + x);
                } else if (bits_[static_cast<std::size_t>(q)] == 1) {
                    ++locked_[static_cast<std::size_t>(s - 1)];
                }
            }
        }
    }

    void unassign(int p, int v) {
        const std::size_t mark = undo_marks_.back();
        undo_marks_.pop_back();
        if (v == 0) {
            while (undo_stack_.size() > mark) {
                const int idx = undo_stack_.back();
                undo_stack_.pop_back();
                term_dead_[static_cast<std::size_t>(idx)] = 0;
                ++alive_[static_cast<std::size_t>(idx / n_)];
            }
        } else {
            for (int s = 1; s <= m_; ++s) {
                const int xs[2] = {p, (p - s + n_) % n_};
                for (int x : xs) {
                    if (term_dead_[static_cast<std::size_t>((s - 1) * n_ + x)]) continue;
                    const int q = (x == p) ? (p + s) % n_ : x;
                    if (bits_[static_cast<std::size_t>(q)] == 1)
                        --locked_[static_cast<std::size_t>(s - 1)];
                }
            }
        }
        bits_[static_cast<std::size_t>(p)] = -1;
    }

    bool viable() const {
        for (int s = 0; s < m_; ++s) {
            if (locked_[static_cast<std::size_t>(s)] > d_[static_cast<std::size_t>(s)]) return false;
            if (alive_[static_cast<std::size_t>(s)] < d_[static_cast<std::size_t>(s)]) return false;
        }
        return true;
    }

    int n_, k_, m_;
    std::vector<int> d_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::int8_t> bits_;        // -1 undecided
    std::vector<std::uint8_t> term_dead_;  // (s-1)*n + x
    std::vector<int> alive_, locked_;
    std::vector<int> undo_stack_;          // dead terms to revive, per assignment
    std::vector<std::size_t> undo_marks_;
};

} // namespace detail

/// Exhaustive search with path-form symmetry breaking and per-distance
/// envelope pruning. Within budget the answer is definitive: Found with a
/// re-verified witness, or ExhaustedInfeasible. budget = 0 means unlimited
/// (counted in DFS nodes). The structural certificates (sum rule, entry
/// bounds) run first and return PrunedInfeasible; the marginal-support and
/// pair certificates are left to check_necessary.
inline SearchOutcome search_exact(const TargetSpec& spec, std::uint64_t budget = 0,
                                  int ceiling = 40) {
    spec.validate_structure();
    if (spec.n > ceiling)
        throw std::invalid_argument("search_exact: n = " + std::to_string(spec.n) +
                                    " exceeds the exhaustive ceiling " + std::to_string(ceiling));
    SearchOutcome out;
    // structural certificates only; see check_necessary for the full chain
    const int m = static_cast<int>(spec.d.size());
    if (!detail::sum_rule_holds(spec)) {
        out.verdict = Verdict::PrunedInfeasible;
        out.certificate = "sum rule";
        return out;
    }
    for (int i = 1; i <= m; ++i) {
        const int di = spec.d[static_cast<std::size_t>(i - 1)];
        const int cap =
            (std::gcd(i, spec.n) == 1 && spec.k < spec.n) ? std::max(spec.k - 1, 0) : spec.k;
        if (di > cap) {
            out.verdict = Verdict::PrunedInfeasible;
            out.certificate = "entry bounds (i=" + std::to_string(i) + ")";
            return out;
        }
    }
    detail::ExactSearcher searcher(spec, budget);
    return searcher.run();
}

struct HeuristicParams {
    std::uint64_t seed = 1;
    int restarts = 100;
    std::uint64_t max_steps = 0;   // 0: 50 n^2 per restart
    int plateau = 0;               // 0: 2n consecutive sideways moves
};

/// Seeded stochastic local search over weight-k sequences: objective
/// sum_s (sigma_s - d_s)^2, neighborhood swaps one 1 with one 0,
/// first-improvement scan in random order, sideways moves up to the plateau
/// limit, independent restarts. Deterministic given seed. Never claims
/// infeasibility: the outcome is Found or BudgetExceeded.
inline SearchOutcome search_heuristic(const TargetSpec& spec, const HeuristicParams& params = {}) {
    spec.validate_structure();
    const int n = spec.n, k = spec.k;
    const int m = static_cast<int>(spec.d.size());
    if (!detail::sum_rule_holds(spec))
        throw std::invalid_argument("search_heuristic: target violates the sum rule");

    const std::uint64_t max_steps =
        params.max_steps ? params.max_steps : 50ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const int plateau_limit = params.plateau ? params.plateau : 2 * n;

    SearchOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](Verdict v) {
        out.verdict = v;
        out.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return out;
    };

    std::vector<std::uint8_t> f(static_cast<std::size_t>(n));
    std::vector<int> sigma(static_cast<std::size_t>(m)), trial(static_cast<std::size_t>(m));
    std::vector<int> ones, zeros;

    auto objective_of = [&](const std::vector<int>& sg) {
        long long o = 0;
        for (int s = 0; s < m; ++s) {
            const long long diff = sg[static_cast<std::size_t>(s)] - spec.d[static_cast<std::size_t>(s)];
            o += diff * diff;
        }
        return o;
    };
    auto sigma_of = [&]() {
        for (int s = 1; s <= m; ++s) {
            int acc = 0;
            for (int x = 0; x < n; ++x) acc += f[static_cast<std::size_t>(x)] * f[static_cast<std::size_t>((x + s) % n)];
            sigma[static_cast<std::size_t>(s - 1)] = acc;
        }
    };
    // sigma after moving the 1 at u to the 0 at w, written into trial
    auto probe = [&](int u, int w) {
        for (int s = 1; s <= m; ++s) {
            int acc = sigma[static_cast<std::size_t>(s - 1)];
            acc -= f[static_cast<std::size_t>((u - s + n) % n)] + f[static_cast<std::size_t>((u + s) % n)];
            auto g = [&](int p) { return p == u ? 0 : static_cast<int>(f[static_cast<std::size_t>(p)]); };
            acc += g((w - s + n) % n) + g((w + s) % n);
            trial[static_cast<std::size_t>(s - 1)] = acc;
        }
    };

    for (int restart = 0; restart < params.restarts; ++restart) {
        out.stats.restarts = static_cast<std::uint64_t>(restart) + 1;
        Xoshiro256 rng(SplitMix64(params.seed).next() ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1)));

        // random weight-k start
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int j = n - 1; j > 0; --j)
            std::swap(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(j + 1)))]);
        std::fill(f.begin(), f.end(), 0);
        for (int j = 0; j < k; ++j) f[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = 1;
        sigma_of();
        long long obj = objective_of(sigma);

        int sideways = 0;
        for (std::uint64_t step = 0; step < max_steps && obj != 0; ++step) {
            ++out.stats.nodes;
            ones.clear(); zeros.clear();
            for (int j = 0; j < n; ++j) (f[static_cast<std::size_t>(j)] ? ones : zeros).push_back(j);
            for (int j = static_cast<int>(ones.size()) - 1; j > 0; --j)
                std::swap(ones[static_cast<std::size_t>(j)], ones[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(j + 1)))]);
            for (int j = static_cast<int>(zeros.size()) - 1; j > 0; --j)
                std::swap(zeros[static_cast<std::size_t>(j)], zeros[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(j + 1)))]);

            int b_u = -1, b_w = -1;
            long long b_obj = 0;
            bool improving = false, found_side = false;
            for (int u : ones) {
                for (int w : zeros) {
                    probe(u, w);
                    const long long o = objective_of(trial);
                    if (o < obj) { b_u = u; b_w = w; b_obj = o; improving = true; break; }
                    if (o == obj && !found_side) { b_u = u; b_w = w; b_obj = o; found_side = true; }
                }
                if (improving) break;
            }
            if (!improving && (!found_side || sideways >= plateau_limit)) break;   // local minimum
            sideways = improving ? 0 : sideways + 1;
            f[static_cast<std::size_t>(b_u)] = 0;
            f[static_cast<std::size_t>(b_w)] = 1;
            sigma_of();
            obj = b_obj;
        }

        if (obj == 0) {
            BinarySequence witness(f);
            if (autocorrelation(witness).sigma != spec.d)
                throw std::logic_error("search_heuristic: witness failed re-verification");
            out.witness = std::move(witness);
            return finish(Verdict::Found);
        }
    }
    return finish(Verdict::BudgetExceeded);
}

/// Target for a supplement: d_s = constant - sigma_s(f1), searched at weight
/// k2. A negative entry is an immediate PrunedInfeasible. exact = false
/// delegates to the heuristic.
inline SearchOutcome supplement_search(const BinarySequence& f1, int constant, int k2,
                                       bool exact = true, std::uint64_t budget = 0,
                                       const HeuristicParams& params = {}) {
    const AutocorrProfile prof = autocorrelation(f1);
    TargetSpec spec;
    spec.n = f1.n();
    spec.k = k2;
    spec.d.reserve(prof.sigma.size());
    for (std::size_t s = 0; s < prof.sigma.size(); ++s) {
        const int v = constant - prof.sigma[s];
        if (v < 0) {
            SearchOutcome out;
            out.verdict = Verdict::PrunedInfeasible;
            out.certificate = "negative target entry (i=" + std::to_string(s + 1) + ")";
            return out;
        }
        spec.d.push_back(v);
    }
    spec.validate_structure();
    if (exact) return search_exact(spec, budget);
    // sum-rule violations become a certificate here rather than an exception
    if (!detail::sum_rule_holds(spec)) {
        SearchOutcome out;
        out.verdict = Verdict::PrunedInfeasible;
        out.certificate = "sum rule";
        return out;
    }
    return search_heuristic(spec, params);
}

/// The supplement target itself (for callers that want to inspect it).
inline TargetSpec supplement_target(const BinarySequence& f1, int constant, int k2) {
    const AutocorrProfile prof = autocorrelation(f1);
    TargetSpec spec;
    spec.n = f1.n();
    spec.k = k2;
    for (int v : prof.sigma) spec.d.push_back(constant - v);
    return spec;
}

} // namespace seqcorr
