// Acceptance gate. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any fail. All numeric comparisons are exact
// integer equalities; the per-criterion time limits are part of the gate.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <seqcorr/seqcorr.hpp>

using namespace seqcorr;

namespace {

int failures = 0;

void criterion(int id, const char* label, double limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (ok) {
        std::printf("PASS %2d (%6.2fs): %s\n", id, secs, label);
    } else {
        std::printf("FAIL %2d (%6.2fs): %s%s%s\n", id, secs, label,
                    detail.empty() ? "" : " -- ", detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

BinarySequence from_mask(int n, unsigned mask) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = (mask >> j) & 1;
    return BinarySequence(std::move(bits));
}

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

const long long kGrid15_6[3][7] = {
    {140, 1050, 2100, 1400, 300, 15, 0},
    {125, 1125, 1950, 1550, 225, 30, 0},
    {0, 1215, 2430, 810, 540, 0, 10},
};
const int kDist15_6[3] = {1, 3, 5};

const long long kGrid15_7[3][7] = {
    {0, 25, 100, 175, 110, 17, 2},
    {1, 21, 105, 175, 105, 21, 1},
    {0, 0, 162, 135, 108, 18, 6},
};
const int kDist15_7[3] = {3, 4, 5};

} // namespace

int main() {
    criterion(1, "marginal grid at (15,6), closed form and exhaustive oracle", 5.0,
              [](std::string& detail) {
        bool ok = true;
        auto dist = enumerate_joint(15, 6);
        for (int r = 0; r < 3; ++r) {
            const int i = kDist15_6[r];
            auto projected = marginal_from_joint(dist, i);
            for (int x = 0; x <= 6; ++x) {
                ok &= expect(marginal(15, 6, i, x) == kGrid15_6[r][x],
                             "closed form i=" + std::to_string(i) + " x=" + std::to_string(x), detail);
                ok &= expect(projected[static_cast<std::size_t>(x)] == kGrid15_6[r][x],
                             "oracle i=" + std::to_string(i) + " x=" + std::to_string(x), detail);
            }
        }
        return ok;
    });

    criterion(2, "orbit refinement grid at (15,7) with totals 429", 5.0,
              [](std::string& detail) {
        bool ok = true;
        for (int r = 0; r < 3; ++r) {
            auto ref = orbit_refinement(15, 7, kDist15_7[r]);
            ok &= expect(ref.total == 429, "total i=" + std::to_string(kDist15_7[r]), detail);
            for (int x = 0; x < 7; ++x)
                ok &= expect(ref.b[static_cast<std::size_t>(x)] == kGrid15_7[r][x],
                             "i=" + std::to_string(kDist15_7[r]) + " x=" + std::to_string(x), detail);
        }
        return ok;
    });

    criterion(3, "length-21 refinements: 16796 and 9690 with their terms", 1.0,
              [](std::string& detail) {
        bool ok = true;
        const long long t10[10] = {1, 45, 540, 2520, 5292, 5292, 2520, 540, 45, 1};
        const long long t8[8] = {99, 924, 2772, 3465, 1925, 462, 42, 1};
        auto r10 = orbit_refinement(21, 10, 1);
        auto r8 = orbit_refinement(21, 8, 1);
        ok &= expect(r10.total == 16796, "total (21,10)", detail);
        ok &= expect(r8.total == 9690, "total (21,8)", detail);
        for (int x = 0; x < 10; ++x)
            ok &= expect(r10.b[static_cast<std::size_t>(x)] == t10[x], "(21,10) term " + std::to_string(x), detail);
        for (int x = 0; x < 8; ++x)
            ok &= expect(r8.b[static_cast<std::size_t>(x)] == t8[x], "(21,8) term " + std::to_string(x), detail);
        return ok;
    });

    criterion(4, "oracle equivalence sweep, n <= 14: marginals and pair counts", 600.0,
              [](std::string& detail) {
        bool ok = true;
        for (int n = 3; n <= 14 && ok; ++n)
            for (int k = 1; 2 * k <= n && ok; ++k) {
                auto dist = enumerate_joint(n, k);
                for (int i = 1; 2 * i <= n && ok; ++i) {
                    auto projected = marginal_from_joint(dist, i);
                    for (int x = 0; x <= k; ++x)
                        ok &= expect(projected[static_cast<std::size_t>(x)] == marginal(n, k, i, x),
                                     "marginal n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         " i=" + std::to_string(i) + " x=" + std::to_string(x), detail);
                }
                if (n < 4) continue;
                auto pairs = bivariate_from_joint(dist);
                for (int x = 0; x <= k && ok; ++x)
                    for (int y = 0; y <= k; ++y) {
                        auto it = pairs.find({x, y});
                        BigCount seen = it == pairs.end() ? BigCount(0) : it->second;
                        ok &= expect(joint_count(n, k, x, y) == seen,
                                     "joint n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         " x=" + std::to_string(x) + " y=" + std::to_string(y), detail);
                    }
            }
        return ok;
    });

    criterion(5, "pair-count spot checks and marginal consistency at (19,6)", 1.0,
              [](std::string& detail) {
        bool ok = true;
        ok &= expect(joint_count(19, 6, 4, 1) == 0, "(19,6,4,1)", detail);
        ok &= expect(joint_count(7, 3, 1, 1) == 14, "(7,3,1,1)", detail);
        ok &= expect(joint_count(7, 3, 2, 1) == 7, "(7,3,2,1)", detail);
        for (int x = 0; x <= 6; ++x) {
            BigCount s = 0;
            for (int y = 0; y <= 6; ++y) s += joint_count(19, 6, x, y);
            ok &= expect(s == marginal(19, 6, 1, x), "row sum x=" + std::to_string(x), detail);
        }
        return ok;
    });

    criterion(6, "path lemmas for every nonconstant sequence, n <= 12", 30.0,
              [](std::string& detail) {
        bool ok = true;
        for (int n = 2; n <= 12 && ok; ++n)
            for (unsigned mask = 1; mask < (1u << n) - 1 && ok; ++mask) {
                BinarySequence f = from_mask(n, mask);
                PathForm pf = path_representative(f);
                ok &= expect(is_path(pf.sequence), "representative not a path", detail);
                const int k = f.weight();
                if (std::gcd(n, k) == 1) {
                    int paths = 0;
                    for (int s = 0; s < n; ++s)
                        if (is_path(f.rotated(s))) ++paths;
                    ok &= expect(paths == 1, "coprime orbit without unique path", detail);
                    ok &= expect(pf.is_unique, "unique path not reported", detail);
                }
                ok &= expect(autocorrelation_at(f, 1) == k - count_descents(f),
                             "descent identity", detail);
            }
        return ok;
    });

    criterion(7, "length-19 pipeline: residue profile, both supplements, order 76", 30.0,
              [](std::string& detail) {
        bool ok = true;
        BinarySequence first = parse_sequence("0010100101001001010");
        BinarySequence second = parse_sequence("0001100101001001100");
        ok &= expect(autocorrelation(first).sigma == std::vector<int>({0, 3, 3, 1, 4, 3, 1, 4, 2}),
                     "sigma of first prefix", detail);
        SearchOutcome none = supplement_search(first, 4, 6);
        ok &= expect(none.verdict == Verdict::ExhaustedInfeasible, "first supplement verdict", detail);
        SearchOutcome found = supplement_search(second, 4, 6);
        ok &= expect(found.verdict == Verdict::Found && found.witness.has_value(),
                     "second supplement verdict", detail);
        BinarySequence qr = quadratic_residue_sequence(19);
        ok &= expect(autocorrelation(qr).sigma == std::vector<int>(9, 4), "residue profile", detail);
        if (!ok) return ok;
        GsQuadruple q(qr, qr, second, *found.witness);
        ok &= expect(gs_condition(q), "construction condition", detail);
        SignMatrix h = build_goethals_seidel(q);
        ok &= expect(h.order == 76, "order", detail);
        ok &= expect(verify_hadamard(h), "orthogonality", detail);
        return ok;
    });

    criterion(8, "length-79 pipeline from the fixture: order 316", 10.0,
              [](std::string& detail) {
        bool ok = true;
        GsFixture fx = load_gs_fixture(std::string(SEQCORR_REPO_ROOT) + "/fixtures/gs_n79.json");
        auto triple = decode_coded_triple(fx.triple, fx.expected_weights);
        ok &= expect(triple[0].weight() == 34 && triple[1].weight() == 34 && triple[2].weight() == 42,
                     "decoded weights", detail);
        auto miss = deficit(fx.target_constant, {triple[0], triple[1], triple[2]});
        ok &= expect(miss == fx.expected_deficit, "deficit vector", detail);
        ok &= expect(fx.fourth.has_value(), "stored fourth sequence", detail);
        if (!ok) return ok;
        ok &= expect(autocorrelation(*fx.fourth).sigma == fx.expected_deficit,
                     "fourth sequence realizes the deficit", detail);
        GsQuadruple q(triple[0], triple[1], triple[2], *fx.fourth);
        ok &= expect(gs_condition(q), "construction condition", detail);
        SignMatrix h = build_goethals_seidel(q);
        ok &= expect(h.order == 316 && verify_hadamard(h), "order 316 verification", detail);
        return ok;
    });

    criterion(9, "length-167 fixture: the open deficit vector is reproduced", 5.0,
              [](std::string& detail) {
        GsFixture fx = load_gs_fixture(std::string(SEQCORR_REPO_ROOT) + "/fixtures/gs_n167.json");
        auto triple = decode_coded_triple(fx.triple, fx.expected_weights);
        auto miss = deficit(fx.target_constant, {triple[0], triple[1], triple[2]});
        bool ok = expect(miss == fx.expected_deficit, "deficit vector", detail);
        ok &= expect(!fx.fourth.has_value(), "no fourth sequence is claimed", detail);
        return ok;
    });

    criterion(10, "property suites: conservation, divisibility, log-concavity, paf bridge, class sweep", 300.0,
              [](std::string& detail) {
        bool ok = true;
        Xoshiro256 rng(424242);

        // conservation and rotation invariance
        for (int trial = 0; trial < 300 && ok; ++trial) {
            const int n = 3 + static_cast<int>(rng.below(38));
            const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
            std::vector<int> idx(static_cast<std::size_t>(n));
            std::iota(idx.begin(), idx.end(), 0);
            for (int j = 0; j < k; ++j)
                std::swap(idx[static_cast<std::size_t>(j)],
                          idx[static_cast<std::size_t>(j) +
                              static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - j)))]);
            BinarySequence f = BinarySequence::from_support(n, {idx.begin(), idx.begin() + k});
            AutocorrProfile p = autocorrelation(f);
            BigCount total = 0;
            for (int v : p.d) total += v;
            ok &= expect(total == (k >= 2 ? binomial(k, 2) : BigCount(0)), "conservation", detail);
            const int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            ok &= expect(autocorrelation(f.rotated(s)) == p, "rotation invariance", detail);

            auto pv = paf(f);
            for (std::size_t t = 0; t < pv.size(); ++t)
                ok &= expect(pv[t] == n - 4 * k + 4 * p.sigma[t], "paf bridge", detail);
        }

        // divisibility by n under coprimality, n <= 30
        for (int n = 3; n <= 30 && ok; ++n)
            for (int k = 1; 2 * k <= n && ok; ++k) {
                if (std::gcd(n, k) != 1) continue;
                for (int i = 1; 2 * i <= n && ok; ++i)
                    for (int x = 0; x <= k; ++x)
                        ok &= expect(marginal(n, k, i, x) % n == 0, "divisibility", detail);
            }

        // log-concavity of the coprime row for all n <= 30, and the known
        // divisor-case violation in the reference grid
        for (int n = 3; n <= 30 && ok; ++n)
            for (int k = 1; 2 * k <= n && ok; ++k)
                for (int x = 1; x < k; ++x) {
                    BigCount c0 = marginal_coprime(n, k, x - 1), c1 = marginal_coprime(n, k, x),
                             c2 = marginal_coprime(n, k, x + 1);
                    ok &= expect(c1 * c1 >= c0 * c2, "log-concavity n=" + std::to_string(n) +
                                                         " k=" + std::to_string(k), detail);
                }
        ok &= expect(marginal(15, 6, 5, 3) * marginal(15, 6, 5, 3) <
                         marginal(15, 6, 5, 2) * marginal(15, 6, 5, 4),
                     "expected divisor-case violation missing", detail);

        // construction condition vs vanishing paf sums: every profile class,
        // every quadruple, n in {3,5,7,9}; both predicates computed
        // independently (sigma sums vs actual +-1 products)
        for (int n = 3; n <= 9 && ok; n += 2) {
            struct Rep { int k; std::vector<int> sigma; std::vector<long long> paf; BinarySequence f; };
            std::vector<Rep> reps;
            std::map<std::pair<int, std::vector<int>>, bool> seen;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                BinarySequence f = from_mask(n, mask);
                AutocorrProfile p = autocorrelation(f);
                if (seen.emplace(std::make_pair(p.k, p.sigma), true).second)
                    reps.push_back({p.k, p.sigma, paf(f), f});
            }
            const int m = n / 2;
            long long holds = 0, fails = 0;
            bool built = false;
            for (std::size_t a = 0; a < reps.size() && ok; ++a)
                for (std::size_t b = 0; b < reps.size() && ok; ++b)
                    for (std::size_t c = 0; c < reps.size() && ok; ++c)
                        for (std::size_t d = 0; d < reps.size(); ++d) {
                            const int want = reps[a].k + reps[b].k + reps[c].k + reps[d].k - n;
                            bool gs = true, zero = true;
                            for (int s = 0; s < m; ++s) {
                                gs = gs && (reps[a].sigma[s] + reps[b].sigma[s] + reps[c].sigma[s] +
                                                reps[d].sigma[s] == want);
                                zero = zero && (reps[a].paf[s] + reps[b].paf[s] + reps[c].paf[s] +
                                                    reps[d].paf[s] == 0);
                            }
                            if (gs != zero) {
                                ok = expect(false, "class sweep mismatch at n=" + std::to_string(n), detail);
                                break;
                            }
                            (gs ? holds : fails)++;
                            if (gs && !built) {
                                built = true;
                                GsQuadruple q(reps[a].f, reps[b].f, reps[c].f, reps[d].f);
                                SignMatrix h = build_goethals_seidel(q);
                                ok &= expect(h.order == 4 * n && verify_hadamard(h),
                                             "build from class sweep n=" + std::to_string(n), detail);
                            }
                        }
            ok &= expect(holds > 0 && fails > 0, "class sweep saw both outcomes", detail);
        }
        return ok;
    });

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "OK" : "GATE FAILED", failures);
    return failures == 0 ? 0 : 1;
}
