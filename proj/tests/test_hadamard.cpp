#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <seqcorr/feasibility.hpp>
#include <seqcorr/hadamard.hpp>
#include <seqcorr/io.hpp>
#include <seqcorr/rng.hpp>

#include "test_util.hpp"

using namespace seqcorr;

namespace {

const std::string kRoot = SEQCORR_REPO_ROOT;

std::vector<long long> paf_sum(const GsQuadruple& q) {
    std::vector<long long> total(static_cast<std::size_t>(q.n() / 2), 0);
    for (const auto& f : q.f) {
        auto p = paf(f);
        for (std::size_t s = 0; s < p.size(); ++s) total[s] += p[s];
    }
    return total;
}

} // namespace

TEST_CASE("quadratic residue sequences") {
    BinarySequence q7 = quadratic_residue_sequence(7);
    CHECK(format_sequence(q7) == "0110100");
    CHECK(q7.weight() == 3);

    for (int p : {3, 7, 11, 19, 23, 31, 43, 59}) {
        BinarySequence q = quadratic_residue_sequence(p);
        CHECK(q.weight() == (p - 1) / 2);
        AutocorrProfile prof = autocorrelation(q);
        for (int v : prof.sigma) CHECK(v == (p - 3) / 4);   // p = 3 mod 4: flat off-peak
    }

    // p = 1 mod 4 residues are antipodally symmetric, not flat
    AutocorrProfile p13 = autocorrelation(quadratic_residue_sequence(13));
    bool flat = true;
    for (int v : p13.sigma) flat = flat && v == p13.sigma[0];
    CHECK_FALSE(flat);

    CHECK_THROWS_AS(quadratic_residue_sequence(9), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_residue_sequence(2), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_residue_sequence(1), std::invalid_argument);
}

TEST_CASE("paf bridges to the 0/1 autocorrelation") {
    Xoshiro256 rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(30));
        const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
        BinarySequence f = testutil::random_sequence(rng, n, k);
        auto p = paf(f);
        AutocorrProfile prof = autocorrelation(f);
        REQUIRE(p.size() == prof.sigma.size());
        for (std::size_t s = 0; s < p.size(); ++s)
            CHECK(p[s] == n - 4 * k + 4 * prof.sigma[s]);
    }
}

TEST_CASE("quadruple validation") {
    BinarySequence a = parse_sequence("100");
    CHECK_THROWS_AS(GsQuadruple(parse_sequence("1000"), parse_sequence("1000"),
                                parse_sequence("1000"), parse_sequence("1000")),
                    std::invalid_argument);   // even length
    CHECK_THROWS_AS(GsQuadruple(a, a, a, parse_sequence("10000")), std::invalid_argument);
    GsQuadruple q(a, a, a, parse_sequence("000"));
    CHECK(q.n() == 3);
    CHECK(q.weight_sum() == 3);
}

TEST_CASE("construction condition equals the vanishing paf sum") {
    // order 12 from three singletons and the empty sequence
    GsQuadruple ok(parse_sequence("100"), parse_sequence("100"),
                   parse_sequence("100"), parse_sequence("000"));
    CHECK(gs_condition(ok));
    for (long long v : paf_sum(ok)) CHECK(v == 0);

    // four copies of the length-19 residue sequence miss by one
    BinarySequence q19 = quadratic_residue_sequence(19);
    GsQuadruple bad(q19, q19, q19, q19);
    CHECK_FALSE(gs_condition(bad));

    Xoshiro256 rng(31337);
    int agree_true = 0, agree_false = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + 2 * static_cast<int>(rng.below(4));   // 3,5,7,9
        std::vector<BinarySequence> fs;
        for (int j = 0; j < 4; ++j) {
            int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
            fs.push_back(testutil::random_sequence(rng, n, k));
        }
        GsQuadruple q(fs[0], fs[1], fs[2], fs[3]);
        bool zero = true;
        for (long long v : paf_sum(q)) zero = zero && v == 0;
        CHECK(gs_condition(q) == zero);
        (zero ? agree_true : agree_false)++;
    }
    CHECK(agree_false > 0);   // the sample saw both outcomes
}

TEST_CASE("coded triples decode and encode") {
    GsFixture fx = load_gs_fixture(kRoot + "/fixtures/gs_n19.json");
    auto triple = decode_coded_triple(fx.triple, fx.expected_weights);
    CHECK(triple[0].weight() == 7);
    CHECK(triple[1].weight() == 6);
    CHECK(triple[2].weight() == 9);
    CHECK(encode_coded_triple(triple).digits == fx.triple.digits);

    CodedTriple bad = fx.triple;
    bad.digits[3] = 8;
    CHECK_THROWS_AS(decode_coded_triple(bad), std::invalid_argument);
    CHECK_THROWS_AS(decode_coded_triple(fx.triple, {7, 6, 8}), std::invalid_argument);
    CodedTriple off = fx.triple;
    off.digits.pop_back();
    CHECK_THROWS_AS(decode_coded_triple(off), std::invalid_argument);
}

TEST_CASE("length-19 family from the fixture") {
    GsFixture fx = load_gs_fixture(kRoot + "/fixtures/gs_n19.json");
    auto triple = decode_coded_triple(fx.triple, fx.expected_weights);
    auto miss = deficit(fx.target_constant, {triple[0], triple[1], triple[2]});
    CHECK(miss == fx.expected_deficit);

    REQUIRE(fx.fourth.has_value());
    CHECK(*fx.fourth == quadratic_residue_sequence(19));
    CHECK(autocorrelation(*fx.fourth).sigma == std::vector<int>(9, 4));

    GsQuadruple q(triple[0], triple[1], triple[2], *fx.fourth);
    CHECK(gs_condition(q));
    SignMatrix h = build_goethals_seidel(q);
    CHECK(h.order == 76);
    CHECK(verify_hadamard(h));
}

TEST_CASE("length-79 family from the fixture") {
    GsFixture fx = load_gs_fixture(kRoot + "/fixtures/gs_n79.json");
    auto triple = decode_coded_triple(fx.triple, fx.expected_weights);
    auto miss = deficit(fx.target_constant, {triple[0], triple[1], triple[2]});
    CHECK(miss == fx.expected_deficit);
    REQUIRE(fx.fourth.has_value());
    CHECK(autocorrelation(*fx.fourth).sigma == fx.expected_deficit);

    GsQuadruple q(triple[0], triple[1], triple[2], *fx.fourth);
    SignMatrix h = build_goethals_seidel(q);
    CHECK(h.order == 316);
    CHECK(verify_hadamard(h));
}

TEST_CASE("length-167 fixture stops at the open deficit") {
    GsFixture fx = load_gs_fixture(kRoot + "/fixtures/gs_n167.json");
    auto triple = decode_coded_triple(fx.triple, fx.expected_weights);
    CHECK(deficit(fx.target_constant, {triple[0], triple[1], triple[2]}) == fx.expected_deficit);
    CHECK_FALSE(fx.fourth.has_value());
}

TEST_CASE("builder refuses a failing quadruple") {
    BinarySequence q19 = quadratic_residue_sequence(19);
    GsQuadruple bad(q19, q19, q19, q19);
    CHECK_THROWS_AS(build_goethals_seidel(bad), std::invalid_argument);
}

TEST_CASE("verification is exact") {
    GsQuadruple ok(parse_sequence("100"), parse_sequence("100"),
                   parse_sequence("100"), parse_sequence("000"));
    SignMatrix h = build_goethals_seidel(ok);
    CHECK(h.order == 12);
    REQUIRE(verify_hadamard(h));

    SignMatrix flipped = h;
    flipped.set(5, 7, -flipped.at(5, 7));
    CHECK_FALSE(verify_hadamard(flipped));

    SignMatrix zeroed = h;
    zeroed.e[3] = 0;
    CHECK_FALSE(verify_hadamard(zeroed));

    SignMatrix ragged = h;
    ragged.e.pop_back();
    CHECK_FALSE(verify_hadamard(ragged));
}

TEST_CASE("a second small complete family") {
    // three residue sequences of length 7 and the complement of a singleton
    BinarySequence q7 = quadratic_residue_sequence(7);
    BinarySequence f4 = parse_sequence("1000000").complemented();
    GsQuadruple q(q7, q7, q7, f4);
    REQUIRE(gs_condition(q));
    SignMatrix h = build_goethals_seidel(q);
    CHECK(h.order == 28);
    CHECK(verify_hadamard(h));
}

TEST_CASE("deficit input validation") {
    CHECK_THROWS_AS(deficit(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(deficit(4, {parse_sequence("100"), parse_sequence("1000")}), std::invalid_argument);
}

// Hidden soak test: stochastic re-discovery of a length-79 fourth sequence.
// Not part of the default run; enable with [.soak]. The stored sequence is
// reversal symmetric (f(x) = f(n-x)), so the climb runs over that subspace:
// f(0) is forced by parity and 21 of the 39 pair classes are chosen.
TEST_CASE("heuristic re-find of the length-79 profile", "[.soak]") {
    GsFixture fx = load_gs_fixture(kRoot + "/fixtures/gs_n79.json");
    REQUIRE(fx.fourth.has_value());
    const int n = 79, m = 39, half = 39, t = 21;
    const std::vector<int>& d = fx.expected_deficit;

    auto realize = [&](const std::vector<std::uint8_t>& cls) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
        bits[0] = 1;
        for (int x = 1; x <= half; ++x)
            if (cls[static_cast<std::size_t>(x - 1)]) {
                bits[static_cast<std::size_t>(x)] = 1;
                bits[static_cast<std::size_t>(n - x)] = 1;
            }
        return BinarySequence(std::move(bits));
    };
    auto obj_of = [&](const std::vector<std::uint8_t>& cls) {
        auto sig = autocorrelation(realize(cls)).sigma;
        long long o = 0;
        for (int s = 0; s < m; ++s) {
            const long long e = sig[static_cast<std::size_t>(s)] - d[static_cast<std::size_t>(s)];
            o += e * e;
        }
        return o;
    };

    Xoshiro256 rng(79);
    std::optional<BinarySequence> found;
    for (int restart = 0; restart < 20000 && !found; ++restart) {
        std::vector<int> perm(half);
        std::iota(perm.begin(), perm.end(), 0);
        for (int j = half - 1; j > 0; --j)
            std::swap(perm[static_cast<std::size_t>(j)],
                      perm[rng.below(static_cast<std::uint64_t>(j) + 1)]);
        std::vector<std::uint8_t> cls(static_cast<std::size_t>(half), 0);
        for (int j = 0; j < t; ++j) cls[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = 1;
        long long obj = obj_of(cls);
        int sideways = 0;
        while (obj > 0) {
            std::vector<int> in, out;
            for (int c = 0; c < half; ++c) (cls[static_cast<std::size_t>(c)] ? in : out).push_back(c);
            for (int j = static_cast<int>(in.size()) - 1; j > 0; --j)
                std::swap(in[static_cast<std::size_t>(j)], in[rng.below(static_cast<std::uint64_t>(j) + 1)]);
            for (int j = static_cast<int>(out.size()) - 1; j > 0; --j)
                std::swap(out[static_cast<std::size_t>(j)], out[rng.below(static_cast<std::uint64_t>(j) + 1)]);
            bool moved = false;
            for (int a : in) {
                for (int b : out) {
                    cls[static_cast<std::size_t>(a)] = 0;
                    cls[static_cast<std::size_t>(b)] = 1;
                    const long long cand = obj_of(cls);
                    if (cand < obj || (cand == obj && sideways < 2 * half)) {
                        sideways = (cand == obj) ? sideways + 1 : 0;
                        obj = cand;
                        moved = true;
                        break;
                    }
                    cls[static_cast<std::size_t>(a)] = 1;
                    cls[static_cast<std::size_t>(b)] = 0;
                }
                if (moved) break;
            }
            if (!moved) break;
        }
        if (obj == 0) found = realize(cls);
    }

    REQUIRE(found.has_value());
    CHECK(found->weight() == 43);
    CHECK(autocorrelation(*found).sigma == fx.expected_deficit);

    auto triple = decode_coded_triple(fx.triple, fx.expected_weights);
    GsQuadruple q(triple[0], triple[1], triple[2], *found);
    REQUIRE(gs_condition(q));
    SignMatrix h = build_goethals_seidel(q);
    CHECK(h.order == 316);
    CHECK(verify_hadamard(h));
}
