// Command line front end. Thin wrappers only: parse, call the library,
// print. Data goes to stdout and is byte-deterministic for fixed argv
// (including --seed); timing and diagnostics go to stderr.
//
// Exit status: 0 success / found / true; 1 infeasible / false; 2 budget
// exceeded / unknown; 64 usage or input error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <seqcorr/seqcorr.hpp>

namespace {

constexpr int kUsageError = 64;

using namespace seqcorr;

int run_autocorr(const std::string& arg) {
    const BinarySequence f = parse_sequence(expand_arg(arg));
    std::cout << to_json(autocorrelation(f)).dump() << '\n';
    return 0;
}

int run_canonicalize(const std::string& arg) {
    const BinarySequence f = parse_sequence(expand_arg(arg));
    std::cout << to_json(path_representative(f)).dump() << '\n';
    return 0;
}

int run_marginal(int n, int k, int i, std::optional<int> x, const std::string& format) {
    if (x) {
        nlohmann::json j = {{"schema", "marginal/v1"}, {"n", n}, {"k", k}, {"i", i},
                            {"x", *x}, {"count", count_str(marginal(n, k, i, *x))}};
        std::cout << j.dump() << '\n';
        return 0;
    }
    const MarginalTable t = marginal_table(n, k, i);
    if (format == "csv") std::cout << marginal_block_csv({t});
    else std::cout << to_json(t).dump() << '\n';
    return 0;
}

int run_joint(int n, int k, std::optional<int> x, std::optional<int> y, const std::string& format) {
    if (x.has_value() != y.has_value())
        throw CLI::ValidationError("joint", "--x and --y must be given together");
    if (x) {
        nlohmann::json j = {{"schema", "joint/v1"}, {"n", n}, {"k", k}, {"x", *x}, {"y", *y},
                            {"count", count_str(joint_count(n, k, *x, *y))}};
        std::cout << j.dump() << '\n';
        return 0;
    }
    const JointCount t = joint_table(n, k);
    if (format == "csv") std::cout << joint_csv(t);
    else std::cout << to_json(t).dump() << '\n';
    return 0;
}

int run_refine(int n, int k, int i, const std::string& format) {
    const OrbitRefinement r = orbit_refinement(n, k, i);
    if (format == "csv") std::cout << refinement_row_csv(r);
    else std::cout << to_json(r).dump() << '\n';
    return 0;
}

int run_enumerate(int n, int k, const std::string& format) {
    const JointProfileDistribution d = enumerate_joint(n, k);
    if (format == "json") std::cout << to_json(d).dump() << '\n';
    else write_jsonl(std::cout, d);
    return 0;
}

TargetSpec make_spec(int n, int k, const std::string& d_arg) {
    TargetSpec spec;
    spec.n = n;
    spec.k = k;
    spec.d = parse_int_vector(expand_arg(d_arg));
    return spec;
}

int run_check(int n, int k, const std::string& d_arg) {
    const TargetSpec spec = make_spec(n, k, d_arg);
    const CheckReport report = check_necessary(spec);
    std::cout << to_json(report, n, k).dump() << '\n';
    return report.passed ? 0 : 1;
}

int outcome_exit(const SearchOutcome& o) {
    switch (o.verdict) {
        case Verdict::Found: return 0;
        case Verdict::ExhaustedInfeasible:
        case Verdict::PrunedInfeasible: return 1;
        case Verdict::BudgetExceeded: return 2;
    }
    return 2;
}

void print_outcome(const SearchOutcome& o, const char* mode) {
    nlohmann::json j = to_json(o);
    j["mode"] = mode;
    std::cout << j.dump() << '\n';
    std::cerr << "elapsed_ms=" << o.stats.elapsed_ms << '\n';
}

int run_search(int n, int k, const std::string& d_arg, bool heuristic,
               std::uint64_t seed, std::uint64_t budget, int restarts) {
    const TargetSpec spec = make_spec(n, k, d_arg);
    SearchOutcome o;
    if (heuristic) {
        HeuristicParams params;
        params.seed = seed;
        params.restarts = restarts;
        o = search_heuristic(spec, params);
    } else {
        o = search_exact(spec, budget);
    }
    print_outcome(o, heuristic ? "heuristic" : "exact");
    return outcome_exit(o);
}

int run_supplement(const std::string& f1_arg, int constant, int k2, bool heuristic,
                   std::uint64_t seed, std::uint64_t budget, int restarts) {
    const BinarySequence f1 = parse_sequence(expand_arg(f1_arg));
    HeuristicParams params;
    params.seed = seed;
    params.restarts = restarts;
    const SearchOutcome o = supplement_search(f1, constant, k2, !heuristic, budget, params);
    print_outcome(o, heuristic ? "heuristic" : "exact");
    return outcome_exit(o);
}

int run_hadamard_build(const std::string& fixture_path, const std::string& out_path) {
    const GsFixture fx = load_gs_fixture(fixture_path);
    const auto triple = decode_coded_triple(fx.triple, fx.expected_weights);
    const std::vector<int> miss = deficit(fx.target_constant, {triple[0], triple[1], triple[2]});
    if (miss != fx.expected_deficit)
        throw std::runtime_error("hadamard build: fixture deficit mismatch");
    if (!fx.fourth) {
        std::cerr << "fixture has no fourth sequence; the family is incomplete\n";
        return 2;
    }
    const GsQuadruple q(triple[0], triple[1], triple[2], *fx.fourth);
    const SignMatrix h = build_goethals_seidel(q);
    const bool ok = verify_hadamard(h);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        write_sign_matrix(out, h);
    }
    nlohmann::json j = {{"schema", "hadamard/v1"}, {"n", fx.n}, {"order", h.order},
                        {"weights", {q.f[0].weight(), q.f[1].weight(), q.f[2].weight(), q.f[3].weight()}},
                        {"verified", ok}};
    std::cout << j.dump() << '\n';
    return ok ? 0 : 1;
}

int run_hadamard_verify(const std::string& path) {
    const SignMatrix m = load_sign_matrix(path);
    const bool ok = verify_hadamard(m);
    nlohmann::json j = {{"schema", "hadamard-verify/v1"}, {"order", m.order}, {"verified", ok}};
    std::cout << j.dump() << '\n';
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact autocorrelation distributions, feasibility search, Hadamard assembly"};
    app.require_subcommand(1);
    int exit_code = 0;

    // autocorr <seq>
    {
        auto* c = app.add_subcommand("autocorr", "autocorrelation profile of a 0/1 sequence");
        auto seq = std::make_shared<std::string>();
        c->add_option("seq", *seq, "sequence, e.g. 1100100 (or @file)")->required();
        c->callback([&exit_code, seq] { exit_code = run_autocorr(*seq); });
    }
    // canonicalize <seq>
    {
        auto* c = app.add_subcommand("canonicalize", "rotate to the canonical path form");
        auto seq = std::make_shared<std::string>();
        c->add_option("seq", *seq, "sequence (or @file)")->required();
        c->callback([&exit_code, seq] { exit_code = run_canonicalize(*seq); });
    }
    // marginal --n --k --i [--x] [--format]
    {
        auto* c = app.add_subcommand("marginal", "subset counts by incidences at one distance");
        struct A { int n = 0, k = 0, i = 0; int x = -1; bool has_x = false; std::string format = "json"; };
        auto a = std::make_shared<A>();
        c->add_option("--n", a->n)->required();
        c->add_option("--k", a->k)->required();
        c->add_option("--i", a->i)->required();
        auto* xo = c->add_option("--x", a->x);
        c->add_option("--format", a->format)->check(CLI::IsMember({"json", "csv"}));
        c->callback([&exit_code, a, xo] {
            std::optional<int> x;
            if (xo->count()) x = a->x;
            exit_code = run_marginal(a->n, a->k, a->i, x, a->format);
        });
    }
    // joint --n --k [--x --y] [--format]
    {
        auto* c = app.add_subcommand("joint", "subset counts by incidences at distances 1 and 2");
        struct A { int n = 0, k = 0, x = -1, y = -1; std::string format = "json"; };
        auto a = std::make_shared<A>();
        c->add_option("--n", a->n)->required();
        c->add_option("--k", a->k)->required();
        auto* xo = c->add_option("--x", a->x);
        auto* yo = c->add_option("--y", a->y);
        c->add_option("--format", a->format)->check(CLI::IsMember({"json", "csv"}));
        c->callback([&exit_code, a, xo, yo] {
            std::optional<int> x, y;
            if (xo->count()) x = a->x;
            if (yo->count()) y = a->y;
            exit_code = run_joint(a->n, a->k, x, y, a->format);
        });
    }
    // refine --n --k --i [--format]
    {
        auto* c = app.add_subcommand("refine", "per-orbit counts, gcd(n,k) = 1");
        struct A { int n = 0, k = 0, i = 0; std::string format = "json"; };
        auto a = std::make_shared<A>();
        c->add_option("--n", a->n)->required();
        c->add_option("--k", a->k)->required();
        c->add_option("--i", a->i)->required();
        c->add_option("--format", a->format)->check(CLI::IsMember({"json", "csv"}));
        c->callback([&exit_code, a] { exit_code = run_refine(a->n, a->k, a->i, a->format); });
    }
    // enumerate --n --k [--format]
    {
        auto* c = app.add_subcommand("enumerate", "exhaustive autocorrelation vector distribution");
        struct A { int n = 0, k = 0; std::string format = "jsonl"; };
        auto a = std::make_shared<A>();
        c->add_option("--n", a->n)->required();
        c->add_option("--k", a->k)->required();
        c->add_option("--format", a->format)->check(CLI::IsMember({"json", "jsonl"}));
        c->callback([&exit_code, a] { exit_code = run_enumerate(a->n, a->k, a->format); });
    }
    // check --n --k --d
    {
        auto* c = app.add_subcommand("check", "necessary-condition certificates for a target vector");
        struct A { int n = 0, k = 0; std::string d; };
        auto a = std::make_shared<A>();
        c->add_option("--n", a->n)->required();
        c->add_option("--k", a->k)->required();
        c->add_option("--d", a->d, "comma separated targets, s = 1..floor(n/2) (or @file)")->required();
        c->callback([&exit_code, a] { exit_code = run_check(a->n, a->k, a->d); });
    }
    // search --n --k --d [--exact|--heuristic] [--seed --budget --restarts]
    {
        auto* c = app.add_subcommand("search", "find a sequence with a prescribed autocorrelation vector");
        struct A {
            int n = 0, k = 0;
            std::string d;
            bool exact = false, heuristic = false;
            std::uint64_t seed = 1, budget = 0;
            int restarts = 100;
        };
        auto a = std::make_shared<A>();
        c->add_option("--n", a->n)->required();
        c->add_option("--k", a->k)->required();
        c->add_option("--d", a->d)->required();
        c->add_flag("--exact", a->exact, "exhaustive backtracking (default)");
        c->add_flag("--heuristic", a->heuristic, "seeded local search");
        c->add_option("--seed", a->seed);
        c->add_option("--budget", a->budget, "node budget for --exact, 0 = unlimited");
        c->add_option("--restarts", a->restarts);
        c->callback([&exit_code, a] {
            if (a->exact && a->heuristic)
                throw CLI::ValidationError("search", "--exact and --heuristic are mutually exclusive");
            exit_code = run_search(a->n, a->k, a->d, a->heuristic, a->seed, a->budget, a->restarts);
        });
    }
    // supplement --f1 --constant --k2 [...]
    {
        auto* c = app.add_subcommand("supplement", "complete a family: find f2 with sigma(f1) + sigma(f2) constant");
        struct A {
            std::string f1;
            int constant = 0, k2 = 0;
            bool exact = false, heuristic = false;
            std::uint64_t seed = 1, budget = 0;
            int restarts = 100;
        };
        auto a = std::make_shared<A>();
        c->add_option("--f1", a->f1, "known sequence (or @file)")->required();
        c->add_option("--constant", a->constant)->required();
        c->add_option("--k2", a->k2, "weight of the sought sequence")->required();
        c->add_flag("--exact", a->exact);
        c->add_flag("--heuristic", a->heuristic);
        c->add_option("--seed", a->seed);
        c->add_option("--budget", a->budget);
        c->add_option("--restarts", a->restarts);
        c->callback([&exit_code, a] {
            if (a->exact && a->heuristic)
                throw CLI::ValidationError("supplement", "--exact and --heuristic are mutually exclusive");
            exit_code = run_supplement(a->f1, a->constant, a->k2, a->heuristic, a->seed, a->budget, a->restarts);
        });
    }
    // hadamard build --fixture <path> [--out <path>] | hadamard verify <path>
    {
        auto* c = app.add_subcommand("hadamard", "assemble or verify a sign matrix");
        c->require_subcommand(1);
        auto* b = c->add_subcommand("build", "assemble from a stored quadruple fixture and verify");
        struct BA { std::string fixture, out; };
        auto ba = std::make_shared<BA>();
        b->add_option("--fixture", ba->fixture, "fixture JSON path")->required();
        b->add_option("--out", ba->out, "also write the matrix as +/- text");
        b->callback([&exit_code, ba] { exit_code = run_hadamard_build(ba->fixture, ba->out); });
        auto* v = c->add_subcommand("verify", "check H H^T = order * I for a +/- text matrix");
        auto path = std::make_shared<std::string>();
        v->add_option("path", *path)->required();
        v->callback([&exit_code, path] { exit_code = run_hadamard_verify(*path); });
    }
    // tables --paper [--format csv]
    {
        auto* c = app.add_subcommand("tables", "reference tables for golden diffing");
        struct A { bool paper = false; std::string format = "csv"; };
        auto a = std::make_shared<A>();
        c->add_flag("--paper", a->paper, "emit the reference table set");
        c->add_option("--format", a->format)->check(CLI::IsMember({"csv"}));
        c->callback([&exit_code, a] {
            if (!a->paper) throw CLI::ValidationError("tables", "--paper is required");
            std::cout << reference_tables_csv();
            exit_code = 0;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return exit_code;
}
