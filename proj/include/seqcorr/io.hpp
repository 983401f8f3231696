#pragma once

// Serialization shared by the command line tool and the tests: JSON
// documents tagged with a "schema" field, CSV blocks mirroring the
// reference tables, JSONL enumeration dumps, the fixture format for
// Hadamard quadruples, and a plain text form for sign matrices.
//
// Counts that can exceed 64 bits are always decimal strings. JSON objects
// serialize with sorted keys, so every writer here is byte-deterministic.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "autocorr.hpp"
#include "bivariate.hpp"
#include "feasibility.hpp"
#include "hadamard.hpp"
#include "marginals.hpp"
#include "oracle.hpp"
#include "orbits.hpp"
#include "sequence.hpp"

namespace seqcorr {

inline std::string count_str(const BigCount& c) { return c.str(); }

inline std::vector<std::string> count_strs(const std::vector<BigCount>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

inline nlohmann::json to_json(const AutocorrProfile& p) {
    return {{"schema", "autocorr/v1"}, {"n", p.n}, {"k", p.k}, {"sigma", p.sigma}, {"d", p.d}};
}

inline nlohmann::json to_json(const PathForm& p) {
    return {{"schema", "path-form/v1"},
            {"n", p.sequence.n()},
            {"k", p.sequence.weight()},
            {"shift", p.shift},
            {"unique", p.is_unique},
            {"sequence", format_sequence(p.sequence)}};
}

inline nlohmann::json to_json(const MarginalTable& t) {
    return {{"schema", "marginal/v1"}, {"n", t.n}, {"k", t.k}, {"i", t.i}, {"counts", count_strs(t.counts)}};
}

inline nlohmann::json to_json(const OrbitRefinement& r) {
    return {{"schema", "refinement/v1"}, {"n", r.n}, {"k", r.k}, {"i", r.i},
            {"b", count_strs(r.b)}, {"total", count_str(r.total)}};
}

inline nlohmann::json to_json(const JointCount& t) {
    nlohmann::json cells = nlohmann::json::object();
    for (const auto& [xy, c] : t.table)
        cells[std::to_string(xy.first) + "," + std::to_string(xy.second)] = count_str(c);
    return {{"schema", "joint/v1"}, {"n", t.n}, {"k", t.k}, {"cells", cells}};
}

inline nlohmann::json to_json(const CheckReport& r, int n, int k) {
    return {{"schema", "check/v1"}, {"n", n}, {"k", k}, {"passed", r.passed},
            {"certificate", r.certificate}, {"certificates", r.certificates}};
}

/// Deterministic view of a search outcome: elapsed time stays out on
/// purpose, so identical seeds print identical documents.
inline nlohmann::json to_json(const SearchOutcome& o) {
    nlohmann::json j = {{"schema", "search/v1"},
                        {"verdict", to_string(o.verdict)},
                        {"stats", {{"nodes", o.stats.nodes}, {"restarts", o.stats.restarts}}}};
    if (o.witness) j["witness"] = format_sequence(*o.witness);
    if (!o.certificate.empty()) j["certificate"] = o.certificate;
    return j;
}

/// One line per autocorrelation vector bin, in lexicographic key order:
/// {"count":"...","sigma":[...]}.
inline void write_jsonl(std::ostream& os, const JointProfileDistribution& d) {
    for (const auto& [sigma, c] : d.bins) {
        nlohmann::json line = {{"sigma", sigma}, {"count", count_str(c)}};
        os << line.dump() << '\n';
    }
}

inline nlohmann::json to_json(const JointProfileDistribution& d) {
    nlohmann::json bins = nlohmann::json::array();
    for (const auto& [sigma, c] : d.bins)
        bins.push_back({{"sigma", sigma}, {"count", count_str(c)}});
    return {{"schema", "enumeration/v1"}, {"n", d.n}, {"k", d.k}, {"bins", bins}};
}

// ---- CSV ----

/// Rows at several distances for one (n, k): header "i\x,0,...,k", then one
/// row per table. All tables must agree on (n, k).
inline std::string marginal_block_csv(const std::vector<MarginalTable>& rows) {
    if (rows.empty()) throw std::invalid_argument("marginal_block_csv: no rows");
    std::ostringstream os;
    os << "i\\x";
    for (int x = 0; x <= rows.front().k; ++x) os << ',' << x;
    os << '\n';
    for (const auto& t : rows) {
        if (t.n != rows.front().n || t.k != rows.front().k)
            throw std::invalid_argument("marginal_block_csv: mixed (n,k)");
        os << t.i;
        for (const auto& c : t.counts) os << ',' << c.str();
        os << '\n';
    }
    return os.str();
}

inline std::string refinement_block_csv(const std::vector<OrbitRefinement>& rows) {
    if (rows.empty()) throw std::invalid_argument("refinement_block_csv: no rows");
    std::ostringstream os;
    os << "i\\x";
    for (int x = 0; x < rows.front().k; ++x) os << ',' << x;
    os << '\n';
    for (const auto& r : rows) {
        if (r.n != rows.front().n || r.k != rows.front().k)
            throw std::invalid_argument("refinement_block_csv: mixed (n,k)");
        os << r.i;
        for (const auto& c : r.b) os << ',' << c.str();
        os << '\n';
    }
    return os.str();
}

/// Single refinement with its total, as two labeled rows.
inline std::string refinement_row_csv(const OrbitRefinement& r) {
    std::ostringstream os;
    os << "x";
    for (int x = 0; x < r.k; ++x) os << ',' << x;
    os << "\nb";
    for (const auto& c : r.b) os << ',' << c.str();
    os << "\ntotal," << r.total.str() << '\n';
    return os.str();
}

/// Full grid, x rows by y columns, zeros included.
inline std::string joint_csv(const JointCount& t) {
    std::ostringstream os;
    os << "x\\y";
    for (int y = 0; y <= t.k; ++y) os << ',' << y;
    os << '\n';
    for (int x = 0; x <= t.k; ++x) {
        os << x;
        for (int y = 0; y <= t.k; ++y) os << ',' << t.at(x, y).str();
        os << '\n';
    }
    return os.str();
}

/// The four reference tables as one byte-stable CSV document: the (15,6)
/// marginal grid, the (15,7) refinement grid, and the two length-21
/// refinements with totals 16796 and 9690.
inline std::string reference_tables_csv() {
    std::ostringstream os;
    os << "# marginal n=15 k=6\n";
    os << marginal_block_csv({marginal_table(15, 6, 1), marginal_table(15, 6, 3), marginal_table(15, 6, 5)});
    os << "\n# refinement n=15 k=7\n";
    os << refinement_block_csv({orbit_refinement(15, 7, 3), orbit_refinement(15, 7, 4), orbit_refinement(15, 7, 5)});
    os << "\n# refinement n=21 k=10 i=1\n";
    os << refinement_row_csv(orbit_refinement(21, 10, 1));
    os << "\n# refinement n=21 k=8 i=1\n";
    os << refinement_row_csv(orbit_refinement(21, 8, 1));
    return os.str();
}

// ---- fixtures ----

/// A stored three-sequence family for the circulant construction: the coded
/// digits, the weights they must decode to, the target constant, the frozen
/// deficit the fourth sequence must realize, and (when known) that fourth
/// sequence itself.
struct GsFixture {
    int n = 0;
    CodedTriple triple;
    std::vector<int> expected_weights;
    int target_constant = 0;
    std::vector<int> expected_deficit;
    std::optional<BinarySequence> fourth;
};

inline GsFixture parse_gs_fixture(const nlohmann::json& j) {
    GsFixture f;
    f.n = j.at("n").get<int>();
    f.triple.n = f.n;
    f.triple.digits = j.at("digits").get<std::vector<int>>();
    f.expected_weights = j.at("expected_weights").get<std::vector<int>>();
    f.target_constant = j.at("target_constant").get<int>();
    f.expected_deficit = j.at("expected_deficit").get<std::vector<int>>();
    if (j.contains("fourth")) f.fourth = parse_sequence(j.at("fourth").get<std::string>());
    return f;
}

inline GsFixture load_gs_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_gs_fixture: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return parse_gs_fixture(j);
}

// ---- sign matrices ----

/// One row per line, '+' and '-' only.
inline void write_sign_matrix(std::ostream& os, const SignMatrix& m) {
    for (int i = 0; i < m.order; ++i) {
        for (int j = 0; j < m.order; ++j) os << (m.at(i, j) > 0 ? '+' : '-');
        os << '\n';
    }
}

inline SignMatrix parse_sign_matrix(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("parse_sign_matrix: empty input");
    const int order = static_cast<int>(lines.size());
    SignMatrix m;
    m.order = order;
    m.e.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
    for (int i = 0; i < order; ++i) {
        if (static_cast<int>(lines[static_cast<std::size_t>(i)].size()) != order)
            throw std::invalid_argument("parse_sign_matrix: not square");
        for (int j = 0; j < order; ++j) {
            const char c = lines[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != '+' && c != '-') throw std::invalid_argument("parse_sign_matrix: entries must be + or -");
            m.set(i, j, c == '+' ? 1 : -1);
        }
    }
    return m;
}

inline SignMatrix load_sign_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_sign_matrix: cannot open " + path);
    return parse_sign_matrix(in);
}

// ---- argument helpers ----

/// "@path" loads the file's contents; anything else passes through.
inline std::string expand_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("expand_arg: cannot open " + arg.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Comma or whitespace separated integers; every token must parse fully.
inline std::vector<int> parse_int_vector(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::string norm = text;
    for (char& c : norm)
        if (c == ',') c = ' ';
    std::istringstream nin(norm);
    while (nin >> tok) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("parse_int_vector: bad token '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("parse_int_vector: no values");
    return out;
}

} // namespace seqcorr
