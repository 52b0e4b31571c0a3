// kcascade: cascades of strongly orthogonal roots and the index of parabolic
// subalgebras and their nilradicals.
//
// Exit codes: 0 success, 1 usage error, 2 verification counterexample,
// 3 internal-consistency error.

#include "kcascade/cascade.hpp"
#include "kcascade/chevalley.hpp"
#include "kcascade/errors.hpp"
#include "kcascade/index.hpp"
#include "kcascade/rootsys.hpp"
#include "kcascade/run_config.hpp"
#include "kcascade/tables.hpp"
#include "kcascade/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>

using namespace kcascade;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_counterexample = 2;
constexpr int exit_internal = 3;

struct Options {
    std::string types{default_type_list};
    std::string spot_types{default_spot_types};
    std::string subset = "all";
    std::string format = "json";
    std::string out;
    std::string type;
    int max_enum_rank = 8;
    int oracle_rank_cap = 4;
    int trials = 5;
    int spot_samples = 10;
    std::uint64_t seed = 1;
    bool corrupt_formula = false;
};

RunConfig make_config(const Options& o)
{
    RunConfig c;
    c.types = parse_type_list(o.types);
    c.spot_types = parse_type_list(o.spot_types);
    c.max_enum_rank = o.max_enum_rank;
    c.oracle_rank_cap = o.oracle_rank_cap;
    c.trials = o.trials;
    c.seed = o.seed;
    c.spot_samples = o.spot_samples;
    c.format = parse_format(o.format);
    if (!o.out.empty()) c.output_path = o.out;
    c.validate();
    return c;
}

void emit(const RunConfig& c, const std::string& text)
{
    if (!c.output_path) {
        std::cout << text;
        return;
    }
    std::ofstream f(*c.output_path, std::ios::binary);
    if (!f) throw std::invalid_argument(fmt::format("cannot open '{}' for writing", *c.output_path));
    f << text;
}

RootSystem load_type(const std::string& text)
{
    RootSystem rs = RootSystem::parse(text);
    for (const auto& t : rs.factors())
        if (t.is_degenerate()) fmt::print(stderr, "warning: {} is isomorphic to A3; computed as given\n", t.name());
    return rs;
}

std::string render_rows(const Table& t, OutputFormat f) { return render(std::vector<Table>{t}, f); }

int cmd_cascade(const Options& o, const RunConfig& c)
{
    const RootSystem rs = load_type(o.type);
    const Cascade k = kostant_cascade(rs, parse_subset(rs, o.subset));
    if (c.format == OutputFormat::json) {
        emit(c, to_json(rs, k).dump(2) + "\n");
        return 0;
    }
    Table t{"cascade", fmt::format("Cascade K(S) of {} for S = {}", rs.name(), k.base().to_string()),
            {"support", "eps", "gamma_size", "parent"}, {}};
    for (const auto& e : k.elements())
        t.rows.push_back({e.support.to_string(), e.eps.to_string(), std::to_string(e.gamma.size()),
                          e.parent ? e.parent->to_string() : "-"});
    emit(c, render_rows(t, c.format));
    return 0;
}

int cmd_index(const Options& o, const RunConfig& c)
{
    const RootSystem rs = load_type(o.type);
    const IndexReport r = index_report(rs, parse_subset(rs, o.subset));
    const auto doc = to_json(rs, r);
    if (c.format == OutputFormat::json) {
        emit(c, doc.dump(2) + "\n");
        return 0;
    }
    Table t{"index", fmt::format("Index report for {} with S = {}", rs.name(), r.subset.to_string()), {"field", "value"}, {}};
    for (const char* key : {"chi_p", "chi_u", "sum", "rank", "equality", "cond_i", "cond_ii"})
        t.rows.push_back({key, doc[key].dump()});
    for (auto& [key, value] : doc["terms"].items()) t.rows.push_back({fmt::format("terms.{}", key), value.dump()});
    emit(c, render_rows(t, c.format));
    return 0;
}

int cmd_enumerate(const Options& o, const RunConfig& c)
{
    const RootSystem rs = load_type(o.type);
    const auto result = enumerate_equality(rs);
    if (c.format == OutputFormat::json) {
        nlohmann::json doc = {{"type", rs.name()}, {"numbering", "bourbaki"}, {"reports", nlohmann::json::array()}};
        std::vector<std::vector<int>> eq;
        for (const auto& r : result.reports) doc["reports"].push_back(to_json(rs, r.report));
        for (SimpleSet s : result.equality) {
            std::vector<int> v;
            for (int i : s.indices()) v.push_back(i + 1);
            eq.push_back(v);
        }
        doc["equality"] = eq;
        emit(c, doc.dump(2) + "\n");
        return 0;
    }
    Table t{"enumerate", fmt::format("All standard parabolics of {}", rs.name()),
            {"subset", "chi_p", "chi_u", "sum", "equality", "cond_i", "cond_ii"}, {}};
    for (const auto& [s, r] : result.reports)
        t.rows.push_back({s.to_string(), std::to_string(r.chi_p), std::to_string(r.chi_u), std::to_string(r.sum),
                          r.equality ? "true" : "false", r.cond_i ? "true" : "false", r.cond_ii ? "true" : "false"});
    emit(c, render_rows(t, c.format));
    return 0;
}

int cmd_tables(const RunConfig& c)
{
    emit(c, render(all_tables(c.types), c.format));
    return 0;
}

int cmd_verify(const Options& o, const RunConfig& c)
{
    VerifyOptions options;
    if (o.corrupt_formula) {
        options.evaluator = [](const RootSystem& rs, SimpleSet s) {
            IndexReport r = index_report(rs, s);
            if (!s.empty()) {
                r.chi_u += 1;
                r.sum += 1;
            }
            return r;
        };
    }
    const VerifyReport report = run_verify(c, options);
    if (c.format == OutputFormat::json) {
        emit(c, report.to_json().dump(2) + "\n");
    } else {
        Table t{"verify", "Verification summary", {"suite", "checked", "failures", "passed"}, {}};
        for (const auto& s : report.suites)
            t.rows.push_back({s.name, std::to_string(s.checked), std::to_string(s.failure_count), s.passed() ? "true" : "false"});
        if (report.internal_error) t.rows.push_back({"internal_error", "-", *report.internal_error, "false"});
        emit(c, render_rows(t, c.format));
    }
    for (const auto& s : report.suites)
        for (const auto& f : s.failures) fmt::print(stderr, "{} failure: {}\n", s.name, f.dump());
    return report.exit_code();
}

int cmd_oracle(const Options& o, const RunConfig& c)
{
    const RootSystem rs = load_type(o.type);
    const SimpleSet s = parse_subset(rs, o.subset);
    const ChevalleyAlgebra g(rs);
    const IndexReport formula = index_report(rs, s);
    const int chi_p = index_oracle(SubalgebraSelection::parabolic(g, s), c.trials, c.seed);
    const int chi_u = index_oracle(SubalgebraSelection::nilradical(g, s), c.trials, c.seed);
    const auto add = additivity_check(g, s, c.trials, c.seed);
    const bool agree = chi_p == formula.chi_p && chi_u == formula.chi_u;

    nlohmann::json doc = to_json(rs, s, add);
    doc["trials"] = c.trials;
    doc["seed"] = c.seed;
    doc["formula"] = {{"chi_p", formula.chi_p}, {"chi_u", formula.chi_u}, {"equality", formula.equality}};
    doc["oracle"] = {{"chi_p", chi_p}, {"chi_u", chi_u}};
    doc["agree"] = agree;
    if (c.format == OutputFormat::json) {
        emit(c, doc.dump(2) + "\n");
    } else {
        Table t{"oracle", fmt::format("Brute-force index for {} with S = {}", rs.name(), s.to_string()),
                {"quantity", "formula", "oracle"}, {}};
        t.rows.push_back({"chi(p_S)", std::to_string(formula.chi_p), std::to_string(chi_p)});
        t.rows.push_back({"chi(u_S)", std::to_string(formula.chi_u), std::to_string(chi_u)});
        t.rows.push_back({"chi(u_S^-)", "-", std::to_string(add.chi_u_minus)});
        t.rows.push_back({"chi(g)", std::to_string(rs.rank()), std::to_string(add.chi_g)});
        emit(c, render_rows(t, c.format));
    }
    if (!agree) {
        fmt::print(stderr, "oracle mismatch: {}\n", doc.dump());
        return exit_counterexample;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kostant cascades and the index of parabolic subalgebras (Bourbaki numbering of simple roots)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file mirroring the long flags; flags win over the file");

    Options o;
    app.add_option("--types", o.types, "Type list, e.g. A1..A10,B2..B8,E6")->envname("KCASCADE_TYPES")->capture_default_str();
    app.add_option("--subset", o.subset, "1-based simple root indices, or 'all' / 'none'")->envname("KCASCADE_SUBSET")->capture_default_str();
    app.add_option("--max-enum-rank", o.max_enum_rank, "Largest rank swept exhaustively by verify")->envname("KCASCADE_MAX_ENUM_RANK")->capture_default_str();
    app.add_option("--oracle-rank-cap", o.oracle_rank_cap, "Largest rank checked on every subset by the oracle")->envname("KCASCADE_ORACLE_RANK_CAP")->capture_default_str();
    app.add_option("--spot-types", o.spot_types, "Types above the cap sampled by the oracle")->envname("KCASCADE_SPOT_TYPES")->capture_default_str();
    app.add_option("--spot-samples", o.spot_samples, "Subsets sampled per spot type")->envname("KCASCADE_SPOT_SAMPLES")->capture_default_str();
    app.add_option("--trials", o.trials, "Random functionals per oracle call")->envname("KCASCADE_TRIALS")->capture_default_str();
    app.add_option("--seed", o.seed, "Oracle seed")->envname("KCASCADE_SEED")->capture_default_str();
    app.add_option("--format", o.format, "json, csv or markdown")->envname("KCASCADE_FORMAT")->capture_default_str();
    app.add_option("--out", o.out, "Write output to this file instead of stdout")->envname("KCASCADE_OUT");
    app.add_flag("--corrupt-formula", o.corrupt_formula, "Self-test: perturb chi(u_S) inside verify")->group("");

    auto* cascade = app.add_subcommand("cascade", "Kostant cascade K(S)");
    auto* index = app.add_subcommand("index", "chi(p_S), chi(u_S) and the equality conditions");
    auto* enumerate = app.add_subcommand("enumerate", "Index report for every S");
    auto* oracle = app.add_subcommand("oracle", "Brute-force index from a Chevalley basis");
    for (auto* sub : {cascade, index, enumerate, oracle})
        sub->add_option("type", o.type, "Root system, e.g. E6 or A2xG2")->required();
    auto* tables = app.add_subcommand("tables", "Cascade cardinality, minimal and maximal parabolic tables");
    auto* verify = app.add_subcommand("verify", "Run every verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }

    try {
        const RunConfig c = make_config(o);
        if (cascade->parsed()) return cmd_cascade(o, c);
        if (index->parsed()) return cmd_index(o, c);
        if (enumerate->parsed()) return cmd_enumerate(o, c);
        if (oracle->parsed()) return cmd_oracle(o, c);
        if (tables->parsed()) return cmd_tables(c);
        if (verify->parsed()) return cmd_verify(o, c);
    } catch (const InternalConsistencyError& e) {
        fmt::print(stderr, "internal consistency error: {}\n", e.what());
        return exit_internal;
    } catch (const CounterexampleError& e) {
        fmt::print(stderr, "counterexample: {}\n{}\n", e.what(), e.detail().dump());
        return exit_counterexample;
    } catch (const std::invalid_argument& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return exit_usage;
    }
    return exit_usage;
}
