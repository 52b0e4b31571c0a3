#include "kcascade/verify.hpp"

#include "kcascade/cascade.hpp"
#include "kcascade/chevalley.hpp"
#include "kcascade/errors.hpp"
#include "kcascade/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <fmt/format.h>

namespace kcascade {

RootSums::RootSums(const RootSystem& rs) : n_(rs.num_roots()), table_(static_cast<std::size_t>(n_) * n_, -1)
{
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (auto id = rs.find(rs.root(a) + rs.root(b))) table_[static_cast<std::size_t>(a) * n_ + b] = *id;
}

namespace {

std::vector<int> one_based(SimpleSet s)
{
    std::vector<int> out;
    for (int i : s.indices()) out.push_back(i + 1);
    return out;
}

nlohmann::json where(const RootSystem& rs, SimpleSet s)
{
    return {{"type", rs.name()}, {"subset", one_based(s)}};
}

}  // namespace

std::vector<PropertyFailure> check_cascade_properties(const RootSystem& rs, const RootSums& sums, SimpleSet s)
{
    std::vector<PropertyFailure> out;
    auto fail = [&](std::string property, nlohmann::json extra = nlohmann::json::object()) {
        auto d = where(rs, s);
        d.update(extra);
        out.push_back(PropertyFailure{std::move(property), std::move(d)});
    };

    const Cascade c = kostant_cascade(rs, s);
    const auto& elems = c.elements();
    std::vector<int> owner(rs.num_roots(), -1);

    for (std::size_t k = 0; k < elems.size(); ++k) {
        const auto& e = elems[k];
        const nlohmann::json at = {{"element", one_based(e.support)}};
        if (!e.support.subset_of(s) || !rs.is_connected(e.support)) fail("element_connected_subset", at);
        if (e.eps != rs.highest_root_of(e.support)) fail("eps_is_highest_root", at);
        if (e.gamma.size() % 2 != 1) fail("gamma_odd", at);
        if (!std::binary_search(e.gamma.begin(), e.gamma.end(), rs.id_of(e.eps))) fail("eps_in_gamma", at);

        // Gamma^K = R_K^+ minus the roots orthogonal to eps_K, and equivalently the
        // roots of R_K^+ with a positive coefficient outside K^.
        SimpleSet hat;
        for (int i : e.support.indices())
            if (rs.coroot_pairing(rs.simple_root(i), e.eps) == 0) hat.insert(i);
        std::vector<int> non_orthogonal, outside_hat;
        for (int id : rs.positive_roots_in(e.support)) {
            if (rs.inner(rs.root(id), e.eps) != 0) non_orthogonal.push_back(id);
            if (!rs.support(rs.root(id)).subset_of(hat)) outside_hat.push_back(id);
        }
        if (non_orthogonal != e.gamma || outside_hat != e.gamma) fail("gamma_descriptions", at);

        int depth = 0;
        for (auto p = e.parent; p; p = c.find(*p)->parent) ++depth;
        if (depth >= rs.rank()) fail("recursion_depth", at);

        for (int id : e.gamma) {
            if (owner[id] != -1) fail("gamma_disjoint", {{"root", rs.root(id).coeffs}});
            owner[id] = static_cast<int>(k);
        }
    }

    // R_S^+ is the disjoint union of the Gamma^K.
    const auto positive = rs.positive_roots_in(s);
    for (int id : positive)
        if (owner[id] == -1) fail("gamma_cover", {{"root", rs.root(id).coeffs}});
    std::size_t gamma_total = 0;
    for (const auto& e : elems) gamma_total += e.gamma.size();
    if (gamma_total != positive.size()) fail("gamma_count", {{"gamma_total", gamma_total}, {"positive", positive.size()}});

    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b) {
            const SimpleSet k1 = elems[a].support, k2 = elems[b].support;
            const bool nested = k1.subset_of(k2) || k2.subset_of(k1);
            const auto comps = rs.connected_components(k1 | k2);
            const bool separate = comps.size() == 2 && std::find(comps.begin(), comps.end(), k1) != comps.end();
            if (!nested && !separate) fail("nesting", {{"K", one_based(k1)}, {"K'", one_based(k2)}});

            const Root& e1 = elems[a].eps;
            const Root& e2 = elems[b].eps;
            if (rs.contains(e1 + e2) || rs.contains(e1 - e2) || rs.coroot_pairing(e1, e2) != 0)
                fail("strong_orthogonality", {{"eps", e1.coeffs}, {"eps'", e2.coeffs}});
        }

    std::vector<std::vector<int>> rows;
    for (const auto& e : elems) rows.push_back(e.eps.coeffs);
    if (exact_rank(rows) != elems.size()) fail("cascade_roots_independent");

    // Sums of roots from the Gammas.
    for (std::size_t k = 0; k < elems.size(); ++k) {
        const int eps_id = rs.id_of(elems[k].eps);
        for (int a : elems[k].gamma) {
            for (int b : elems[k].gamma) {
                auto sum = sums(a, b);
                if (sum && *sum != eps_id) fail("heisenberg_sum", {{"alpha", rs.root(a).coeffs}, {"beta", rs.root(b).coeffs}});
            }
            for (std::size_t k2 = 0; k2 < elems.size(); ++k2) {
                if (k2 == k) continue;
                for (int b : elems[k2].gamma) {
                    auto sum = sums(a, b);
                    if (!sum) continue;
                    const SimpleSet ka = elems[k].support, kb = elems[k2].support;
                    const bool into_b = ka.subset_of(kb) && owner[*sum] == static_cast<int>(k2);
                    const bool into_a = kb.subset_of(ka) && owner[*sum] == static_cast<int>(k);
                    if (!into_a && !into_b)
                        fail("cross_sum", {{"alpha", rs.root(a).coeffs}, {"beta", rs.root(b).coeffs}});
                }
            }
        }
    }

    // The cascade of S is the union of the cascades of its components.
    std::vector<SimpleSet> from_components;
    for (SimpleSet comp : rs.connected_components(s))
        for (SimpleSet k : kostant_cascade(rs, comp).supports()) from_components.push_back(k);
    std::sort(from_components.begin(), from_components.end());
    if (from_components != c.supports()) fail("componentwise");

    return out;
}

std::vector<PropertyFailure> check_index_properties(const RootSystem& rs, SimpleSet s, const IndexEvaluator& eval)
{
    std::vector<PropertyFailure> out;
    const IndexReport r = eval ? eval(rs, s) : index_report(rs, s);
    const ParabolicSpec spec = parabolic_spec(rs, s);
    auto fail = [&](std::string property) {
        auto d = where(rs, s);
        d["report"] = to_json(rs, r);
        out.push_back(PropertyFailure{std::move(property), std::move(d)});
    };

    const int rank = rs.rank();
    const int k_pi = static_cast<int>(spec.k_pi.size());
    const int k_s = static_cast<int>(spec.k_s.size());

    if (r.chi_p < 0 || r.chi_u < 0) fail("non_negative");
    if (r.sum != r.chi_p + r.chi_u) fail("sum");
    if (r.sum < rank) fail("lower_bound_rank");
    if (r.sum > spec.dim_levi) fail("upper_bound_levi");
    if (r.terms.closed_form(rank) != r.sum) fail("closed_form_sum");
    if (r.chi_p != chi_parabolic(spec)) fail("parabolic_formula");

    const auto forms = nilradical_forms(spec);
    if (forms.via_gamma != forms.via_q || forms.via_q != r.chi_u) fail("nilradical_forms");

    if (r.equality != (r.sum == rank)) fail("equality_flag");
    if (r.equality != (r.cond_i && r.cond_ii)) fail("equality_iff_conditions");

    // E_S by definition against K(Pi) \ K(T_S).
    std::vector<SimpleSet> direct, via_ts;
    for (const auto& e : spec.k_pi.elements()) {
        if (!rs.support(e.eps).subset_of(s)) direct.push_back(e.support);
        if (!spec.k_ts.contains(e.support)) via_ts.push_back(e.support);
    }
    if (direct != via_ts) fail("escaping_elements");

    if (spec.k_s.size() < spec.k_ts.size()) fail("cascade_count_difference");

    bool ks_in_kpi = true;
    for (const auto& e : spec.k_s.elements()) ks_in_kpi = ks_in_kpi && spec.k_pi.contains(e.support);
    if (spec.q_s.empty() != ks_in_kpi || ks_in_kpi != (s == spec.t_s)) fail("q_empty_criterion");
    if (ks_in_kpi && !r.equality) fail("subcascade_equality");
    if (rs.is_simple() && k_pi == rank) {
        if (r.cond_i != ks_in_kpi) fail("full_rank_cascade_condition_i");
        if (r.cond_i && !r.cond_ii) fail("full_rank_cascade_condition_ii");
    }

    if (s.empty() && (r.sum != rank || r.chi_u != k_pi)) fail("borel");
    if (spec.dim_v_s < k_pi || spec.dim_v_s > k_s + k_pi) fail("dim_v_bounds");

    const int dim_g = rank + rs.num_roots();
    if (spec.dim_p + spec.dim_u != dim_g || spec.dim_p - spec.dim_u != spec.dim_levi) fail("dimensions");
    return out;
}

void SuiteResult::fail(nlohmann::json detail)
{
    ++failure_count;
    if (failures.size() < max_recorded_failures) failures.push_back(std::move(detail));
}

bool VerifyReport::passed() const
{
    if (internal_error) return false;
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

int VerifyReport::exit_code() const
{
    if (internal_error) return 3;
    return passed() ? 0 : 2;
}

nlohmann::json VerifyReport::to_json() const
{
    nlohmann::json out = {{"config", config}, {"numbering", "bourbaki"}, {"passed", passed()}};
    out["internal_error"] = internal_error ? nlohmann::json(*internal_error) : nlohmann::json(nullptr);
    out["suites"] = nlohmann::json::array();
    for (const auto& s : suites)
        out["suites"].push_back({{"name", s.name},
                                 {"checked", s.checked},
                                 {"failure_count", s.failure_count},
                                 {"passed", s.passed()},
                                 {"failures", s.failures}});
    return out;
}

std::vector<SimpleSet> sample_subsets(int rank, int count, std::uint64_t seed)
{
    const std::uint64_t total = std::uint64_t{1} << rank;
    std::set<std::uint64_t> masks;
    if (static_cast<std::uint64_t>(count) >= total) {
        for (std::uint64_t m = 0; m < total; ++m) masks.insert(m);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
        while (masks.size() < static_cast<std::size_t>(count)) masks.insert(pick(rng));
    }
    std::vector<SimpleSet> out;
    for (auto m : masks) out.emplace_back(m);
    return out;
}

namespace {

std::uint64_t type_seed(std::uint64_t seed, const SimpleType& t)
{
    return seed * 1'000'003ULL + static_cast<std::uint64_t>(t.family) * 64 + static_cast<std::uint64_t>(t.rank);
}

void run_sweeps(const RunConfig& config, const VerifyOptions& options, VerifyReport& report)
{
    SuiteResult index, cascade, oracle, additivity;
    index.name = "index";
    cascade.name = "cascade";
    oracle.name = "oracle";
    additivity.name = "additivity";

    for (const auto& type : config.types) {
        if (type.rank > config.max_enum_rank) continue;
        const RootSystem rs(type);
        const RootSums sums(rs);
        const std::uint64_t count = std::uint64_t{1} << rs.rank();
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            const SimpleSet s(mask);
            if (options.index) {
                ++index.checked;
                for (auto& f : check_index_properties(rs, s, options.evaluator)) {
                    f.detail["property"] = f.property;
                    index.fail(std::move(f.detail));
                }
            }
            if (options.cascade) {
                ++cascade.checked;
                for (auto& f : check_cascade_properties(rs, sums, s)) {
                    f.detail["property"] = f.property;
                    cascade.fail(std::move(f.detail));
                }
            }
        }
    }

    if (options.oracle || options.additivity) {
        std::vector<std::pair<SimpleType, std::vector<SimpleSet>>> plan;
        for (const auto& type : config.types)
            if (type.rank <= config.oracle_rank_cap)
                plan.emplace_back(type, sample_subsets(type.rank, 1 << type.rank, 0));
        for (const auto& type : config.spot_types)
            if (type.rank > config.oracle_rank_cap)
                plan.emplace_back(type, sample_subsets(type.rank, config.spot_samples, type_seed(config.seed, type)));

        for (const auto& [type, subsets] : plan) {
            const ChevalleyAlgebra g{RootSystem(type)};
            const auto& rs = g.root_system();
            for (SimpleSet s : subsets) {
                const IndexReport formula = index_report(rs, s);
                if (options.oracle) {
                    ++oracle.checked;
                    const int chi_p = index_oracle(SubalgebraSelection::parabolic(g, s), config.trials, config.seed);
                    const int chi_u = index_oracle(SubalgebraSelection::nilradical(g, s), config.trials, config.seed);
                    for (auto [name, f, o] : {std::tuple{"chi_p", formula.chi_p, chi_p}, std::tuple{"chi_u", formula.chi_u, chi_u}}) {
                        if (f == o) continue;
                        auto d = where(rs, s);
                        d.update({{"quantity", name}, {"formula", f}, {"oracle", o}, {"seed", config.seed}});
                        oracle.fail(std::move(d));
                    }
                }
                if (options.additivity && formula.equality) {
                    ++additivity.checked;
                    const auto r = additivity_check(g, s, config.trials, config.seed);
                    if (!r.holds) {
                        auto d = to_json(rs, s, r);
                        d["seed"] = config.seed;
                        additivity.fail(std::move(d));
                    }
                }
            }
        }
    }

    if (options.index) report.suites.push_back(std::move(index));
    if (options.cascade) report.suites.push_back(std::move(cascade));
    if (options.oracle) report.suites.push_back(std::move(oracle));
    if (options.additivity) report.suites.push_back(std::move(additivity));
}

}  // namespace

VerifyReport run_verify(const RunConfig& config, const VerifyOptions& options)
{
    config.validate();
    VerifyReport report;
    report.config = to_json(config);
    try {
        run_sweeps(config, options, report);
    } catch (const InternalConsistencyError& e) {
        report.suites.clear();
        report.internal_error = e.what();
    }
    return report;
}

}  // namespace kcascade
