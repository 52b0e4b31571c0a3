#include "kcascade/index.hpp"

#include "kcascade/errors.hpp"
#include "kcascade/linalg.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace kcascade {

namespace {

int rank_of_roots(const std::vector<Root>& roots)
{
    if (roots.empty()) return 0;
    std::vector<std::vector<int>> rows;
    rows.reserve(roots.size());
    for (const auto& r : roots) rows.push_back(r.coeffs);
    return static_cast<int>(exact_rank(rows));
}

std::vector<Root> span_generators(const Cascade& k_s, const Cascade& k_pi, SimpleSet within)
{
    std::vector<Root> out;
    for (const Cascade* c : {&k_s, &k_pi})
        for (const auto& e : c->elements())
            if (e.support.subset_of(within)) out.push_back(e.eps);
    return out;
}

std::size_t union_count(const Cascade& a, const Cascade& b, SimpleSet within)
{
    std::set<SimpleSet> u;
    for (const Cascade* c : {&a, &b})
        for (const auto& e : c->elements())
            if (e.support.subset_of(within)) u.insert(e.support);
    return u.size();
}

}  // namespace

ParabolicSpec parabolic_spec(const RootSystem& rs, SimpleSet s)
{
    if (!s.subset_of(rs.all())) throw std::invalid_argument("parabolic_spec: subset outside the simple roots");

    ParabolicSpec spec;
    spec.rank = rs.rank();
    spec.s = s;
    spec.k_pi = kostant_cascade(rs, rs.all());
    spec.k_s = kostant_cascade(rs, s);
    for (const auto& e : spec.k_pi.elements())
        if (e.support.subset_of(s)) spec.t_s = spec.t_s | e.support;
    spec.k_ts = kostant_cascade(rs, spec.t_s);

    std::set<int> q;
    for (const auto& e : spec.k_pi.elements()) {
        if (rs.support(e.eps).subset_of(s)) continue;
        spec.e_s.push_back(e.support);
        for (int id : e.gamma)
            if (rs.support(rs.root(id)).subset_of(s)) q.insert(id);
    }
    spec.q_s.assign(q.begin(), q.end());

    // E_S has a second description through T_S; both must give the same set.
    std::vector<SimpleSet> via_ts;
    for (const auto& e : spec.k_pi.elements())
        if (!spec.k_ts.contains(e.support)) via_ts.push_back(e.support);
    if (via_ts != spec.e_s)
        throw InternalConsistencyError(fmt::format("{} S={}: E_S differs from K(Pi) \\ K(T_S)", rs.name(), s.to_string()));

    spec.dim_v_s = rank_of_roots(span_generators(spec.k_s, spec.k_pi, rs.all()));

    const int levi_pos = static_cast<int>(rs.positive_roots_in(s).size());
    spec.dim_p = rs.rank() + rs.num_positive() + levi_pos;
    spec.dim_u = rs.num_positive() - levi_pos;
    spec.dim_levi = rs.rank() + 2 * levi_pos;
    return spec;
}

int dim_v(const RootSystem& rs, SimpleSet s)
{
    const Cascade k_pi = kostant_cascade(rs, rs.all());
    const Cascade k_s = kostant_cascade(rs, s);
    return rank_of_roots(span_generators(k_s, k_pi, rs.all()));
}

int chi_parabolic(const ParabolicSpec& spec)
{
    const int chi = spec.rank + static_cast<int>(spec.k_pi.size()) + static_cast<int>(spec.k_s.size()) -
                    2 * spec.dim_v_s;
    if (chi < 0) throw InternalConsistencyError(fmt::format("chi(p_S) = {} < 0 for S={}", chi, spec.s.to_string()));
    return chi;
}

NilradicalForms nilradical_forms(const ParabolicSpec& spec)
{
    const int e = static_cast<int>(spec.e_s.size());
    int gamma_total = 0;
    for (SimpleSet k : spec.e_s) gamma_total += static_cast<int>(spec.k_pi.find(k)->gamma.size());
    return NilradicalForms{e + gamma_total - spec.dim_u, e + static_cast<int>(spec.q_s.size())};
}

int chi_nilradical(const ParabolicSpec& spec)
{
    const auto forms = nilradical_forms(spec);
    if (forms.via_gamma != forms.via_q)
        throw InternalConsistencyError(fmt::format("chi(u_S) forms disagree for S={}: {} vs {}", spec.s.to_string(),
                                                   forms.via_gamma, forms.via_q));
    return forms.via_q;
}

bool condition_i(const RootSystem& rs, const ParabolicSpec& spec)
{
    // Both sides split over the simple factors and the left side bounds the
    // right one on each factor, so the global equality holds iff it holds per factor.
    for (int f = 0; f < static_cast<int>(rs.factors().size()); ++f) {
        const SimpleSet nodes = rs.factor_nodes(f);
        const int dim = rank_of_roots(span_generators(spec.k_s, spec.k_pi, nodes));
        if (static_cast<int>(union_count(spec.k_s, spec.k_pi, nodes)) != dim) return false;
    }
    return true;
}

bool condition_ii(const RootSystem& rs, const ParabolicSpec& spec)
{
    for (SimpleSet comp : rs.connected_components(spec.s)) {
        if (spec.k_pi.contains(comp)) continue;
        if ((comp - spec.t_s).size() != 1) return false;
    }
    return true;
}

IndexReport index_report(const RootSystem& rs, const ParabolicSpec& spec)
{
    IndexReport r;
    r.subset = spec.s;
    r.rank = rs.rank();
    r.chi_p = chi_parabolic(spec);
    r.chi_u = chi_nilradical(spec);
    r.sum = r.chi_p + r.chi_u;
    r.equality = r.sum == r.rank;
    r.cond_i = condition_i(rs, spec);
    r.cond_ii = condition_ii(rs, spec);
    r.terms = SumTerms{static_cast<int>(spec.k_s.size()), static_cast<int>(spec.k_ts.size()),
                       static_cast<int>(spec.k_pi.size()), spec.dim_v_s, static_cast<int>(spec.q_s.size())};
    r.dim_levi = spec.dim_levi;
    if (r.terms.closed_form(r.rank) != r.sum)
        throw InternalConsistencyError(fmt::format("{} S={}: closed form {} != chi_p + chi_u = {}", rs.name(),
                                                   spec.s.to_string(), r.terms.closed_form(r.rank), r.sum));
    return r;
}

IndexReport index_report(const RootSystem& rs, SimpleSet s) { return index_report(rs, parabolic_spec(rs, s)); }

EqualityEnumeration enumerate_equality(const RootSystem& rs)
{
    if (rs.rank() > max_enumeration_rank)
        throw std::invalid_argument(fmt::format("enumerate_equality: rank {} exceeds {}", rs.rank(), max_enumeration_rank));
    EqualityEnumeration out;
    const std::uint64_t count = std::uint64_t{1} << rs.rank();
    out.reports.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const SimpleSet s(mask);
        IndexReport r = index_report(rs, s);
        if (r.equality != (r.cond_i && r.cond_ii))
            throw CounterexampleError(fmt::format("{} S={}: equality={} but (i)={} (ii)={}", rs.name(), s.to_string(),
                                                  r.equality, r.cond_i, r.cond_ii),
                                      to_json(rs, r));
        if (r.equality) out.equality.push_back(s);
        out.reports.push_back(SubsetReport{s, r});
    }
    return out;
}

const char* to_string(MinimalBranch b)
{
    switch (b) {
    case MinimalBranch::in_full_cascade: return "in_full_cascade";
    case MinimalBranch::raised_dimension: return "raised_dimension";
    case MinimalBranch::same_dimension: return "same_dimension";
    }
    return "?";
}

std::vector<MinimalParabolicRow> minimal_parabolic_classification(const SimpleType& t)
{
    const RootSystem rs(t);
    std::vector<MinimalParabolicRow> rows;
    for (int i = 0; i < rs.rank(); ++i) {
        const auto spec = parabolic_spec(rs, SimpleSet::single(i));
        const auto report = index_report(rs, spec);
        const int k_pi = static_cast<int>(spec.k_pi.size());
        MinimalParabolicRow row{i + 1, MinimalBranch::in_full_cascade, report.sum, report.rank, report.equality};
        if (spec.k_pi.contains(SimpleSet::single(i)))
            row.branch = MinimalBranch::in_full_cascade;
        else if (spec.dim_v_s == k_pi + 1)
            row.branch = MinimalBranch::raised_dimension;
        else if (spec.dim_v_s == k_pi)
            row.branch = MinimalBranch::same_dimension;
        else
            throw InternalConsistencyError(fmt::format("{} i={}: dim V_S = {} outside the three cases", t.name(), i + 1,
                                                       spec.dim_v_s));
        const int expected = row.branch == MinimalBranch::same_dimension ? report.rank + 2 : report.rank;
        if (expected != report.sum)
            throw InternalConsistencyError(fmt::format("{} i={}: branch {} predicts {}, got {}", t.name(), i + 1,
                                                       to_string(row.branch), expected, report.sum));
        rows.push_back(row);
    }
    return rows;
}

std::vector<int> maximal_parabolic_equality(const SimpleType& t)
{
    const RootSystem rs(t);
    std::vector<int> out;
    for (int i = 0; i < rs.rank(); ++i) {
        SimpleSet s = rs.all();
        s.erase(i);
        if (index_report(rs, s).equality) out.push_back(i + 1);
    }
    return out;
}

nlohmann::json to_json(const RootSystem& rs, const IndexReport& r)
{
    std::vector<int> subset;
    for (int i : r.subset.indices()) subset.push_back(i + 1);
    return {
        {"type", rs.name()},
        {"rank", r.rank},
        {"subset", subset},
        {"chi_p", r.chi_p},
        {"chi_u", r.chi_u},
        {"sum", r.sum},
        {"equality", r.equality},
        {"cond_i", r.cond_i},
        {"cond_ii", r.cond_ii},
        {"terms",
         {{"kS", r.terms.k_s}, {"kTS", r.terms.k_ts}, {"kPi", r.terms.k_pi}, {"dimVS", r.terms.dim_v_s},
          {"QS", r.terms.q_s}}},
    };
}

}  // namespace kcascade
