#include "kcascade/cascade.hpp"
#include "kcascade/index.hpp"
#include "kcascade/run_config.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace kcascade;

namespace {

int rank_of_cascade_roots(const RootSystem& rs, SimpleSet s)
{
    std::vector<std::vector<int>> rows;
    for (const auto& r : kostant_cascade(rs, s).cascade_roots()) rows.push_back(r.coeffs);
    for (const auto& r : kostant_cascade(rs, rs.all()).cascade_roots()) rows.push_back(r.coeffs);
    return oracle::rational_rank(rows);
}

std::vector<int> equality_indices(const SimpleType& t)
{
    std::vector<int> out;
    for (const auto& row : minimal_parabolic_classification(t))
        if (row.equality) out.push_back(row.index);
    return out;
}

}  // namespace

TEST_CASE("Borel subalgebra")
{
    for (const auto& t : parse_type_list("A1..A6,B2..B5,C2..C5,D4..D6,E6,F4,G2")) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        const ParabolicSpec spec = parabolic_spec(rs, SimpleSet{});
        CHECK(spec.t_s.empty());
        CHECK(spec.e_s.size() == spec.k_pi.size());
        CHECK(spec.q_s.empty());
        CHECK(spec.dim_u == rs.num_positive());
        CHECK(spec.dim_v_s == static_cast<int>(spec.k_pi.size()));
        CHECK(chi_nilradical(spec) == static_cast<int>(spec.k_pi.size()));
        const IndexReport r = index_report(rs, spec);
        CHECK(r.sum == rs.rank());
        CHECK(r.equality);
    }
    // #K(Pi) = rank for C, so the Borel subalgebra is Frobenius.
    for (int l = 2; l <= 8; ++l) CHECK(index_report(RootSystem(SimpleType{Family::C, l}), SimpleSet{}).chi_p == 0);
}

TEST_CASE("whole algebra")
{
    for (const auto& t : parse_type_list("A4,B3,D5,E7,G2")) {
        const RootSystem rs(t);
        const ParabolicSpec spec = parabolic_spec(rs, rs.all());
        CHECK(spec.t_s == rs.all());
        CHECK(spec.e_s.empty());
        CHECK(spec.q_s.empty());
        CHECK(spec.dim_u == 0);
        CHECK(chi_parabolic(spec) == rs.rank());
        CHECK(chi_nilradical(spec) == 0);
    }
}

TEST_CASE("A2 with S = {alpha_1}")
{
    const RootSystem rs = RootSystem::parse("A2");
    const ParabolicSpec spec = parabolic_spec(rs, SimpleSet::of({0}));
    CHECK(spec.t_s.empty());
    CHECK(spec.e_s == std::vector{rs.all()});
    CHECK(spec.q_s == std::vector{rs.simple_root_id(0)});
    CHECK(spec.dim_v_s == 2);
    CHECK(dim_v(rs, SimpleSet::of({0})) == 2);
    CHECK(chi_parabolic(spec) == 0);
    CHECK(chi_nilradical(spec) == 2);
    const auto forms = nilradical_forms(spec);
    CHECK(forms.via_gamma == forms.via_q);
}

TEST_CASE("dim V_S against an independent rank")
{
    for (const auto& t : parse_type_list("A1..A6,B2..B5,C2..C5,D4..D6,E6,F4,G2")) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rs.rank()); ++bits)
            CHECK(dim_v(rs, SimpleSet(bits)) == rank_of_cascade_roots(rs, SimpleSet(bits)));
    }
    for (int l = 2; l <= 6; ++l) {
        const RootSystem rs(SimpleType{Family::B, l});
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l); ++bits) CHECK(dim_v(rs, SimpleSet(bits)) == l);
    }
}

TEST_CASE("parabolic dimensions")
{
    const RootSystem rs = RootSystem::parse("D5");
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
        const ParabolicSpec spec = parabolic_spec(rs, SimpleSet(bits));
        const int levi_roots = static_cast<int>(rs.positive_roots_in(spec.s).size());
        CHECK(spec.dim_levi == rs.rank() + 2 * levi_roots);
        CHECK(spec.dim_u == rs.num_positive() - levi_roots);
        CHECK(spec.dim_p == spec.dim_levi + spec.dim_u);
    }
    CHECK_THROWS_AS(parabolic_spec(rs, SimpleSet::single(5)), std::invalid_argument);
}

TEST_CASE("selected index reports")
{
    const IndexReport e6 = index_report(RootSystem::parse("E6"), SimpleSet::of({1}));
    CHECK(e6.sum == 8);
    CHECK_FALSE(e6.equality);

    const IndexReport e6_4 = index_report(RootSystem::parse("E6"), SimpleSet::of({3}));
    CHECK(e6_4.sum == 6);
    CHECK(e6_4.equality);

    const IndexReport g2 = index_report(RootSystem::parse("G2"), SimpleSet::of({0}));
    CHECK(g2.sum == 2);
    CHECK(g2.equality);

    for (int l = 2; l <= 10; ++l) {
        const RootSystem rs(SimpleType{Family::A, l});
        CHECK(index_report(rs, rs.all() - SimpleSet::single(0)).equality);
        CHECK(index_report(rs, rs.all() - SimpleSet::single(l - 1)).equality);
    }
}

TEST_CASE("closed form and conditions")
{
    for (const auto& t : parse_type_list("A5,B4,C4,D5,E6,F4,G2")) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        const Cascade k_pi = kostant_cascade(rs, rs.all());
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rs.rank()); ++bits) {
            const SimpleSet s(bits);
            const ParabolicSpec spec = parabolic_spec(rs, s);
            const IndexReport r = index_report(rs, spec);
            CHECK(r.sum == r.terms.closed_form(rs.rank()));
            CHECK(r.chi_p == rs.rank() + static_cast<int>(spec.k_pi.size() + spec.k_s.size()) - 2 * spec.dim_v_s);

            std::set<SimpleSet> supports;
            for (SimpleSet x : spec.k_s.supports()) supports.insert(x);
            for (SimpleSet x : k_pi.supports()) supports.insert(x);
            CHECK(r.cond_i == (static_cast<int>(supports.size()) == spec.dim_v_s));

            bool ii = true;
            for (SimpleSet c : rs.connected_components(s))
                ii = ii && (k_pi.contains(c) || (c - spec.t_s).size() == 1);
            CHECK(r.cond_ii == ii);
            CHECK(r.equality == (r.cond_i && r.cond_ii));
        }
    }
}

TEST_CASE("enumeration")
{
    const auto g2 = enumerate_equality(RootSystem::parse("G2"));
    CHECK(g2.reports.size() == 4);
    CHECK(g2.equality == std::vector{SimpleSet{}, SimpleSet::of({0}), SimpleSet::of({0, 1})});

    const auto a1 = enumerate_equality(RootSystem::parse("A1"));
    CHECK(a1.equality.size() == 2);

    CHECK_THROWS_AS(enumerate_equality(RootSystem(SimpleType{Family::A, 17})), std::invalid_argument);
}

TEST_CASE("minimal parabolics")
{
    for (int l = 2; l <= 8; ++l) {
        std::vector<int> odd;
        for (int i = 1; i <= l; i += 2) odd.push_back(i);
        CHECK(equality_indices(SimpleType{Family::B, l}) == odd);
        CHECK(equality_indices(SimpleType{Family::C, l}) == std::vector{l});
    }
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> expected;
        for (int i = 1; i < 2 * n; i += 2) expected.push_back(i);
        expected.push_back(2 * n);
        CHECK(equality_indices(SimpleType{Family::D, 2 * n}) == expected);
    }
    CHECK(equality_indices(SimpleType{Family::F, 4}) == std::vector{2});
    CHECK(equality_indices(SimpleType{Family::G, 2}) == std::vector{1});

    for (const auto& row : minimal_parabolic_classification(SimpleType{Family::E, 6})) {
        CAPTURE(row.index);
        CHECK(row.equality == (row.index != 2));
        CHECK((row.branch == MinimalBranch::in_full_cascade) == (row.index == 4));
        CHECK(row.sum == row.rank + (row.branch == MinimalBranch::same_dimension ? 2 : 0));
    }
}

TEST_CASE("maximal parabolics in type A")
{
    for (int l = 2; l <= 10; ++l) CHECK(maximal_parabolic_equality(SimpleType{Family::A, l}) == std::vector{1, l});
}
