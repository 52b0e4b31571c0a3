#include "kcascade/cascade.hpp"
#include "kcascade/run_config.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <functional>

using namespace kcascade;

namespace {

std::set<oracle::Coeffs> gamma_coeffs(const RootSystem& rs, const CascadeElement& e)
{
    std::set<oracle::Coeffs> out;
    for (int id : e.gamma) out.insert(rs.root(id).coeffs);
    return out;
}

std::set<oracle::Coeffs> positive_roots_where(const RootSystem& rs, SimpleSet support,
                                              const std::function<bool(const oracle::Coeffs&)>& pred)
{
    std::set<oracle::Coeffs> out;
    for (int id : rs.positive_roots_in(support))
        if (pred(rs.root(id).coeffs)) out.insert(rs.root(id).coeffs);
    return out;
}

// 1-based interval {alpha_a, ..., alpha_b}.
SimpleSet nodes(int a, int b)
{
    SimpleSet s;
    for (int i = a; i <= b; ++i) s.insert(i - 1);
    return s;
}

}  // namespace

TEST_CASE("empty base")
{
    const RootSystem rs = RootSystem::parse("E7");
    const Cascade k = kostant_cascade(rs, SimpleSet{});
    CHECK(k.empty());
    CHECK(k.cascade_roots().empty());
    CHECK_THROWS_AS(kostant_cascade(rs, SimpleSet::single(7)), std::invalid_argument);
}

TEST_CASE("type A: nested intervals")
{
    for (int l = 1; l <= 10; ++l) {
        CAPTURE(l);
        const RootSystem rs(SimpleType{Family::A, l});
        const Cascade k = kostant_cascade(rs, rs.all());
        const int count = (l + 1) / 2;
        REQUIRE(static_cast<int>(k.size()) == count);
        for (int i = 1; i <= count; ++i) {
            const CascadeElement* e = k.find(nodes(i, l + 1 - i));
            REQUIRE(e != nullptr);
            CHECK(e->eps.coeffs == oracle::interval(l, i, l + 1 - i));

            std::set<oracle::Coeffs> expected{oracle::interval(l, i, l + 1 - i)};
            for (int r = 0; r <= l - 2 * i; ++r) {
                expected.insert(oracle::interval(l, i, i + r));
                expected.insert(oracle::interval(l, l + 1 - i - r, l + 1 - i));
            }
            CHECK(gamma_coeffs(rs, *e) == expected);
            CHECK(static_cast<int>(e->gamma.size()) == 2 * (l - 2 * i + 1) + 1);
        }
    }
}

TEST_CASE("type D odd rank: K_i and L_i")
{
    for (int n = 2; n <= 4; ++n) {
        const int l = 2 * n + 1;
        CAPTURE(l);
        const RootSystem rs(SimpleType{Family::D, l});
        const Cascade k = kostant_cascade(rs, rs.all());
        REQUIRE(static_cast<int>(k.size()) == 2 * n);
        for (int i = 1; i <= n; ++i) {
            const CascadeElement* ki = k.find(nodes(2 * i - 1, l));
            const CascadeElement* li = k.find(nodes(2 * i - 1, 2 * i - 1));
            REQUIRE(ki != nullptr);
            REQUIRE(li != nullptr);
            CHECK(gamma_coeffs(rs, *li) == std::set{oracle::simple(l, {{2 * i - 1, 1}})});

            const auto m2i = [&](const oracle::Coeffs& c) { return c[2 * i - 1] != 0; };
            if (i < n) {
                CHECK(gamma_coeffs(rs, *ki) == positive_roots_where(rs, ki->support, m2i));
            } else {
                // K_n is an A3 whose middle node is alpha_{2n-1}; eps pairs positively with both ends.
                const auto either_end = [&](const oracle::Coeffs& c) { return c[l - 2] != 0 || c[l - 1] != 0; };
                CHECK(gamma_coeffs(rs, *ki) == positive_roots_where(rs, ki->support, either_end));
                CHECK(ki->gamma.size() == 5);
                CHECK(positive_roots_where(rs, ki->support, m2i).size() == 3);
            }
        }
    }
}

TEST_CASE("type D odd rank: D7 supports")
{
    const RootSystem rs = RootSystem::parse("D7");
    const Cascade k = kostant_cascade(rs, rs.all());
    std::vector<SimpleSet> expected{nodes(1, 7), nodes(1, 1), nodes(3, 7), nodes(3, 3), nodes(5, 7), nodes(5, 5)};
    std::sort(expected.begin(), expected.end());
    CHECK(k.supports() == expected);
}

TEST_CASE("E6 golden cascade")
{
    const RootSystem rs = RootSystem::parse("E6");
    const Cascade k = kostant_cascade(rs, rs.all());
    std::ifstream f(KCASCADE_GOLDEN_DIR "/e6_cascade.json");
    REQUIRE(f);
    CHECK(to_json(rs, k) == nlohmann::json::parse(f));

    const CascadeElement* a5 = k.find(SimpleSet::of({0, 2, 3, 4, 5}));
    REQUIRE(a5 != nullptr);
    REQUIRE(a5->parent);
    CHECK(*a5->parent == rs.all());
    CHECK_FALSE(k.elements().front().parent);
}

TEST_CASE("cardinality of the full cascade")
{
    for (const auto& t : parse_type_list("A1..A12,B2..B10,C2..C10,D4..D10,E6,E7,E8,F4,G2")) {
        CAPTURE(t.name());
        int expected = 0;
        switch (t.family) {
        case Family::A: expected = (t.rank + 1) / 2; break;
        case Family::B:
        case Family::C: expected = t.rank; break;
        case Family::D: expected = 2 * (t.rank / 2); break;
        case Family::E: expected = t.rank == 6 ? 4 : t.rank; break;
        case Family::F: expected = 4; break;
        case Family::G: expected = 2; break;
        }
        CHECK(cardinality_of_full_cascade(t) == expected);
    }
}

TEST_CASE("Heisenberg sets")
{
    for (const auto& t : parse_type_list("A6,B5,C5,D6,E6,F4,G2")) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        for (int i = 0; i < rs.rank(); ++i)
            CHECK(gamma_set(rs, SimpleSet::single(i)) == std::vector{rs.simple_root_id(i)});

        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rs.rank()); ++bits) {
            const SimpleSet s(bits);
            const Cascade k = kostant_cascade(rs, s);
            std::size_t covered = 0;
            for (const auto& e : k.elements()) {
                CHECK(e.support.subset_of(s));
                CHECK(rs.is_connected(e.support));
                CHECK(e.eps == rs.highest_root_of(e.support));
                CHECK(e.gamma.size() % 2 == 1);
                CHECK(std::binary_search(e.gamma.begin(), e.gamma.end(), rs.id_of(e.eps)));
                covered += e.gamma.size();
            }
            const auto pos = rs.positive_roots_in(s);
            CHECK(covered == pos.size());
            for (int id : pos) {
                const CascadeElement* e = k.find_enclosing(id);
                REQUIRE(e != nullptr);
                CHECK(rs.coroot_pairing(rs.root(id), e->eps) > 0);
            }
        }
    }
}

TEST_CASE("products split over factors")
{
    const RootSystem rs = RootSystem::parse("A3xG2");
    const Cascade k = kostant_cascade(rs, rs.all());
    CHECK(k.supports() ==
          std::vector{SimpleSet::of({1}), SimpleSet::of({0, 1, 2}), SimpleSet::of({3}), SimpleSet::of({3, 4})});
}
