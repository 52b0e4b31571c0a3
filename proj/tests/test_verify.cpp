#include "kcascade/run_config.hpp"
#include "kcascade/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kcascade;

namespace {

RunConfig small_config()
{
    RunConfig c = default_config();
    c.types = parse_type_list("A1..A4,B3,G2");
    c.spot_types = parse_type_list("A5");
    c.spot_samples = 4;
    return c;
}

}  // namespace

TEST_CASE("subset sampling")
{
    const auto a = sample_subsets(7, 10, 42);
    CHECK(a == sample_subsets(7, 10, 42));
    CHECK(a.size() == 10);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::set(a.begin(), a.end()).size() == a.size());
    for (SimpleSet s : a) CHECK(s.subset_of(SimpleSet::first(7)));
    CHECK(a != sample_subsets(7, 10, 43));
    CHECK(sample_subsets(3, 10, 1).size() == 8);
    CHECK(sample_subsets(3, 0, 1).empty());
}

TEST_CASE("root sums")
{
    const RootSystem rs = RootSystem::parse("B2");
    const RootSums sums(rs);
    for (int a = 0; a < rs.num_roots(); ++a)
        for (int b = 0; b < rs.num_roots(); ++b) {
            const auto id = rs.find(rs.root(a) + rs.root(b));
            CHECK(sums(a, b) == id);
        }
}

TEST_CASE("property checks hold")
{
    for (const char* name : {"E6", "F4", "C4", "A3xB2"}) {
        CAPTURE(name);
        const RootSystem rs = RootSystem::parse(name);
        const RootSums sums(rs);
        const IndexEvaluator eval = [](const RootSystem& r, SimpleSet s) { return index_report(r, s); };
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rs.rank()); ++bits) {
            CHECK(check_cascade_properties(rs, sums, SimpleSet(bits)).empty());
            CHECK(check_index_properties(rs, SimpleSet(bits), eval).empty());
        }
    }
}

TEST_CASE("small verify run passes and is reproducible")
{
    const VerifyReport a = run_verify(small_config());
    CHECK(a.passed());
    CHECK(a.exit_code() == 0);
    REQUIRE(a.suites.size() == 4);
    for (const auto& s : a.suites) CHECK(s.checked > 0);
    CHECK(a.to_json().dump() == run_verify(small_config()).to_json().dump());
}

TEST_CASE("a perturbed formula is caught with the offending subset")
{
    VerifyOptions options;
    options.oracle = false;
    options.additivity = false;
    options.evaluator = [](const RootSystem& rs, SimpleSet s) {
        IndexReport r = index_report(rs, s);
        if (s == SimpleSet::of({0})) ++r.chi_u, ++r.sum;
        return r;
    };
    const VerifyReport report = run_verify(small_config(), options);
    CHECK_FALSE(report.passed());
    CHECK(report.exit_code() == 2);
    const auto doc = report.to_json();
    bool saw_subset = false;
    for (const auto& suite : doc["suites"])
        for (const auto& f : suite["failures"])
            if (f.dump().find("\"subset\":[1]") != std::string::npos) saw_subset = true;
    CHECK(saw_subset);
}
