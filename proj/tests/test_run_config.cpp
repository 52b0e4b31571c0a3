#include "kcascade/run_config.hpp"

#include <doctest.h>

using namespace kcascade;

TEST_CASE("type lists")
{
    const auto types = parse_type_list("A1..A3, E6,G2");
    REQUIRE(types.size() == 5);
    CHECK(types[2] == SimpleType{Family::A, 3});
    CHECK(types[3] == SimpleType{Family::E, 6});
    CHECK(parse_type_list(default_type_list).size() == 8 + 7 + 7 + 5 + 5);
    for (const char* bad : {"", ",", "A3..B5", "A5..A3", "E5..E7", "B1..B3", "Q4"})
        CHECK_THROWS_AS(parse_type_list(bad), std::invalid_argument);
}

TEST_CASE("subsets use 1-based indices")
{
    const RootSystem rs = RootSystem::parse("A4");
    CHECK(parse_subset(rs, "all") == rs.all());
    CHECK(parse_subset(rs, "none").empty());
    CHECK(parse_subset(rs, "1,3") == SimpleSet::of({0, 2}));
    CHECK(parse_subset(rs, "4") == SimpleSet::of({3}));
    for (const char* bad : {"0", "5", "1,,2", "x", "1.5", "-1"})
        CHECK_THROWS_AS(parse_subset(rs, bad), std::invalid_argument);
}

TEST_CASE("output formats")
{
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("markdown") == OutputFormat::markdown);
    CHECK(parse_format("md") == OutputFormat::markdown);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
    CHECK(std::string(to_string(OutputFormat::csv)) == "csv");
}

TEST_CASE("config validation")
{
    RunConfig c = default_config();
    CHECK_NOTHROW(c.validate());
    CHECK(c.spot_types.size() == 3);
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = default_config();
    c.max_enum_rank = 17;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = default_config();
    c.oracle_rank_cap = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);

    const auto doc = to_json(default_config());
    CHECK(doc["trials"] == 5);
    CHECK(doc["types"].front() == "A1");
    CHECK(doc["spot_types"] == nlohmann::json{"F4", "A5", "D5"});
}
