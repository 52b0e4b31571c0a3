#include "kcascade/run_config.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace kcascade {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto end = s.find(sep, start);
        out.push_back(trim(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace

OutputFormat parse_format(std::string_view text)
{
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "markdown" || text == "md") return OutputFormat::markdown;
    throw std::invalid_argument(fmt::format("unknown output format '{}'", text));
}

const char* to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::markdown: return "markdown";
    }
    return "?";
}

void RunConfig::validate() const
{
    if (max_enum_rank < 1 || max_enum_rank > 16) throw std::invalid_argument("max-enum-rank must be in 1..16");
    if (oracle_rank_cap < 1) throw std::invalid_argument("oracle-rank-cap must be positive");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (spot_samples < 0) throw std::invalid_argument("spot sample count must be non-negative");
}

RunConfig default_config()
{
    RunConfig c;
    c.types = parse_type_list(default_type_list);
    c.spot_types = parse_type_list(default_spot_types);
    return c;
}

std::vector<SimpleType> parse_type_list(std::string_view text)
{
    std::vector<SimpleType> out;
    for (auto item : split(text, ',')) {
        if (item.empty()) continue;
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(SimpleType::parse(item));
            continue;
        }
        const SimpleType lo = SimpleType::parse(item.substr(0, dots));
        const SimpleType hi = SimpleType::parse(item.substr(dots + 2));
        if (lo.family != hi.family || lo.rank > hi.rank)
            throw std::invalid_argument(fmt::format("malformed type range '{}'", item));
        for (int r = lo.rank; r <= hi.rank; ++r) {
            SimpleType t{lo.family, r};
            validate(t);
            out.push_back(t);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty type list");
    return out;
}

SimpleSet parse_subset(const RootSystem& rs, std::string_view text)
{
    text = trim(text);
    if (text == "all") return rs.all();
    if (text == "none" || text.empty()) return SimpleSet();
    SimpleSet s;
    for (auto item : split(text, ',')) {
        int i = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), i);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument(fmt::format("malformed simple root index '{}'", item));
        if (i < 1 || i > rs.rank())
            throw std::invalid_argument(fmt::format("simple root index {} outside 1..{}", i, rs.rank()));
        s.insert(i - 1);
    }
    return s;
}

nlohmann::json to_json(const RunConfig& c)
{
    std::vector<std::string> types, spots;
    for (const auto& t : c.types) types.push_back(t.name());
    for (const auto& t : c.spot_types) spots.push_back(t.name());
    return {{"types", types},
            {"max_enum_rank", c.max_enum_rank},
            {"oracle_rank_cap", c.oracle_rank_cap},
            {"trials", c.trials},
            {"seed", c.seed},
            {"spot_types", spots},
            {"spot_samples", c.spot_samples}};
}

}  // namespace kcascade
