#pragma once

#include "kcascade/rootsys.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kcascade {

enum class OutputFormat { json, csv, markdown };

OutputFormat parse_format(std::string_view text);
const char* to_string(OutputFormat f);

inline constexpr std::string_view default_type_list = "A1..A8,B2..B8,C2..C8,D4..D8,E6,E7,E8,F4,G2";
inline constexpr std::string_view default_spot_types = "F4,A5,D5";

struct RunConfig {
    std::vector<SimpleType> types;
    int max_enum_rank = 8;
    int oracle_rank_cap = 4;
    int trials = 5;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> output_path;
    /// Types above the oracle cap that still get a random sample of subsets.
    std::vector<SimpleType> spot_types;
    int spot_samples = 10;

    /// Throws std::invalid_argument when a cap or count is not positive.
    void validate() const;
};

RunConfig default_config();

/// Parses "A1..A10,B2..B8,E6,G2". A range keeps the family and walks the rank.
std::vector<SimpleType> parse_type_list(std::string_view text);

/// Parses "all", "none", or comma-separated 1-based simple root indices.
SimpleSet parse_subset(const RootSystem& rs, std::string_view text);

nlohmann::json to_json(const RunConfig& c);

}  // namespace kcascade
