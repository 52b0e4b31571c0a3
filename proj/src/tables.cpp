#include "kcascade/tables.hpp"

#include "kcascade/cascade.hpp"
#include "kcascade/index.hpp"

#include <nlohmann/json.hpp>

#include <fmt/format.h>

namespace kcascade {

namespace {

constexpr const char* numbering_note = "simple roots numbered as in Bourbaki";

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string index_list(const std::vector<int>& one_based)
{
    if (one_based.empty()) return "none";
    return fmt::format("{}", fmt::join(one_based, ","));
}

Table cascade_cardinality_table(const std::vector<SimpleType>& types)
{
    Table t{"cascade_cardinality", "Cardinality of the cascade K(Pi)", {"type", "rank", "card_K_Pi"}, {}};
    for (const auto& type : types)
        t.rows.push_back({type.name(), std::to_string(type.rank), std::to_string(cardinality_of_full_cascade(type))});
    return t;
}

Table minimal_parabolic_table(const std::vector<SimpleType>& types)
{
    Table t{"minimal_parabolic",
            "Minimal parabolics p_S, S = {alpha_i}, with chi(p_S) + chi(u_S) = rk g",
            {"type", "equality_K_S_not_in_K_Pi", "equality_K_S_in_K_Pi", "no_equality"},
            {}};
    for (const auto& type : types) {
        std::vector<int> outside, inside, none;
        for (const auto& row : minimal_parabolic_classification(type)) {
            if (!row.equality)
                none.push_back(row.index);
            else if (row.branch == MinimalBranch::in_full_cascade)
                inside.push_back(row.index);
            else
                outside.push_back(row.index);
        }
        t.rows.push_back({type.name(), index_list(outside), index_list(inside), index_list(none)});
    }
    return t;
}

Table maximal_parabolic_table(const std::vector<SimpleType>& types)
{
    Table t{"maximal_parabolic_A",
            "Maximal parabolics S = Pi \\ {alpha_i} in type A with chi(p_S) + chi(u_S) = rk g",
            {"type", "equality_at_i"},
            {}};
    for (const auto& type : types) {
        if (type.family != Family::A) continue;
        t.rows.push_back({type.name(), index_list(maximal_parabolic_equality(type))});
    }
    return t;
}

std::vector<Table> all_tables(const std::vector<SimpleType>& types)
{
    return {cascade_cardinality_table(types), minimal_parabolic_table(types), maximal_parabolic_table(types)};
}

std::string render(const std::vector<Table>& tables, OutputFormat format)
{
    std::string out;
    switch (format) {
    case OutputFormat::json: {
        nlohmann::json doc = {{"numbering", "bourbaki"}, {"tables", nlohmann::json::array()}};
        for (const auto& t : tables) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : t.rows) {
                nlohmann::json row = nlohmann::json::object();
                for (std::size_t c = 0; c < t.columns.size(); ++c) row[t.columns[c]] = r[c];
                rows.push_back(row);
            }
            doc["tables"].push_back({{"id", t.id}, {"title", t.title}, {"columns", t.columns}, {"rows", rows}});
        }
        out = doc.dump(2) + "\n";
        break;
    }
    case OutputFormat::csv:
        for (const auto& t : tables) {
            out += fmt::format("# {}\n# {}\n", t.title, numbering_note);
            std::vector<std::string> header;
            for (const auto& c : t.columns) header.push_back(csv_cell(c));
            out += fmt::format("{}\n", fmt::join(header, ","));
            for (const auto& r : t.rows) {
                std::vector<std::string> cells;
                for (const auto& c : r) cells.push_back(csv_cell(c));
                out += fmt::format("{}\n", fmt::join(cells, ","));
            }
            out += "\n";
        }
        break;
    case OutputFormat::markdown:
        for (const auto& t : tables) {
            out += fmt::format("### {}\n\n_{}_\n\n", t.title, numbering_note);
            out += fmt::format("| {} |\n", fmt::join(t.columns, " | "));
            std::vector<std::string> rule(t.columns.size(), "---");
            out += fmt::format("| {} |\n", fmt::join(rule, " | "));
            for (const auto& r : t.rows) out += fmt::format("| {} |\n", fmt::join(r, " | "));
            out += "\n";
        }
        break;
    }
    return out;
}

}  // namespace kcascade
