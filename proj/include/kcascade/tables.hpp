#pragma once

#include "kcascade/rootsys.hpp"
#include "kcascade/run_config.hpp"

#include <string>
#include <vector>

namespace kcascade {

/// A rendered-agnostic table. Every cell comes from a computation, never from a literal.
struct Table {
    std::string id;
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// #K(Pi) per type.
Table cascade_cardinality_table(const std::vector<SimpleType>& types);

/// Minimal parabolics S = {alpha_i} split by whether chi_p + chi_u = rk and whether {alpha_i} is in K(Pi).
Table minimal_parabolic_table(const std::vector<SimpleType>& types);

/// Maximal parabolics S = Pi \ {alpha_i} of the type-A entries with chi_p + chi_u = rk.
Table maximal_parabolic_table(const std::vector<SimpleType>& types);

std::vector<Table> all_tables(const std::vector<SimpleType>& types);

std::string render(const std::vector<Table>& tables, OutputFormat format);

/// "1,3,5" or "none".
std::string index_list(const std::vector<int>& one_based);

}  // namespace kcascade
