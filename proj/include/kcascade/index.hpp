#pragma once

#include "kcascade/cascade.hpp"
#include "kcascade/rootsys.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace kcascade {

/*
 * Combinatorial data attached to the standard parabolic p_S = h + sum over
 * R_S u R^+ of root spaces, and its nilradical u_S (the roots R^+ \ R_S).
 *
 *   T_S  union of the K in K(Pi) contained in S
 *   E_S  K in K(Pi) whose eps_K is not in R_S  (equals K(Pi) \ K(T_S))
 *   Q_S  (union of Gamma^K over E_S) intersected with R_S^+
 *   V_S  span of R(S) u R(Pi)
 */
struct ParabolicSpec {
    int rank = 0;
    SimpleSet s;
    SimpleSet t_s;
    Cascade k_s;
    Cascade k_pi;
    Cascade k_ts;
    /// Supports of E_S in K(Pi) element order.
    std::vector<SimpleSet> e_s;
    /// Root ids of Q_S, ascending.
    std::vector<int> q_s;
    int dim_v_s = 0;
    int dim_p = 0;
    int dim_u = 0;
    int dim_levi = 0;
};

ParabolicSpec parabolic_spec(const RootSystem& rs, SimpleSet s);

/// dim V_S, by exact rank of the eps_K coordinates for K in K(S) u K(Pi).
int dim_v(const RootSystem& rs, SimpleSet s);

/// chi(p_S) = rk + #K(Pi) + #K(S) - 2 dim V_S.
int chi_parabolic(const ParabolicSpec& spec);

/// The two expressions for chi(u_S).
struct NilradicalForms {
    int via_gamma = 0;  ///< #E_S + sum_{K in E_S} #Gamma^K - dim u_S
    int via_q = 0;      ///< #E_S + #Q_S
};

NilradicalForms nilradical_forms(const ParabolicSpec& spec);

/// chi(u_S); throws InternalConsistencyError if the two forms disagree.
int chi_nilradical(const ParabolicSpec& spec);

/// Summands of the closed form of chi(p_S) + chi(u_S).
struct SumTerms {
    int k_s = 0;
    int k_ts = 0;
    int k_pi = 0;
    int dim_v_s = 0;
    int q_s = 0;

    /// rk + #K(S) - #K(T_S) + 2(#K(Pi) - dim V_S) + #Q_S.
    int closed_form(int rank) const { return rank + k_s - k_ts + 2 * (k_pi - dim_v_s) + q_s; }
};

struct IndexReport {
    SimpleSet subset;
    int chi_p = 0;
    int chi_u = 0;
    int sum = 0;
    int rank = 0;
    bool equality = false;
    bool cond_i = false;
    bool cond_ii = false;
    SumTerms terms;
    int dim_levi = 0;
};

/// Condition (i): #(K(S) u K(Pi)) = dim V_S, evaluated factor by factor.
bool condition_i(const RootSystem& rs, const ParabolicSpec& spec);

/// Condition (ii): each component S' of S lies in K(Pi) or has #(S' \ T_S) = 1.
bool condition_ii(const RootSystem& rs, const ParabolicSpec& spec);

IndexReport index_report(const RootSystem& rs, const ParabolicSpec& spec);
IndexReport index_report(const RootSystem& rs, SimpleSet s);

struct SubsetReport {
    SimpleSet subset;
    IndexReport report;
};

struct EqualityEnumeration {
    std::vector<SubsetReport> reports;    ///< every S in numeric mask order
    std::vector<SimpleSet> equality;      ///< the S with chi_p + chi_u = rk
};

constexpr int max_enumeration_rank = 16;

/// Reports for all S; throws CounterexampleError if equality and (i) and (ii) ever disagree.
EqualityEnumeration enumerate_equality(const RootSystem& rs);

enum class MinimalBranch {
    in_full_cascade,   ///< {alpha} in K(Pi): sum = rk
    raised_dimension,  ///< dim V_S = #K(Pi) + 1: sum = rk
    same_dimension,    ///< dim V_S = #K(Pi): sum = rk + 2
};

const char* to_string(MinimalBranch b);

struct MinimalParabolicRow {
    int index = 0;  ///< 1-based simple root index
    MinimalBranch branch = MinimalBranch::in_full_cascade;
    int sum = 0;
    int rank = 0;
    bool equality = false;
};

std::vector<MinimalParabolicRow> minimal_parabolic_classification(const SimpleType& t);

/// 1-based i such that S = Pi \ {alpha_i} gives chi_p + chi_u = rk.
std::vector<int> maximal_parabolic_equality(const SimpleType& t);

nlohmann::json to_json(const RootSystem& rs, const IndexReport& r);

}  // namespace kcascade
