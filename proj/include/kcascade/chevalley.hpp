#pragma once

#include "kcascade/rootsys.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kcascade {

/// One summand coeff * b_index of a bracket expanded in the basis.
struct Term {
    int index = 0;
    int coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
};

using SparseVector = std::vector<Term>;

/*
 * Semisimple Lie algebra in a Chevalley basis h_1..h_l, e_alpha (alpha in R):
 *
 *   [h_i, e_a]   = <a, alpha_i^vee> e_a
 *   [e_a, e_-a]  = h_a, the coroot of a over the simple coroots
 *   [e_a, e_b]   = N_{a,b} e_{a+b},  N_{a,b} = +-(p+1),  p = max{k : b - k a in R}
 *
 * Signs follow the extraspecial-pair convention: N = +(p+1) on every
 * extraspecial pair, N_{-a,-b} = -N_{a,b}, and all other constants are
 * forced by the Jacobi identity. Construction verifies the Jacobi identity
 * (exhaustively up to dimension 133, on a fixed random sample above) and
 * throws InternalConsistencyError on failure.
 *
 * Basis indices: 0..l-1 are h_i, l + id is e_{rs.root(id)}.
 */
class ChevalleyAlgebra {
public:
    enum class JacobiCheck { automatic, exhaustive, skip };

    explicit ChevalleyAlgebra(RootSystem rs, JacobiCheck check = JacobiCheck::automatic);

    const RootSystem& root_system() const { return rs_; }
    int dim() const { return dim_; }
    int rank() const { return rs_.rank(); }

    int h(int i) const { return i; }
    int e(int root_id) const { return rs_.rank() + root_id; }
    bool is_cartan(int b) const { return b < rs_.rank(); }
    /// Root id of a root vector basis element.
    int root_of(int b) const { return b - rs_.rank(); }

    const SparseVector& bracket(int a, int b) const { return table_[static_cast<std::size_t>(a) * dim_ + b]; }
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

    /// N_{a,b} for root ids; 0 when a + b is not a root.
    int structure_constant(int a, int b) const;

    std::string basis_label(int b) const;

    /// Number of (i <= j <= k) basis triples violating the Jacobi identity.
    /// sample = 0 checks every triple; otherwise that many triples drawn with a fixed seed.
    std::int64_t jacobi_violations(std::int64_t sample = 0) const;

    /// Number of pairs with [a,b] != -[b,a].
    std::int64_t antisymmetry_violations() const;

private:
    RootSystem rs_;
    int dim_ = 0;
    std::vector<int> n_;  // |R| x |R|
    std::vector<SparseVector> table_;
};

enum class SelectionKind { full, parabolic, nilradical, opposite_nilradical, custom };

const char* to_string(SelectionKind k);

/// A subalgebra spanned by a subset of basis elements. Closure under the bracket is checked on construction.
class SubalgebraSelection {
public:
    SubalgebraSelection(const ChevalleyAlgebra& parent, std::vector<int> members, SelectionKind kind);

    static SubalgebraSelection full(const ChevalleyAlgebra& g);
    /// p_S = h + sum of g_a over a in R^+ u R_S.
    static SubalgebraSelection parabolic(const ChevalleyAlgebra& g, SimpleSet s);
    /// u_S = sum of g_a over a in R^+ \ R_S.
    static SubalgebraSelection nilradical(const ChevalleyAlgebra& g, SimpleSet s);
    /// u_S^- = sum of g_a over a in -(R^+ \ R_S).
    static SubalgebraSelection opposite_nilradical(const ChevalleyAlgebra& g, SimpleSet s);

    const ChevalleyAlgebra& parent() const { return *parent_; }
    std::span<const int> members() const { return members_; }
    SelectionKind kind() const { return kind_; }
    int dim() const { return static_cast<int>(members_.size()); }

private:
    const ChevalleyAlgebra* parent_;
    std::vector<int> members_;
    SelectionKind kind_;
};

/// Range of the random functional coordinates: uniform in [-functional_bound, functional_bound].
constexpr long functional_bound = 1'000'000;

/// Rank over Q of M_ij = f([b_i, b_j]); f is given by its coordinates on the members.
int skew_form_rank(const SubalgebraSelection& sel, std::span<const long> functional);

/*
 * Index of the selected subalgebra: dim minus the largest rank of the skew
 * form f([x, y]) over `trials` random integer functionals.
 *
 * The generic rank r is attained unless f is a zero of a nonzero r x r minor,
 * a polynomial of degree r in the coordinates of f. By Schwartz-Zippel one
 * trial misses with probability at most r / (2 * functional_bound + 1), so a
 * wrong answer (always too large) needs every trial to miss.
 *
 * Throws std::invalid_argument when trials < 1.
 */
int index_oracle(const SubalgebraSelection& sel, int trials, std::uint64_t seed);

struct AdditivityResult {
    bool holds = false;
    int chi_g = 0;
    int chi_p = 0;
    int chi_u = 0;
    int chi_u_minus = 0;
};

/// Checks chi(g) = chi(p_S) + chi(u_S^-) and chi(u_S) = chi(u_S^-) with the oracle.
AdditivityResult additivity_check(const ChevalleyAlgebra& g, SimpleSet s, int trials, std::uint64_t seed);

nlohmann::json to_json(const RootSystem& rs, SimpleSet s, const AdditivityResult& r);

}  // namespace kcascade
