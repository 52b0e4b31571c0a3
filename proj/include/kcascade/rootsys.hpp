#pragma once

#include <nlohmann/json.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kcascade {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One irreducible Cartan type, e.g. E6 or B4.
struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    /// Parses "A3", "e6", "D10". Throws std::invalid_argument on malformed or invalid input.
    static SimpleType parse(std::string_view text);

    std::string name() const;

    /// D3 is accepted (it is A3 with a different labelling) but callers should warn.
    bool is_degenerate() const { return family == Family::D && rank == 3; }

    auto operator<=>(const SimpleType&) const = default;
};

/// Throws std::invalid_argument unless the rank is allowed for the family.
void validate(const SimpleType& t);

/// Subset of the simple roots, stored as a bit mask (bit i is simple root i, 0-based).
class SimpleSet {
public:
    static constexpr int max_rank = 64;

    constexpr SimpleSet() = default;
    constexpr explicit SimpleSet(std::uint64_t bits) : bits_(bits) {}

    static SimpleSet of(std::initializer_list<int> zero_based);
    static SimpleSet first(int n) { return SimpleSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }
    static SimpleSet single(int i) { return SimpleSet(std::uint64_t{1} << i); }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    bool contains(int i) const { return (bits_ >> i) & 1U; }
    bool subset_of(SimpleSet other) const { return (bits_ & ~other.bits_) == 0; }
    int lowest() const { return std::countr_zero(bits_); }

    void insert(int i) { bits_ |= std::uint64_t{1} << i; }
    void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    /// Zero-based indices in increasing order.
    std::vector<int> indices() const;

    /// 1-based indices rendered as "{1,3,4}".
    std::string to_string() const;

    friend SimpleSet operator|(SimpleSet a, SimpleSet b) { return SimpleSet(a.bits_ | b.bits_); }
    friend SimpleSet operator&(SimpleSet a, SimpleSet b) { return SimpleSet(a.bits_ & b.bits_); }
    friend SimpleSet operator-(SimpleSet a, SimpleSet b) { return SimpleSet(a.bits_ & ~b.bits_); }
    auto operator<=>(const SimpleSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// A root in coordinates over the simple roots.
struct Root {
    std::vector<int> coeffs;

    int height() const;
    bool is_positive() const;
    bool is_negative() const;
    bool is_zero() const;

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b);
    friend Root operator*(int k, const Root& a);

    std::string to_string() const;

    /// Height first, then lexicographic coefficients.
    friend std::strong_ordering operator<=>(const Root& a, const Root& b);
    friend bool operator==(const Root& a, const Root& b) = default;
};

/*
 * Root system of a semisimple Lie algebra given as a product of simple
 * factors. Simple roots are numbered factor by factor, each factor in
 * Bourbaki order. All inner products are exact integers: squared lengths
 * are 2 for short (or simply-laced) roots, 4 for long roots of B, C, F and
 * 6 for the long root of G2.
 *
 * Immutable after construction.
 */
class RootSystem {
public:
    explicit RootSystem(SimpleType t);
    explicit RootSystem(std::vector<SimpleType> factors);

    /// Parses "E6" or a product such as "A2xG2".
    static RootSystem parse(std::string_view text);

    std::string name() const;
    int rank() const { return rank_; }
    std::span<const SimpleType> factors() const { return factors_; }
    bool is_simple() const { return factors_.size() == 1; }

    /// Index of the factor owning simple root i.
    int factor_of(int i) const { return factor_of_[i]; }
    SimpleSet factor_nodes(int factor) const;
    SimpleSet all() const { return SimpleSet::first(rank_); }

    /// <alpha_i, alpha_j^vee>.
    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    /// d_i with (alpha_i, alpha_i) = 2 d_i, so that d_i * cartan(j, i) is symmetric.
    int symmetrizer(int i) const { return lengths_[i] / 2; }
    /// (alpha_i, alpha_j) in the normalisation above.
    int simple_inner(int i, int j) const { return gram_[i][j]; }

    long inner(const Root& a, const Root& b) const;
    long length2(const Root& a) const { return inner(a, a); }

    /// 2(lam, beta)/(beta, beta). Throws std::invalid_argument if beta is not a root or the
    /// result is not integral.
    int coroot_pairing(const Root& lam, const Root& beta) const;

    /// All roots, sorted by height then coefficients; negative roots come first.
    const std::vector<Root>& roots() const { return roots_; }
    const Root& root(int id) const { return roots_[id]; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_roots() / 2; }
    /// Positive roots are ids [first_positive(), num_roots()).
    int first_positive() const { return num_positive(); }
    std::span<const Root> positive_roots() const;

    std::optional<int> find(const Root& r) const;
    bool contains(const Root& r) const { return find(r).has_value(); }
    int id_of(const Root& r) const;
    int negate(int id) const { return num_roots() - 1 - id; }

    Root simple_root(int i) const;
    int simple_root_id(int i) const;

    /// Highest root of R. Only defined for simple systems.
    const Root& highest_root() const;

    SimpleSet support(const Root& r) const;

    /// Maximal connected subsets of s in the Dynkin graph, ordered by smallest index.
    std::vector<SimpleSet> connected_components(SimpleSet s) const;
    bool is_connected(SimpleSet s) const;

    /// Highest root of R_s. Throws std::invalid_argument if s is empty or disconnected.
    Root highest_root_of(SimpleSet s) const;

    /// Ids of R_s^+ = R^+ ∩ Zs in root order.
    std::vector<int> positive_roots_in(SimpleSet s) const;

private:
    void build_cartan();
    void build_roots();

    std::vector<SimpleType> factors_;
    int rank_ = 0;
    std::vector<int> factor_of_;
    std::vector<int> lengths_;
    std::vector<std::vector<int>> gram_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> roots_;
    std::map<std::vector<int>, int> lookup_;
    std::vector<Root> highest_;
};

/// Classical |R| for a simple type, from the closed-form counts.
int classical_root_count(const SimpleType& t);

/// Canonical document: type, rank, Cartan matrix, roots in the stored order.
nlohmann::json to_json(const RootSystem& rs);

}  // namespace kcascade
