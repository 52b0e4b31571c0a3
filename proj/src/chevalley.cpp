#include "kcascade/chevalley.hpp"

#include "kcascade/errors.hpp"
#include "kcascade/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <map>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace kcascade {

namespace {

constexpr int unknown = INT_MIN;

class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs)
        : rs_(rs), nr_(rs.num_roots()), memo_(static_cast<std::size_t>(nr_) * nr_, unknown)
    {
    }

    int operator()(int a, int b)
    {
        int& slot = memo_[static_cast<std::size_t>(a) * nr_ + b];
        if (slot == unknown) slot = compute(a, b);
        return slot;
    }

private:
    std::optional<int> sum(int a, int b) const { return rs_.find(rs_.root(a) + rs_.root(b)); }
    std::optional<int> diff(int a, int b) const { return rs_.find(rs_.root(a) - rs_.root(b)); }
    long len2(int id) const { return rs_.length2(rs_.root(id)); }
    bool positive(int id) const { return id >= rs_.first_positive(); }

    static int to_int(mpq_class q, int a, int b)
    {
        q.canonicalize();
        if (q.get_den() != 1) throw InternalConsistencyError(fmt::format("N({},{}) is not integral", a, b));
        return static_cast<int>(q.get_num().get_si());
    }

    int string_length_below(int beta, int alpha) const
    {
        int p = 0;
        Root r = rs_.root(beta);
        while (true) {
            r = r - rs_.root(alpha);
            if (!rs_.contains(r)) return p;
            ++p;
        }
    }

    int compute(int a, int b)
    {
        const auto s = sum(a, b);
        if (!s) return 0;
        const bool pa = positive(a), pb = positive(b);
        if (!pa && !pb) return -(*this)(rs_.negate(a), rs_.negate(b));
        if (!pa && pb) return -(*this)(b, a);
        if (pa && !pb) {
            // a + b + z = 0 and N_{a,b}/|z|^2 = N_{b,z}/|a|^2 = N_{z,a}/|b|^2.
            const int z = rs_.negate(*s);
            mpq_class q;
            if (positive(z))
                q = mpq_class(len2(z), len2(b)) * (*this)(z, a);
            else
                q = mpq_class(len2(z), len2(a)) * -(*this)(rs_.negate(b), rs_.negate(z));
            return to_int(q, a, b);
        }
        return positive_pair(a, b, *s);
    }

    int positive_pair(int a, int b, int xi)
    {
        // Extraspecial pair of xi: the simple root of smallest index that can be split off.
        int ap = -1;
        for (int i = 0; i < rs_.rank(); ++i) {
            const int simple = rs_.simple_root_id(i);
            if (auto rest = diff(xi, simple); rest && positive(*rest)) {
                ap = simple;
                break;
            }
        }
        const int bp = *diff(xi, ap);
        const int extraspecial = string_length_below(bp, ap) + 1;
        if (a == ap) return extraspecial;
        if (b == ap) return -extraspecial;

        // Four-term identity on (a, b, -ap, -bp), which sum to zero with no opposite pair.
        mpq_class rhs = 0;
        if (auto d = diff(b, ap))
            rhs -= mpq_class((*this)(b, rs_.negate(ap)) * (*this)(a, rs_.negate(bp)), len2(*d));
        if (auto d = diff(a, ap))
            rhs -= mpq_class((*this)(rs_.negate(ap), a) * (*this)(b, rs_.negate(bp)), len2(*d));
        const int n_neg = (*this)(rs_.negate(ap), rs_.negate(bp));
        return to_int(rhs * len2(xi) / n_neg, a, b);
    }

    const RootSystem& rs_;
    int nr_;
    std::vector<int> memo_;
};

void accumulate(std::map<int, long>& acc, const SparseVector& v, long scale)
{
    for (const auto& t : v) acc[t.index] += scale * t.coeff;
}

SparseVector to_sparse(const std::map<int, long>& acc)
{
    SparseVector out;
    for (auto [i, c] : acc)
        if (c != 0) out.push_back(Term{i, static_cast<int>(c)});
    return out;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs, JacobiCheck check) : rs_(std::move(rs))
{
    const int l = rs_.rank();
    const int nr = rs_.num_roots();
    dim_ = l + nr;

    StructureConstants solver(rs_);
    n_.assign(static_cast<std::size_t>(nr) * nr, 0);
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            const int v = solver(a, b);
            if (v != 0) {
                // |N_{a,b}| = p + 1 with p the length of the a-string below b.
                int p = 0;
                for (Root r = rs_.root(b) - rs_.root(a); rs_.contains(r); r = r - rs_.root(a)) ++p;
                if (std::abs(v) != p + 1)
                    throw InternalConsistencyError(fmt::format("{}: |N| = {} but p + 1 = {} for {} and {}", rs_.name(),
                                                               std::abs(v), p + 1, rs_.root(a).to_string(),
                                                               rs_.root(b).to_string()));
            }
            n_[static_cast<std::size_t>(a) * nr + b] = v;
        }

    table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
    auto set = [&](int x, int y, SparseVector v) { table_[static_cast<std::size_t>(x) * dim_ + y] = std::move(v); };
    for (int i = 0; i < l; ++i)
        for (int id = 0; id < nr; ++id) {
            const int c = rs_.coroot_pairing(rs_.root(id), rs_.simple_root(i));
            if (c == 0) continue;
            set(h(i), e(id), {Term{e(id), c}});
            set(e(id), h(i), {Term{e(id), -c}});
        }
    for (int a = 0; a < nr; ++a) {
        const Root& ra = rs_.root(a);
        const long la = rs_.length2(ra);
        for (int b = 0; b < nr; ++b) {
            if (b == rs_.negate(a)) {
                SparseVector coroot;
                for (int i = 0; i < l; ++i) {
                    const long num = static_cast<long>(ra.coeffs[i]) * rs_.simple_inner(i, i);
                    if (num == 0) continue;
                    if (num % la != 0) throw InternalConsistencyError("coroot is not integral");
                    coroot.push_back(Term{h(i), static_cast<int>(num / la)});
                }
                set(e(a), e(b), std::move(coroot));
                continue;
            }
            const int v = n_[static_cast<std::size_t>(a) * nr + b];
            if (v != 0) set(e(a), e(b), {Term{e(*rs_.find(ra + rs_.root(b))), v}});
        }
    }

    if (check == JacobiCheck::skip) return;
    if (antisymmetry_violations() != 0) throw InternalConsistencyError(fmt::format("{}: bracket is not antisymmetric", rs_.name()));
    const bool exhaustive = check == JacobiCheck::exhaustive || dim_ <= 133;
    if (const auto bad = jacobi_violations(exhaustive ? 0 : 200'000); bad != 0)
        throw InternalConsistencyError(fmt::format("{}: {} Jacobi violations", rs_.name(), bad));
}

int ChevalleyAlgebra::structure_constant(int a, int b) const
{
    return n_[static_cast<std::size_t>(a) * rs_.num_roots() + b];
}

SparseVector ChevalleyAlgebra::bracket(const SparseVector& x, const SparseVector& y) const
{
    std::map<int, long> acc;
    for (const auto& tx : x)
        for (const auto& ty : y) accumulate(acc, bracket(tx.index, ty.index), static_cast<long>(tx.coeff) * ty.coeff);
    return to_sparse(acc);
}

std::string ChevalleyAlgebra::basis_label(int b) const
{
    if (is_cartan(b)) return fmt::format("h{}", b + 1);
    return fmt::format("e{}", rs_.root(root_of(b)).to_string());
}

std::int64_t ChevalleyAlgebra::jacobi_violations(std::int64_t sample) const
{
    auto violates = [&](int i, int j, int k) {
        const SparseVector x{Term{i, 1}}, y{Term{j, 1}}, z{Term{k, 1}};
        std::map<int, long> acc;
        accumulate(acc, bracket(x, bracket(y, z)), 1);
        accumulate(acc, bracket(y, bracket(z, x)), 1);
        accumulate(acc, bracket(z, bracket(x, y)), 1);
        return !to_sparse(acc).empty();
    };
    std::int64_t bad = 0;
    if (sample == 0) {
        for (int i = 0; i < dim_; ++i)
            for (int j = i; j < dim_; ++j)
                for (int k = j; k < dim_; ++k) bad += violates(i, j, k);
        return bad;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, dim_ - 1);
    for (std::int64_t n = 0; n < sample; ++n) bad += violates(pick(rng), pick(rng), pick(rng));
    return bad;
}

std::int64_t ChevalleyAlgebra::antisymmetry_violations() const
{
    std::int64_t bad = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            SparseVector neg = bracket(j, i);
            for (auto& t : neg) t.coeff = -t.coeff;
            if (bracket(i, j) != neg) ++bad;
        }
    return bad;
}

// ---------------------------------------------------------------------------
// Subalgebras

const char* to_string(SelectionKind k)
{
    switch (k) {
    case SelectionKind::full: return "full";
    case SelectionKind::parabolic: return "parabolic";
    case SelectionKind::nilradical: return "nilradical";
    case SelectionKind::opposite_nilradical: return "opposite_nilradical";
    case SelectionKind::custom: return "custom";
    }
    return "?";
}

SubalgebraSelection::SubalgebraSelection(const ChevalleyAlgebra& parent, std::vector<int> members, SelectionKind kind)
    : parent_(&parent), members_(std::move(members)), kind_(kind)
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    std::vector<char> in(parent.dim(), 0);
    for (int m : members_) {
        if (m < 0 || m >= parent.dim()) throw std::invalid_argument("subalgebra member out of range");
        in[m] = 1;
    }
    for (int a : members_)
        for (int b : members_)
            for (const auto& t : parent.bracket(a, b))
                if (!in[t.index])
                    throw std::invalid_argument(fmt::format("selection is not closed: [{}, {}] has a {} component",
                                                            parent.basis_label(a), parent.basis_label(b),
                                                            parent.basis_label(t.index)));
}

SubalgebraSelection SubalgebraSelection::full(const ChevalleyAlgebra& g)
{
    std::vector<int> m(g.dim());
    for (int i = 0; i < g.dim(); ++i) m[i] = i;
    return SubalgebraSelection(g, std::move(m), SelectionKind::full);
}

SubalgebraSelection SubalgebraSelection::parabolic(const ChevalleyAlgebra& g, SimpleSet s)
{
    const auto& rs = g.root_system();
    std::vector<int> m;
    for (int i = 0; i < rs.rank(); ++i) m.push_back(g.h(i));
    for (int id = 0; id < rs.num_roots(); ++id)
        if (rs.root(id).is_positive() || rs.support(rs.root(id)).subset_of(s)) m.push_back(g.e(id));
    return SubalgebraSelection(g, std::move(m), SelectionKind::parabolic);
}

SubalgebraSelection SubalgebraSelection::nilradical(const ChevalleyAlgebra& g, SimpleSet s)
{
    const auto& rs = g.root_system();
    std::vector<int> m;
    for (int id = rs.first_positive(); id < rs.num_roots(); ++id)
        if (!rs.support(rs.root(id)).subset_of(s)) m.push_back(g.e(id));
    return SubalgebraSelection(g, std::move(m), SelectionKind::nilradical);
}

SubalgebraSelection SubalgebraSelection::opposite_nilradical(const ChevalleyAlgebra& g, SimpleSet s)
{
    const auto& rs = g.root_system();
    std::vector<int> m;
    for (int id = 0; id < rs.first_positive(); ++id)
        if (!rs.support(rs.root(id)).subset_of(s)) m.push_back(g.e(id));
    return SubalgebraSelection(g, std::move(m), SelectionKind::opposite_nilradical);
}

// ---------------------------------------------------------------------------
// Oracle

int skew_form_rank(const SubalgebraSelection& sel, std::span<const long> functional)
{
    const auto& g = sel.parent();
    const auto members = sel.members();
    const int n = sel.dim();
    if (static_cast<int>(functional.size()) != n) throw std::invalid_argument("functional has the wrong length");

    std::vector<int> position(g.dim(), -1);
    for (int i = 0; i < n; ++i) position[members[i]] = i;

    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long v = 0;
            for (const auto& t : g.bracket(members[i], members[j])) v += t.coeff * functional[position[t.index]];
            m(i, j) = v;
            m(j, i) = -v;
        }
    const int r = static_cast<int>(exact_rank(std::move(m)));
    if (r % 2 != 0) throw InternalConsistencyError("skew form has odd rank");
    return r;
}

int index_oracle(const SubalgebraSelection& sel, int trials, std::uint64_t seed)
{
    if (trials < 1) throw std::invalid_argument("index_oracle: trials must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-functional_bound, functional_bound);
    std::vector<long> f(sel.dim());
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        for (auto& x : f) x = coord(rng);
        best = std::max(best, skew_form_rank(sel, f));
    }
    return sel.dim() - best;
}

AdditivityResult additivity_check(const ChevalleyAlgebra& g, SimpleSet s, int trials, std::uint64_t seed)
{
    AdditivityResult r;
    r.chi_g = index_oracle(SubalgebraSelection::full(g), trials, seed);
    r.chi_p = index_oracle(SubalgebraSelection::parabolic(g, s), trials, seed);
    r.chi_u = index_oracle(SubalgebraSelection::nilradical(g, s), trials, seed);
    r.chi_u_minus = index_oracle(SubalgebraSelection::opposite_nilradical(g, s), trials, seed);
    r.holds = r.chi_g == r.chi_p + r.chi_u_minus && r.chi_u == r.chi_u_minus;
    return r;
}

nlohmann::json to_json(const RootSystem& rs, SimpleSet s, const AdditivityResult& r)
{
    std::vector<int> subset;
    for (int i : s.indices()) subset.push_back(i + 1);
    return {{"type", rs.name()}, {"subset", subset},   {"holds", r.holds},     {"chi_g", r.chi_g},
            {"chi_p", r.chi_p},  {"chi_u", r.chi_u},   {"chi_u_minus", r.chi_u_minus}};
}

}  // namespace kcascade
