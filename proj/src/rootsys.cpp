#include "kcascade/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace kcascade {

// ---------------------------------------------------------------------------
// SimpleType

SimpleType SimpleType::parse(std::string_view text)
{
    if (text.size() < 2) throw std::invalid_argument(fmt::format("malformed type '{}'", text));
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (letter < 'A' || letter > 'G') throw std::invalid_argument(fmt::format("unknown family in '{}'", text));
    int rank = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw std::invalid_argument(fmt::format("malformed rank in '{}'", text));
    SimpleType t{static_cast<Family>(letter), rank};
    validate(t);
    return t;
}

std::string SimpleType::name() const { return fmt::format("{}{}", static_cast<char>(family), rank); }

void validate(const SimpleType& t)
{
    const int l = t.rank;
    bool ok = false;
    switch (t.family) {
    case Family::A: ok = l >= 1; break;
    case Family::B:
    case Family::C: ok = l >= 2; break;
    case Family::D: ok = l >= 3; break;
    case Family::E: ok = l >= 6 && l <= 8; break;
    case Family::F: ok = l == 4; break;
    case Family::G: ok = l == 2; break;
    }
    if (!ok) throw std::invalid_argument(fmt::format("invalid rank {} for family {}", l, static_cast<char>(t.family)));
    if (l > SimpleSet::max_rank) throw std::invalid_argument("rank exceeds 64");
}

int classical_root_count(const SimpleType& t)
{
    const int l = t.rank;
    switch (t.family) {
    case Family::A: return l * (l + 1);
    case Family::B:
    case Family::C: return 2 * l * l;
    case Family::D: return 2 * l * (l - 1);
    case Family::E: return l == 6 ? 72 : l == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// SimpleSet

SimpleSet SimpleSet::of(std::initializer_list<int> zero_based)
{
    SimpleSet s;
    for (int i : zero_based) s.insert(i);
    return s;
}

std::vector<int> SimpleSet::indices() const
{
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::string SimpleSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (int i : indices()) {
        if (!first) out += ',';
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Root

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_positive() const
{
    return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const
{
    return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c <= 0; });
}

bool Root::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const
{
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
}

Root operator+(const Root& a, const Root& b)
{
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

Root operator-(const Root& a, const Root& b)
{
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

Root operator*(int k, const Root& a)
{
    Root r = a;
    for (int& c : r.coeffs) c *= k;
    return r;
}

std::string Root::to_string() const { return fmt::format("({})", fmt::join(coeffs, ",")); }

std::strong_ordering operator<=>(const Root& a, const Root& b)
{
    if (auto c = a.height() <=> b.height(); c != 0) return c;
    return a.coeffs <=> b.coeffs;
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

struct FactorData {
    std::vector<int> lengths;
    std::vector<std::pair<int, int>> edges;
};

FactorData factor_data(const SimpleType& t)
{
    const int l = t.rank;
    FactorData d;
    d.lengths.assign(l, 2);
    auto chain = [&](int n) {
        for (int i = 0; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
    };
    switch (t.family) {
    case Family::A: chain(l); break;
    case Family::B:
        chain(l);
        std::fill(d.lengths.begin(), d.lengths.end() - 1, 4);
        break;
    case Family::C:
        chain(l);
        d.lengths.back() = 4;
        break;
    case Family::D:
        chain(l - 1);
        d.edges.emplace_back(l - 3, l - 1);
        break;
    case Family::E:
        d.edges.emplace_back(0, 2);
        for (int i = 2; i + 1 < l; ++i) d.edges.emplace_back(i, i + 1);
        d.edges.emplace_back(1, 3);
        break;
    case Family::F:
        chain(4);
        d.lengths = {4, 4, 2, 2};
        break;
    case Family::G:
        chain(2);
        d.lengths = {2, 6};
        break;
    }
    return d;
}

}  // namespace

RootSystem::RootSystem(SimpleType t) : RootSystem(std::vector<SimpleType>{t}) {}

RootSystem::RootSystem(std::vector<SimpleType> factors) : factors_(std::move(factors))
{
    if (factors_.empty()) throw std::invalid_argument("root system needs at least one factor");
    for (const auto& t : factors_) {
        validate(t);
        rank_ += t.rank;
    }
    if (rank_ > SimpleSet::max_rank) throw std::invalid_argument("total rank exceeds 64");
    build_cartan();
    build_roots();
}

RootSystem RootSystem::parse(std::string_view text)
{
    std::vector<SimpleType> factors;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('x', start);
        if (end == std::string_view::npos) end = text.size();
        factors.push_back(SimpleType::parse(text.substr(start, end - start)));
        start = end + 1;
    }
    return RootSystem(std::move(factors));
}

std::string RootSystem::name() const
{
    std::vector<std::string> names;
    for (const auto& t : factors_) names.push_back(t.name());
    return fmt::format("{}", fmt::join(names, "x"));
}

void RootSystem::build_cartan()
{
    lengths_.assign(rank_, 0);
    factor_of_.assign(rank_, 0);
    gram_.assign(rank_, std::vector<int>(rank_, 0));
    int offset = 0;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        const auto d = factor_data(factors_[f]);
        for (int i = 0; i < factors_[f].rank; ++i) {
            lengths_[offset + i] = d.lengths[i];
            factor_of_[offset + i] = static_cast<int>(f);
            gram_[offset + i][offset + i] = d.lengths[i];
        }
        for (auto [a, b] : d.edges) {
            const int v = -std::max(d.lengths[a], d.lengths[b]) / 2;
            gram_[offset + a][offset + b] = v;
            gram_[offset + b][offset + a] = v;
        }
        offset += factors_[f].rank;
    }
    cartan_.assign(rank_, std::vector<int>(rank_, 0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) cartan_[i][j] = 2 * gram_[i][j] / lengths_[j];
}

void RootSystem::build_roots()
{
    // Additive closure along simple root strings: for beta positive and
    // beta != alpha_i, the alpha_i-string through beta is beta - p alpha_i, ...,
    // beta + q alpha_i with p - q = <beta, alpha_i^vee>.
    std::set<std::vector<int>> positive;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> c(rank_, 0);
        c[i] = 1;
        layer.push_back(c);
        positive.insert(c);
    }
    while (!layer.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < rank_; ++i) {
                bool is_simple_i = beta[i] == 1 && std::accumulate(beta.begin(), beta.end(), 0) == 1;
                if (is_simple_i) continue;
                int pair = 0;
                for (int j = 0; j < rank_; ++j) pair += beta[j] * cartan_[j][i];
                int p = 0;
                auto down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !positive.contains(down)) break;
                    ++p;
                }
                if (p - pair > 0) {
                    auto up = beta;
                    up[i] += 1;
                    if (!positive.contains(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        positive.insert(next.begin(), next.end());
    }

    for (const auto& c : positive) {
        roots_.push_back(Root{c});
        roots_.push_back(-Root{c});
    }
    std::sort(roots_.begin(), roots_.end());
    for (int id = 0; id < num_roots(); ++id) lookup_.emplace(roots_[id].coeffs, id);

    for (std::size_t f = 0; f < factors_.size(); ++f) {
        const SimpleSet nodes = factor_nodes(static_cast<int>(f));
        highest_.push_back(highest_root_of(nodes));
    }
}

SimpleSet RootSystem::factor_nodes(int factor) const
{
    SimpleSet s;
    for (int i = 0; i < rank_; ++i)
        if (factor_of_[i] == factor) s.insert(i);
    return s;
}

long RootSystem::inner(const Root& a, const Root& b) const
{
    long sum = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) sum += static_cast<long>(a.coeffs[i]) * b.coeffs[j] * gram_[i][j];
    }
    return sum;
}

int RootSystem::coroot_pairing(const Root& lam, const Root& beta) const
{
    if (!contains(beta)) throw std::invalid_argument(fmt::format("coroot_pairing: {} is not a root", beta.to_string()));
    const long num = 2 * inner(lam, beta);
    const long den = length2(beta);
    if (num % den != 0)
        throw std::invalid_argument(fmt::format("coroot_pairing: <{}, {}^vee> is not integral", lam.to_string(),
                                                beta.to_string()));
    return static_cast<int>(num / den);
}

std::span<const Root> RootSystem::positive_roots() const
{
    return std::span<const Root>(roots_).subspan(static_cast<std::size_t>(first_positive()));
}

std::optional<int> RootSystem::find(const Root& r) const
{
    auto it = lookup_.find(r.coeffs);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

int RootSystem::id_of(const Root& r) const
{
    auto id = find(r);
    if (!id) throw std::invalid_argument(fmt::format("{} is not a root", r.to_string()));
    return *id;
}

Root RootSystem::simple_root(int i) const
{
    Root r{std::vector<int>(rank_, 0)};
    r.coeffs[i] = 1;
    return r;
}

int RootSystem::simple_root_id(int i) const { return id_of(simple_root(i)); }

const Root& RootSystem::highest_root() const
{
    if (!is_simple()) throw std::logic_error("highest_root: root system is not simple");
    return highest_.front();
}

SimpleSet RootSystem::support(const Root& r) const
{
    SimpleSet s;
    for (int i = 0; i < rank_; ++i)
        if (r.coeffs[i] != 0) s.insert(i);
    return s;
}

std::vector<SimpleSet> RootSystem::connected_components(SimpleSet s) const
{
    std::vector<SimpleSet> out;
    SimpleSet remaining = s;
    while (!remaining.empty()) {
        SimpleSet comp;
        std::vector<int> stack{remaining.lowest()};
        comp.insert(stack.back());
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : remaining.indices()) {
                if (!comp.contains(w) && cartan_[v][w] != 0) {
                    comp.insert(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(comp);
        remaining = remaining - comp;
    }
    return out;
}

bool RootSystem::is_connected(SimpleSet s) const { return connected_components(s).size() == 1; }

Root RootSystem::highest_root_of(SimpleSet s) const
{
    if (s.empty()) throw std::invalid_argument("highest_root_of: empty subset");
    if (!is_connected(s)) throw std::invalid_argument(fmt::format("highest_root_of: {} is disconnected", s.to_string()));
    // Positive roots are sorted by height, so the last one supported in s is the maximum.
    for (int id = num_roots() - 1; id >= first_positive(); --id)
        if (support(roots_[id]).subset_of(s)) return roots_[id];
    throw std::logic_error("highest_root_of: no root found");
}

std::vector<int> RootSystem::positive_roots_in(SimpleSet s) const
{
    std::vector<int> out;
    for (int id = first_positive(); id < num_roots(); ++id)
        if (support(roots_[id]).subset_of(s)) out.push_back(id);
    return out;
}

nlohmann::json to_json(const RootSystem& rs)
{
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : rs.roots()) roots.push_back(r.coeffs);
    return {
        {"type", rs.name()},
        {"rank", rs.rank()},
        {"numbering", "bourbaki"},
        {"cartan", rs.cartan_matrix()},
        {"roots", roots},
    };
}

}  // namespace kcascade
