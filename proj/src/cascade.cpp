#include "kcascade/cascade.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcascade {

Cascade::Cascade(SimpleSet base, std::vector<CascadeElement> elements) : base_(base), elements_(std::move(elements)) {}

std::vector<Root> Cascade::cascade_roots() const
{
    std::vector<Root> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.eps);
    return out;
}

const CascadeElement* Cascade::find(SimpleSet support) const
{
    for (const auto& e : elements_)
        if (e.support == support) return &e;
    return nullptr;
}

const CascadeElement* Cascade::find_enclosing(int root_id) const
{
    for (const auto& e : elements_)
        if (std::binary_search(e.gamma.begin(), e.gamma.end(), root_id)) return &e;
    return nullptr;
}

std::vector<SimpleSet> Cascade::supports() const
{
    std::vector<SimpleSet> out;
    for (const auto& e : elements_) out.push_back(e.support);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> gamma_set(const RootSystem& rs, SimpleSet support)
{
    const Root eps = rs.highest_root_of(support);
    std::vector<int> out;
    for (int id : rs.positive_roots_in(support))
        if (rs.coroot_pairing(rs.root(id), eps) > 0) out.push_back(id);
    return out;
}

namespace {

void expand(const RootSystem& rs, SimpleSet s, std::optional<SimpleSet> parent, std::vector<CascadeElement>& out)
{
    for (SimpleSet comp : rs.connected_components(s)) {
        Root eps = rs.highest_root_of(comp);
        SimpleSet orthogonal;
        for (int i : comp.indices())
            if (rs.coroot_pairing(rs.simple_root(i), eps) == 0) orthogonal.insert(i);
        out.push_back(CascadeElement{comp, eps, gamma_set(rs, comp), parent});
        expand(rs, orthogonal, comp, out);
    }
}

}  // namespace

Cascade kostant_cascade(const RootSystem& rs, SimpleSet s)
{
    if (!s.subset_of(rs.all())) throw std::invalid_argument("kostant_cascade: subset outside the simple roots");
    std::vector<CascadeElement> elements;
    expand(rs, s, std::nullopt, elements);
    return Cascade(s, std::move(elements));
}

int cardinality_of_full_cascade(const SimpleType& t)
{
    RootSystem rs(t);
    return static_cast<int>(kostant_cascade(rs, rs.all()).size());
}

nlohmann::json to_json(const RootSystem& rs, const Cascade& c)
{
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& e : c.elements()) {
        std::vector<int> support;
        for (int i : e.support.indices()) support.push_back(i + 1);
        elements.push_back({{"support", support}, {"eps", e.eps.coeffs}, {"gamma_size", e.gamma.size()}});
    }
    std::vector<int> base;
    for (int i : c.base().indices()) base.push_back(i + 1);
    return {{"type", rs.name()}, {"numbering", "bourbaki"}, {"base", base}, {"elements", elements}};
}

}  // namespace kcascade
