#pragma once

#include "kcascade/rootsys.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

namespace kcascade {

/// One member K of a cascade together with its highest root and Heisenberg set.
struct CascadeElement {
    SimpleSet support;
    Root eps;
    /// Ids of Gamma^K = {alpha in R_K : <alpha, eps^vee> > 0}, ascending.
    std::vector<int> gamma;
    /// Support of the element this one was split off from; empty for the top of a component.
    std::optional<SimpleSet> parent;
};

/*
 * Kostant's cascade K(S) of a subset S of simple roots:
 *   K(empty) = empty,
 *   K(S) = union of K(S_i) over the connected components S_i,
 *   K(S) = {S} u K(S^), S^ = {alpha in S : <alpha, eps_S^vee> = 0} when S is connected.
 *
 * Elements are identified by their support. They are stored in derivation
 * order: components by smallest simple index, each element before the ones
 * derived from it.
 */
class Cascade {
public:
    Cascade() = default;
    Cascade(SimpleSet base, std::vector<CascadeElement> elements);

    SimpleSet base() const { return base_; }
    const std::vector<CascadeElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    /// R(S) = {eps_K : K in K(S)}, in element order.
    std::vector<Root> cascade_roots() const;

    bool contains(SimpleSet support) const { return find(support) != nullptr; }
    const CascadeElement* find(SimpleSet support) const;

    /// The element whose Gamma contains root_id, or nullptr if the root is not in R_S^+.
    const CascadeElement* find_enclosing(int root_id) const;

    /// Supports sorted by bit mask, for set comparisons.
    std::vector<SimpleSet> supports() const;

private:
    SimpleSet base_;
    std::vector<CascadeElement> elements_;
};

Cascade kostant_cascade(const RootSystem& rs, SimpleSet s);

/// Gamma^K for a connected support K.
std::vector<int> gamma_set(const RootSystem& rs, SimpleSet support);

/// |K(Pi)| for a simple type, obtained by running the cascade.
int cardinality_of_full_cascade(const SimpleType& t);

nlohmann::json to_json(const RootSystem& rs, const Cascade& c);

}  // namespace kcascade
