#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gperm/combinatorics.hpp"
#include "gperm/polynomial.hpp"
#include "gperm/rational.hpp"

namespace gperm {

/// Undirected simple graph on [n]; edges are unordered pairs of 1-based vertices.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    /// Star with a center and arms of the given lengths; the center is vertex 1.
    static Graph star(const std::vector<int>& arms);
    bool connected_subset(Mask s) const;
};

struct BuildingCheck {
    bool ok = true;
    std::string reason;
    std::optional<std::pair<Mask, Mask>> witness;
};

/// Checks (B1) closure under unions of intersecting members and (B2) presence of all singletons.
BuildingCheck is_building(int n, const std::vector<Mask>& members);

/**
 * @brief Building set on [n], stored as a sorted list of bitmask members.
 *
 * Construction validates (B1)/(B2) and throws DomainError otherwise.
 */
class BuildingSet {
public:
    BuildingSet(int n, std::vector<Mask> members, bool graphical = false);

    static BuildingSet all_subsets(int n);
    static BuildingSet intervals(int n);
    static BuildingSet cyclic(int n);
    /// Singletons together with the initial segments [1], [2], ..., [n].
    static BuildingSet pitman_stanley(int n);
    static BuildingSet graphical(const Graph& g);
    static BuildingSet from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    int n() const { return n_; }
    const std::vector<Mask>& members() const { return members_; }
    bool contains(Mask s) const;
    bool is_graphical() const { return graphical_; }
    /// Maximal members of B restricted to t; they partition t.
    std::vector<Mask> components(Mask t) const;
    std::vector<Mask> maximal() const { return components(full_mask(n_)); }
    bool connected() const { return maximal().size() == 1; }

private:
    int n_;
    std::vector<Mask> members_;
    std::vector<char> member_flag_;
    bool graphical_;
};

using NestedSet = std::vector<Mask>;

/// Checks (N1), (N2), (N3); (N2) only for pairs when B is graphical.
bool is_nested_set(const BuildingSet& b, const NestedSet& nested);
/// All nested sets, ordered by size then lexicographically on the sorted member lists.
std::vector<NestedSet> nested_sets(const BuildingSet& b);

/// f_B(q) from nested-set enumeration and from the recurrence; throws ConsistencyError on mismatch.
RationalPolynomial f_polynomial(const BuildingSet& b);
RationalPolynomial f_polynomial_enumerated(const BuildingSet& b);
RationalPolynomial f_polynomial_recurrence(const BuildingSet& b);

/// Rooted forest on [n]: parent[i-1] is the parent of i, or 0 for a root.
struct BForest {
    std::vector<int> parent;

    std::vector<int> roots() const;
    std::vector<int> children(int i) const;
    /// Descendant set of i, including i.
    Mask desc(int i) const;
    bool operator==(const BForest&) const = default;
    auto operator<=>(const BForest&) const = default;
};

bool is_b_forest(const BuildingSet& b, const BForest& f);
std::vector<BForest> b_forests(const BuildingSet& b);
/// Maximal nested set {desc(i)} of a B-forest.
NestedSet nested_set_of(const BForest& f);
Integer generalized_catalan(const BuildingSet& b);

/// Weights on members; singletons may be omitted and then count as 0.
using SubsetWeights = std::map<Mask, Rational>;

/// t_i = sum of y_J over members J with i in J contained in desc(i).
std::vector<Rational> vertex_coordinates(const BuildingSet& b, const SubsetWeights& y, const BForest& f);
/// Edge directions e_i - e_parent(i) of the vertex cone, one per non-root node.
std::vector<std::vector<long>> local_cone_generators(const BForest& f);

enum class DynkinKind { A, AffineA, D, E, Star };

/// Generalized Catalan numbers of Dynkin-type graphs from the closed forms and the star recurrence.
/// For n <= 7 the value is also checked against a B-forest count on the explicit graph.
Integer dynkin_catalan(DynkinKind kind, int n, const std::vector<int>& arms = {});
Graph dynkin_graph(DynkinKind kind, int n, const std::vector<int>& arms = {});
/// C(T_{n_1..n_r}) through the star recurrence.
Integer star_catalan(std::vector<int> arms);

/// Plane binary tree on nodes 1..n with the binary-search labeling.
struct PlaneBinaryTree {
    int root = 0;
    std::vector<int> left, right;  // 1-based children, 0 = none; index 0 unused
    std::vector<int> lo, hi;       // desc(i) = [lo[i], hi[i]]

    int size() const { return static_cast<int>(left.size()) - 1; }
    std::vector<int> parent_vector() const;
    static PlaneBinaryTree from_forest(const BForest& f);
};

std::vector<PlaneBinaryTree> plane_binary_trees(int n);
/// Loday coordinates (i - l_i + 1)(r_i - i + 1).
std::vector<long> loday_vertex(const PlaneBinaryTree& t);

}  // namespace gperm
