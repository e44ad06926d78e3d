#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gperm/combinatorics.hpp"
#include "gperm/polynomial.hpp"
#include "gperm/rational.hpp"

namespace gperm {

/// Work limit for subset-family enumerations (atomic checks) unless forced.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t(1) << 22;

/// Values indexed by nonempty subsets of [n].
using SubsetMap = std::map<Mask, Rational>;

/**
 * @brief Ordered family (I_1..I_m) of nonempty subsets of [n] with weights y_i.
 *
 * Encodes P_G(y) = sum_i y_i Delta_{I_i} and the bipartite graph G on [m] x [n].
 */
struct SubsetFamily {
    int n = 0;
    std::vector<Mask> subsets;
    std::vector<Rational> weights;

    SubsetFamily() = default;
    /// Weights default to 1.
    SubsetFamily(int n, std::vector<Mask> subsets, std::vector<Rational> weights = {});

    int m() const { return static_cast<int>(subsets.size()); }
    /// G*: the family on [m] with one subset {i : j in I_i} for each j in [n], unit weights.
    SubsetFamily mirror() const;
    bool connected() const;

    static SubsetFamily from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    static SubsetFamily all_subsets(int n);
    /// Intervals [i, j] of [n] with i < j (singletons only translate).
    static SubsetFamily intervals(int n);
    /// Subsets of [n] that contain n.
    static SubsetFamily hall(int n);
    /// [n], [n-1], ..., [2] in that order.
    static SubsetFamily pitman_stanley(int n);
    /// All k-subsets of [n].
    static SubsetFamily uniform(int n, int k);
    /// Complete bipartite K_{m,n}: m copies of [n].
    static SubsetFamily complete_bipartite(int m, int n);
};

/// Verdicts of the three equivalent forms of the dragon marriage condition.
struct DragonMarriageReport {
    bool union_bound = false;
    bool sdr_avoiding_each = false;
    bool spanning_tree = false;
};

/// Union-cardinality form: every k of the sets cover at least k+1 elements.
bool dmc_union_bound(const std::vector<Mask>& sets, int n);
/// For every j the sets admit distinct representatives avoiding j.
bool dmc_sdr(const std::vector<Mask>& sets, int n);
/// Two-element representatives forming a spanning tree on [n].
bool dmc_spanning_tree(const std::vector<Mask>& sets, int n);
DragonMarriageReport dragon_marriage_report(const std::vector<Mask>& sets, int n);
/// Condition via matchings; with `verify` all three forms run and must agree.
bool dragon_marriage_check(const std::vector<Mask>& sets, int n, bool verify = false);

/// Number of sequences of n-1 nonempty subsets of [n] satisfying the dragon marriage condition,
/// cross-checked against (n-1)! Vol P_n(-1, -2, ..., -2^{n-1}).
Integer count_dragon_families(int n, bool force = false);
/// (n-1)! Vol P_n(-1, -2, ..., -2^{n-1}).
Integer dragon_families_by_volume(int n);

/// G-draconian sequences, lexicographically descending.
std::vector<std::vector<int>> g_draconian_sequences(const SubsetFamily& f, bool force = false);
/// Streams the same sequences without storing them.
void for_each_g_draconian(const SubsetFamily& f, bool force, const std::function<void(const std::vector<int>&)>& fn);
bool is_g_draconian(const SubsetFamily& f, const std::vector<int>& a);

/// sum over draconian a of prod y_i^{a_i}/a_i!.
Rational volume(const SubsetFamily& f, bool force = false);
/// Same sum as a polynomial in y1..ym.
RationalPolynomial volume_polynomial(const SubsetFamily& f, bool force = false);

/// Raising-power count. Untrimmed counts use a member equal to [n] (prepended with weight 0 if absent)
/// whose weight is increased by one.
Integer lattice_points(const SubsetFamily& f, bool trimmed, bool force = false);
/// Direct enumeration of integer points satisfying the z-inequalities.
Integer lattice_points_enumerated(const SubsetFamily& f, bool trimmed, bool force = false);

/// Mixed volume of Delta_{J_1}, ..., Delta_{J_{n-1}}: 1/(n-1)! under the dragon marriage condition, else 0.
/// With `verify`, the three combinatorial forms and the generic-minor test must all agree.
Rational mixed_volume_simplices(const std::vector<Mask>& sets, int n, bool verify = false,
                                std::uint64_t seed = 0x5eed);
/// Generic-coefficient test: all n maximal minors of a random matrix supported on the sets are nonzero.
bool generic_minors_nonzero(const std::vector<Mask>& sets, int n, std::uint64_t seed);

/// z_I = sum of y_i over members with I_i contained in I, for every nonempty I.
SubsetMap z_from_y(const SubsetFamily& f);
SubsetMap z_from_y(const SubsetMap& y, int n);
/// y_I = sum_{J in I} (-1)^{|I - J|} z_J.
SubsetMap moebius_y_from_z(const SubsetMap& z, int n);
/// Collapses a family into subset-indexed weights (repeated subsets add up).
SubsetMap weights_by_subset(const SubsetFamily& f);

/// (1/(n-1)!) sum_w (sum_I lambda_{w(min I)} y_{w(I)})^{n-1} / prod (lambda_{w(i)} - lambda_{w(i+1)}), lambda_i = i.
Rational volume_vertex_sum(const SubsetMap& y, int n);
/// Signed descent-number sum over tuples of subsets; guarded to n <= 4.
Rational volume_descent_sum(const SubsetMap& y, int n, bool force = false);

/// Trimmed lattice counts for G and G* (unit weights); throws ConsistencyError if they differ.
std::pair<Integer, Integer> duality_check(const SubsetFamily& f, bool force = false);

}  // namespace gperm
