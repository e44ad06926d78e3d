#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gperm/combinatorics.hpp"
#include "gperm/genperm.hpp"
#include "gperm/permutohedron.hpp"
#include "gperm/polynomial.hpp"
#include "gperm/rational.hpp"

namespace gperm {

/// Usual Eulerian number A(n,k): permutations of [n] with k-1 descents.
Integer eulerian_number(int n, int k);

/// h(j,T) = |desc(j)|, indexed 1..n (index 0 unused).
std::vector<int> hook_lengths(const PlaneBinaryTree& t);

/// wt(i,j) for i in desc(j): (i-l_j+1)/(j-l_j+1) if i <= j, else (r_j-i+1)/(r_j-j+1).
Rational binary_tree_weight(const PlaneBinaryTree& t, int i, int j);

/// Vol P_{n+1} in u-coordinates as a sum over the C_n plane binary trees.
Rational volume_binary_trees(const RationalVector& u);
/// Same sum kept symbolic in u1..un.
RationalPolynomial volume_binary_trees_symbolic(int n);
/// Per-tree terms n!/2^n prod_j (1 + 1/h(j,T)) of the u = (1,...,1) specialization; they sum to (n+1)^{n-1}.
std::vector<Rational> hook_length_terms(int n);

struct IncreasingBinaryTree {
    PlaneBinaryTree tree;
    /// v[j-1] = label of node j; labels increase away from the root.
    Permutation v;
};

/// Increasing labelings of a plane binary tree; there are n!/prod h_j of them.
std::vector<Permutation> increasing_labelings(const PlaneBinaryTree& t);
/// All n! increasing binary trees.
std::vector<IncreasingBinaryTree> increasing_binary_trees(int n);

struct WeightedTree {
    IncreasingBinaryTree tree;
    Rational weight;
};

/// Increasing binary trees with i_{v(j)} in [l_j, r_j] for every node j, with weight prod wt(i_{v(j)}, j).
std::vector<WeightedTree> i_compatible_trees(const std::vector<int>& i);

/// Vol P_{n+1} in u1..un from the symbolic permutohedron volume in x.
RationalPolynomial permutohedron_volume_u(int n);
/// Vol P_{n+1} in u1..un from the draconian volume of all subsets of [n+1], grouped by subset size.
/// Guarded to n <= 5 unless forced.
RationalPolynomial permutohedron_volume_u_draconian(int n, bool force = false);

/// Weakly increasing realization (1^{c_1}, 2^{c_2}, ...).
std::vector<int> default_realization(const Composition& c);
/// A_c as the sum of n! wt(i,T,v) over i-compatible trees, for a realization i of u^c
/// (default_realization when empty).
Integer mixed_eulerian_trees(const Composition& c, std::vector<int> realization = {});

/**
 * @brief Table of mixed Eulerian numbers A_c for all c with n parts summing to n.
 *
 * Entries are in colexicographic order (ascending on the reversed composition).
 */
struct MixedEulerianTable {
    int n = 0;
    std::vector<std::pair<Composition, Integer>> entries;
    /// Whether the draconian route took part in the cross-check.
    bool draconian_checked = false;

    Integer at(const Composition& c) const;
    nlohmann::json to_json() const;
    static MixedEulerianTable from_json(const nlohmann::json& j);
};

/// Directory for cached tables; defaults to $GPERM_CACHE_DIR, then $XDG_CACHE_HOME/gperm, then ~/.cache/gperm.
std::optional<std::filesystem::path> cache_directory();
/// Overrides the cache directory; std::nullopt disables caching.
void set_cache_directory(std::optional<std::filesystem::path> dir);

/// Full table by the volume and tree routes (and the draconian route for n <= 5), all required to agree,
/// with the listed properties verified. Guarded to n <= 6 unless forced. Uses the disk cache.
MixedEulerianTable mixed_eulerian_table(int n, bool force = false);

struct MixedEulerianValue {
    Integer value;
    Integer by_volume;
    Integer by_trees;
    std::optional<Integer> by_draconian;
};

/// A_c with the per-route values; throws ConsistencyError if routes disagree.
MixedEulerianValue mixed_eulerian(const Composition& c, bool force = false);

/// Named property checks on a table (positivity, reversal symmetry, Eulerian specialization, the
/// (n+1)^{n-1} and n! C_n sums, the two-adjacent counts, A_{1..1}, A_{k,0..0,n-k}, Catalan products).
std::vector<std::pair<std::string, bool>> mixed_eulerian_properties(const MixedEulerianTable& t);

/// Compositions whose (c, 0) is a cyclic shift of (c', 0).
std::vector<Composition> cyclic_class(const Composition& c);

struct CyclicClassCheck {
    std::vector<Composition> members;
    Integer sum;
    /// The member with c_1 + ... + c_i >= i for all i.
    Composition representative;
    Integer representative_value;
};

/// Class members and the sum of A over them; throws ConsistencyError unless the sum is n! and
/// the representative equals 1^{c_1} 2^{c_2} ... n^{c_n}.
CyclicClassCheck cyclic_class_check(const Composition& c, bool force = false);

/// Number of classes of compositions of n into n parts.
std::size_t cyclic_class_count(int n);

/// Sum of the n+1 cyclic shifts of Vol P_{n+1}(u_1..u_{n+1}) equals (u_1+...+u_{n+1})^n, plus the
/// lambda/u symmetrization identity at `samples` random rational points. Guarded to n <= 5.
bool cyclic_symmetrization_check(int n, int samples = 10, std::uint64_t seed = 1);

}  // namespace gperm
