#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "gperm/combinatorics.hpp"
#include "gperm/genperm.hpp"
#include "gperm/linalg.hpp"
#include "gperm/permutohedron.hpp"
#include "gperm/polynomial.hpp"
#include "gperm/rational.hpp"

namespace gperm {

using IntMatrix = std::vector<std::vector<int>>;

/**
 * @brief Finite-type root system given by a symmetrizable Cartan matrix.
 *
 * Convention: a_ij = 2(α_i,α_j)/(α_i,α_i), so (α_i,α_j) = d_i a_ij and (α_i,α_i) = 2 d_i.
 * Weights are written in fundamental-weight coordinates; α_i has coordinates (a_1i, ..., a_ni).
 */
struct RootSystem {
    IntMatrix cartan;
    std::vector<Rational> symmetrizers;
    RationalMatrix gram_simple;
    RationalMatrix gram_fundamental;
    Integer weyl_order;
    Graph dynkin;

    int rank() const { return static_cast<int>(cartan.size()); }

    static RootSystem from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Validates the matrix, derives symmetrizers (min d_i = 1 on each component), Gram matrices, |W| and Γ.
/// Throws DomainError for invalid or non-finite-type input.
RootSystem build_root_system(const IntMatrix& cartan);
/// Same with explicit symmetrizers, which must satisfy d_i a_ij = d_j a_ji.
RootSystem build_root_system(const IntMatrix& cartan, const std::vector<Rational>& symmetrizers);

/// Cartan matrix of type A, B, C, D, E, F or G and rank n (standard node numbering).
IntMatrix cartan_matrix(char type, int n);

/// |W_I| for the parabolic subgroup generated by the simple reflections in I.
Integer parabolic_weyl_order(const RootSystem& phi, Mask I);
/// (ω_i^I, ω_j^I) for i, j in I, indexed by position within I.
RationalMatrix parabolic_fundamental_gram(const RootSystem& phi, Mask I);

/// B(Γ)-trees of a connected graph: parent vectors with (T1) and (T2).
std::vector<BForest> phi_trees(const Graph& g);
std::vector<BForest> phi_trees(const RootSystem& phi);
/// Increasing labelings of a rooted tree; v[j-1] is the label of node j.
std::vector<Permutation> increasing_labelings(const BForest& t);

/// V_Φ(u) in u1..un by the Φ-tree formula (a product over Dynkin components).
RationalPolynomial weight_polytope_volume_symbolic(const RootSystem& phi);
Rational weight_polytope_volume(const RootSystem& phi, const RationalVector& u);

/// A_c^Φ by the tree sum for the realization i (default: weakly increasing), checked against the
/// coefficient of the volume polynomial and against other realizations (at most 120 of them).
Rational mixed_phi_eulerian(const RootSystem& phi, const Composition& c, std::vector<int> realization = {});
/// Tree sum alone for a given realization.
Rational mixed_phi_eulerian_trees(const RootSystem& phi, const std::vector<int>& realization);

/// Symbolic check of the ∂V/∂u_i recurrence over deleted nodes (and the min-weight form in type A).
/// Rank at most 4.
bool volume_recurrence_check(const RootSystem& phi);
/// Whether the Cartan matrix is the type A chain 1 - 2 - ... - n.
bool is_type_a(const RootSystem& phi);

using Weight = std::vector<long>;

/// Dominant weight in the W-orbit of mu.
Weight dominant_representative(const RootSystem& phi, Weight mu);
/// Simple-root coordinates of a weight (exact; integral on the root lattice).
RationalVector simple_root_coordinates(const RootSystem& phi, const Weight& mu);
/// Points of P_W(λ) in λ + L, sorted. λ must be dominant integral.
std::vector<Weight> weight_polytope_lattice_points(const RootSystem& phi, const Weight& lambda,
                                                   std::size_t limit = 1000000);

/// Weyl group elements as integer matrices acting on fundamental-weight coordinates.
std::vector<IntMatrix> weyl_group_elements(const RootSystem& phi, std::size_t limit = 100000);

/// The |W|-term sum (1/r!) Σ_w (ξ, w x)^r / Π_i (ξ, w α_i) for x and ξ in weight coordinates.
/// Throws DomainError when ξ pairs to zero with some w(α_i).
Rational weight_volume_brion(const RootSystem& phi, const RationalVector& x, const RationalVector& xi);

struct BrionWeightReport {
    bool volume_ok = false;
    bool lattice_ok = false;
    Rational volume;
    std::size_t lattice_count = 0;
    /// Series coefficients compared, from t^{-r} up to t^{r+2}.
    int max_degree = 0;
};

/// Volume and exponent-sum checks for a dominant integral λ; rank at most 3.
BrionWeightReport brion_weight_report(const RootSystem& phi, const Weight& lambda, std::uint64_t seed = 1);
bool brion_weight_checks(const RootSystem& phi, const Weight& lambda);

}  // namespace gperm
