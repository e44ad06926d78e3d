#pragma once

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "gperm/genperm.hpp"
#include "gperm/minkowski.hpp"
#include "gperm/permutohedron.hpp"
#include "gperm/rational.hpp"

namespace gperm {

/// Power series c_0 + c_1 t + ... + c_N t^N with exact coefficients; products truncate at N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 0) : c_(static_cast<std::size_t>(order) + 1) {}
    static TruncatedSeries constant(const Rational& c, int order);
    /// e^{a t}
    static TruncatedSeries exp(const Rational& a, int order);
    /// t / (1 - e^{a t}) for a != 0.
    static TruncatedSeries todd_factor(const Rational& a, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Rational> c_;
};

/**
 * @brief Simple polytope given by its vertices and, at each vertex, n integer cone generators.
 *
 * The polytope is taken to be the intersection of the vertex cones; this is not checked.
 */
struct SimplePolytopeRep {
    int dim = 0;
    std::vector<RationalVector> vertices;
    std::vector<std::vector<IntVector>> cones;

    static SimplePolytopeRep from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Integer points v + sum c_i g_i with 0 <= c_i < 1. The generators must be independent.
std::vector<IntVector> parallelepiped_points(const RationalVector& v, const std::vector<IntVector>& gens);

/// S(χ_C) = (sum over the parallelepiped of t^a) / prod (1 - t^{g_i}).
struct ConeSRepresentation {
    std::vector<IntVector> numerator;
    std::vector<IntVector> denominator;
};
ConeSRepresentation cone_S_representation(const RationalVector& v, const std::vector<IntVector>& gens);

/// Specialization t^a -> e^{q h(a)} of a sum of cone representations, as Laurent coefficients
/// for q^k with k from -(max generator count) up to max_degree.
std::map<int, Rational> laurent_expansion(const std::vector<ConeSRepresentation>& cones, const IntVector& h,
                                          int max_degree);

/// First form (1, M, M^2, ...) with M = 1, 2, ... that is nonzero on every generator.
IntVector generic_form(const SimplePolytopeRep& p);

/// Lattice-point count from the vertex cones; throws ConsistencyError if the result is not an integer.
Integer lattice_count_brion(const SimplePolytopeRep& p, std::optional<IntVector> h = std::nullopt);
/// Volume from the vertex cones.
Rational volume_brion(const SimplePolytopeRep& p, std::optional<IntVector> h = std::nullopt);

/// Vertex cones of P_B(y) from B-forests, with the last coordinate dropped (the polytope lies in
/// a hyperplane sum t_i = const). The constant must be an integer for lattice counts to be meaningful.
SimplePolytopeRep genperm_cone_rep(const BuildingSet& b, const SubsetWeights& y);
/// Vertex cones of the permutohedron P_n(x), again projected to the first n-1 coordinates.
SimplePolytopeRep permutohedron_cone_rep(const RationalVector& x);

/// Todd(q) = q / (1 - e^{-q}) coefficients up to q^order.
std::vector<Rational> todd_coefficients(int order);

/// Volume of P_n^z in the variables z_I (named z{...}) for all nonempty I, via Möbius inversion of
/// the draconian volume polynomial of all subsets.
RationalPolynomial volume_z_polynomial(int n);
/// Todd(-∂/∂z_I) over all proper I applied to volume_z_polynomial(n).
RationalPolynomial todd_lattice_polynomial(int n);
/// Lattice points of P_G(y) for n in {3, 4} and integer weights, via the Todd operator; checked
/// against the raising-power count.
Integer todd_count_genperm(const SubsetFamily& f);

}  // namespace gperm
