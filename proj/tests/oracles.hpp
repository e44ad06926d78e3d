#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.
// Everything here is deliberately naive and independent of the library's formulas.

#include <cstdint>
#include <vector>

#include "gperm/rational.hpp"

namespace oracle {

/// D_n(I) by walking every permutation.
std::uint64_t descent_count(int n, const std::vector<int>& I);

/// Number of forests on n labeled vertices (acyclic edge subsets of K_n).
std::uint64_t labeled_forests(int n);

/// Exact determinant by fraction-free elimination over rationals.
gperm::Rational determinant(std::vector<std::vector<gperm::Rational>> m);

/// Rank of a rational matrix.
int rank(std::vector<std::vector<gperm::Rational>> m);

/// Feasibility of { f : a.f >= b for each row (a, b) } by an exact phase-one simplex.
struct Inequality {
    std::vector<gperm::Rational> a;
    gperm::Rational b;
};
bool feasible(std::vector<Inequality> rows, int dim);

/// Is there a linear functional maximized on `points` exactly at the listed indices (all tied)?
bool is_face(const std::vector<std::vector<gperm::Rational>>& points, const std::vector<size_t>& idx);
/// Among `points`, is points[i] a vertex of their convex hull?
bool is_vertex(const std::vector<std::vector<gperm::Rational>>& points, size_t i);
/// Is the segment points[i]-points[j] an edge of their convex hull?
bool is_edge(const std::vector<std::vector<gperm::Rational>>& points, size_t i, size_t j);

}  // namespace oracle

namespace oracle {

using Point = std::vector<long>;

/// Integer points of sum_i w_i * Delta_{S_i} (subsets as 1-based element lists) by iterated sumsets.
std::vector<Point> minkowski_points(int n, const std::vector<std::vector<int>>& sets, const std::vector<long>& w);

/// Points p with p + e_j in `pts` for every j.
std::vector<Point> trim_points(int n, const std::vector<Point>& pts);

/// Leading coefficient of the degree-d polynomial taking values v[0..d] at 0..d.
gperm::Rational leading_coefficient(const std::vector<gperm::Rational>& v, int d);

}  // namespace oracle

namespace oracle {

/// Permutations of [n] with exactly k-1 descents, by enumeration.
std::uint64_t eulerian(int n, int k);

/// Number of lattice points of sum_k t_k * Delta_{k,n+1} (hypersimplices), by iterated sumsets of 0/1 vectors.
std::uint64_t hypersimplex_sum_points(const std::vector<int>& t);

/// Mixed forward difference of the hypersimplex lattice count at 0 with multi-index c.
gperm::Integer mixed_difference(const std::vector<int>& c);

}  // namespace oracle
