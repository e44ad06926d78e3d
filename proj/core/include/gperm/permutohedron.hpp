#pragma once

#include <vector>

#include "gperm/combinatorics.hpp"
#include "gperm/polynomial.hpp"
#include "gperm/rational.hpp"

namespace gperm {

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long>;

/// y_k = sum_{i=0}^{k-1} (-1)^{i+1} C(k-1,i) x_{k-i}; e.g. y_1 = -x_1, y_2 = x_1 - x_2.
RationalVector coords_x_to_y(const RationalVector& x);
/// Inverse of coords_x_to_y.
RationalVector coords_y_to_x(const RationalVector& y);
/// u_i = x_i - x_{i+1}.
RationalVector coords_x_to_u(const RationalVector& x);
/// Interval weights (y_2, ..., y_{n+1}) for u = (u_1, ..., u_n):
/// y_{k+1} = sum_i (-1)^i C(k-1,i) u_{k-i}.
RationalVector coords_u_to_y(const RationalVector& u);
/// Inverse of coords_x_to_u with x_{n+1} = 0.
RationalVector coords_u_to_x(const RationalVector& u);

/// Membership in P_n(x) through the majorization form of the Rado inequalities.
bool contains_point(const RationalVector& x, const RationalVector& t);

struct DescentIndexSet {
    Composition c;
    std::vector<int> epsilon;  // length 2n-2, entries +1/-1
    std::vector<int> I;        // ascending subset of [n-1]
};

/// Lattice-path construction: each c_i becomes c_i copies of +1 followed by -1,
/// the final -1 is dropped, and i is in I when the partial sum at 2i-1 is negative.
DescentIndexSet descent_index_set(const Composition& c);

/// V_n(x_1..x_n) = sum_c (-1)^{|I_c|} D_n(I_c) prod x_i^{c_i}/c_i!.
RationalPolynomial volume_symbolic(int n);

/// Divided symmetrization of lambda^c evaluated at the given distinct lambda.
Rational divided_symmetrization(const std::vector<int>& c, const RationalVector& lambda);

/// (1/(n-1)!) sum_w (sum_i lambda_{w(i)} x_i)^{n-1} / prod (lambda_{w(i)} - lambda_{w(i+1)}), lambda_i = i,
/// evaluated at x as given. This is the polynomial V_n(x); it is signed for unsorted x.
Rational symmetrization_formula(const RationalVector& x);
/// Volume of P_n(x): the symmetrization formula at x sorted into weakly decreasing order.
Rational volume_numeric_symmetrization(const RationalVector& x);

/// Integer points of P_n(x) for integer x, in lexicographic order.
std::vector<IntVector> lattice_points_brute(const IntVector& x);
std::size_t lattice_count_brute(const IntVector& x);

/// Leading coefficient of the Ehrhart polynomial, interpolated from dilations t = 0..n-1.
Rational volume_oracle_ehrhart(const IntVector& x);

/// Exact Lagrange interpolation: coefficients c_0..c_{k-1} of the polynomial through (t_i, v_i).
RationalVector interpolate(const RationalVector& t, const RationalVector& v);

RationalVector to_rational(const IntVector& v);

}  // namespace gperm
