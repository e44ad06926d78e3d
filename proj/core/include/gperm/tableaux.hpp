#pragma once

#include <map>
#include <vector>

#include "gperm/genperm.hpp"
#include "gperm/polynomial.hpp"
#include "gperm/rational.hpp"

namespace gperm {

/// Diagonal (T(1,1), ..., T(n,n)) of a standard shifted tableau of staircase shape (n, ..., 1).
struct DiagonalVector {
    std::vector<long> d;

    /// d_1 = 1, d_{i+1} = d_i + a_i + 1.
    static DiagonalVector from_gaps(const std::vector<long>& a);
    /// a_i = d_{i+1} - d_i - 1.
    std::vector<long> gaps() const;
    /// Strictly increasing with d_1 = 1 and d_n = n(n+1)/2.
    bool valid() const;
};

/// Gap vector a -> N(a), the number of shifted staircase tableaux with that diagonal.
using DiagonalTable = std::map<std::vector<long>, Integer>;

/// prod_{i<j<=n} (t_i + ... + t_{j-1}) / (j - i) in t1..t_{n-1}. Guarded to n <= 9.
RationalPolynomial diagonal_generating_function(int n);
/// N(a) for every a with N(a) > 0, from the expansion of the product. Guarded to n <= 9.
DiagonalTable diagonal_table(int n);
/// Number of distinct diagonal vectors; for n <= 6 also checked against the lattice-point count
/// of the sum of the interval simplices Delta_{[i,j-1]}.
Integer count_diagonal_vectors(int n);
/// N(a) for a of length n-1; zero outside the associahedron. Requires sum a = n(n-1)/2.
Integer tableaux_count(const std::vector<long>& a);

/// Rectangle rows [row_first, row_last] x columns [col_first, col_last] of the shifted staircase.
struct Rectangle {
    int node = 0;
    int row_first = 0, row_last = 0;
    int col_first = 0, col_last = 0;

    int rows() const { return row_last - row_first + 1; }
    int cols() const { return col_last - col_first + 1; }
    long area() const { return static_cast<long>(rows()) * cols(); }
};

/// Subdivision of the staircase (n, ..., 1) into n rectangles; rectangle i holds corner (i, i).
std::vector<Rectangle> rectangle_subdivision(const PlaneBinaryTree& t);

/// Standard Young tableaux of an l x r rectangle (hook-length formula).
Integer rectangle_syt_count(int l, int r);

struct VertexDiagonal {
    PlaneBinaryTree tree;
    std::vector<long> gaps;
    Integer count;
    Integer by_factorials;
    Integer by_rectangles;
};

/// For each plane binary tree on n-1 nodes, N at the Loday vertex compared with the factorial and the
/// rectangle-tableaux products; throws ConsistencyError on a mismatch. Guarded to n <= 7.
std::vector<VertexDiagonal> vertex_diagonals(int n);

}  // namespace gperm
