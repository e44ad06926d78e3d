#pragma once

#include <optional>
#include <vector>

#include "gperm/rational.hpp"

namespace gperm {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);
int rank(RationalMatrix m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
RationalMatrix transpose(const RationalMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& v);
RationalMatrix identity_matrix(int n);

}  // namespace gperm
