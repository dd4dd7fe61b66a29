#pragma once

#include <vector>

#include "schurq/rational.hpp"

namespace schurq {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination with column pivoting.
Rational determinant(RationalMatrix m);

/// Solves m * x = rhs exactly; throws std::domain_error when singular.
std::vector<Rational> solve_linear(RationalMatrix m, std::vector<Rational> rhs);

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix identity_matrix(std::size_t n);

}  // namespace schurq
