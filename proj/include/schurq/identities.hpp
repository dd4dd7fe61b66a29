#pragma once

#include <vector>

#include "schurq/linalg.hpp"
#include "schurq/parameters.hpp"
#include "schurq/partitions.hpp"
#include "schurq/polynomial.hpp"

namespace schurq {

/// P_{lambda;a} at a point straight from the symmetrization definition:
///   1/(n-l)! sum_{w in S(n)} prod_i (x_{w(i)}|a)^{lambda_i}
///            prod_{i<=l, i<j<=n} (x_{w(i)}+x_{w(j)})/(x_{w(i)}-x_{w(j)}).
/// Zero when length(lambda) > n. Brute force over S(n), so keep n <= 7; the
/// point must have distinct coordinates with no two summing to zero.
Rational definition_oracle_eval(const StrictPartition& lambda, const ParameterSequence& a,
                                const std::vector<Rational>& point);

/// Vanishing theorem instance for the pair (mu, lambda): P_{mu;a}(x(lambda))
/// is 0 when mu is not contained in lambda, and H_a(mu) when mu = lambda.
/// Evaluations run through the tableau polynomial. Parameters must be
/// pairwise distinct up to the needed index.
bool vanishing_check(const StrictPartition& mu, const StrictPartition& lambda,
                     const ParameterSequence& a);

/// Values P_{mu;a}(x(lambda)) over all strict shapes of weight <= max_weight,
/// rows indexed by nodes x(lambda), columns by shapes mu.
struct InterpolationSystem {
    std::vector<StrictPartition> shapes;        // weight-then-lex order
    std::vector<std::vector<Rational>> nodes;   // x(lambda) per shape
    RationalMatrix matrix;                      // matrix[l][m] = P_{shapes[m];a}(nodes[l])
};

InterpolationSystem build_interpolation_system(const ParameterSequence& a, int max_weight,
                                               int n);

/// Solves f(x(lambda)) = H_a(mu) [lambda = mu] for f in the span of
/// {P_{nu;a} : |nu| <= |mu|}; the coefficient vector (over the weight-then-lex
/// shape list) must come back as the unit vector selecting mu. Requires
/// pairwise-distinct parameters and n >= every length in the span.
std::vector<Rational> interpolate(const StrictPartition& mu, const ParameterSequence& a, int n);

/// Pieri instance: P_{mu;a} (P_(1) - sum_j a_{mu_j+1}) = sum over covers
/// mu -> lambda of P_{lambda;a}, exactly, in n variables. Covers longer than
/// n contribute zero on both sides by the length guard.
bool pieri_check(const StrictPartition& mu, const ParameterSequence& a, int n);

}  // namespace schurq
