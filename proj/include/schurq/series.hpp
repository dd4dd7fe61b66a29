#pragma once

#include <vector>

#include "schurq/linalg.hpp"
#include "schurq/parameters.hpp"
#include "schurq/partitions.hpp"
#include "schurq/polynomial.hpp"
#include "schurq/useries.hpp"

namespace schurq {

/// Coefficients d_{r r'} of the partial-fraction rewrite
///   1/((u-b_1)...(u-b_{r'+1})) = sum_{r >= r'} d_{r r'} / ((u-a_1)...(u-a_{r+1})),
/// for 0 <= r', r <= max_r; d_{r r'} = 0 for r < r', d_{r r} = 1.
struct DCoeffTable {
    int max_r;
    RationalMatrix d;  // d[r][r_prime]

    const Rational& at(int r, int r_prime) const {
        return d[static_cast<std::size_t>(r)][static_cast<std::size_t>(r_prime)];
    }
};

/// Table computed by a triangular series solve in powers of 1/u.
/// Both prefixes need at least max_r + 1 values and a_1 = b_1 = 0.
DCoeffTable d_coeffs(const ParameterSequence& a, const ParameterSequence& b, int max_r);

/// Independent closed form for one entry: the super complete homogeneous
/// value h_{r-r'}(b_2..b_{r'+1}; -a_2..-a_r).
Rational d_coeff_super_h(const ParameterSequence& a, const ParameterSequence& b, int r,
                         int r_prime);

/// Two-row expansion P_{(r,s);a} = sum_{r',s'} d_{rr'} d_{ss'} P_{(r',s');b}
/// checked as an exact polynomial identity in n variables (r > s >= 1; the
/// antisymmetry convention covers the r' <= s' terms).
bool transition_two_row_check(int r, int s, const ParameterSequence& a,
                              const ParameterSequence& b, int n);

/// Basis change Q_{mu;a} = sum_nu d_{mu nu} Q_{nu;b} with
/// d_{mu nu} = det((d_{mu_i nu_j})); entries vanish unless length(nu) =
/// length(mu) and nu is contained in mu.
struct TransitionMatrix {
    std::vector<StrictPartition> shapes;  // weight-then-lex order
    RationalMatrix entries;               // entries[mu][nu]
};

TransitionMatrix transition_matrix(const ParameterSequence& a, const ParameterSequence& b,
                                   int max_weight);

/// One-row generating function: both sides of
///   sum_r Q_{(r);a} / (u|ta)^r = prod_j (u+x_j)/(u-x_j)
/// expanded to order N in 1/u and compared coefficientwise ((ta)_k = a_{k+1}).
bool one_row_genfun_check(const ParameterSequence& a, int n, int order);

/// Two-row linear relations underlying the double generating function:
///   P_{(k+1,l)} + P_{(k,l+1)} + (a_{k+1}+a_{l+1}) P_{(k,l)}
///     = P_{(k)} P_{(l+1)} - P_{(k+1)} P_{(l)} + (a_{l+1}-a_{k+1}) P_{(k)} P_{(l)}
/// for k, l >= 1, and P_{(k+1)} + P_{(k,1)} + a_{k+1} P_{(k)} = P_{(k)} P_{(1)}
/// for k >= 1. Out-of-range indices are vacuously true.
bool two_row_relations_check(int k, int l, const ParameterSequence& a, int n);

/// Direct coefficientwise check of the double generating function
///   4uv(u+v) sum_{k,l>=0} P_{(k,l);a} / ((u|a)^{k+1} (v|a)^{l+1})
///     = u (F_u + 1)(1 - F_v) - v (1 - F_u)(F_v + 1),  F_w = prod (w+x_j)/(w-x_j),
/// on the window of exponents u^e v^f with -biorder <= e, f <= 2.
bool two_row_genfun_direct_check(const ParameterSequence& a, int n, int biorder);

/// P with the antisymmetry normalization: P_{(k,k)} = 0, P_{(k,l)} =
/// -P_{(l,k)} for k < l, P_{(k,0)} = P_{(k)}.
MultiPoly p_two_row_normalized(int r, int s, const ParameterSequence& a, int n);

}  // namespace schurq
