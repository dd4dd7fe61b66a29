#pragma once

#include <utility>
#include <vector>

#include "schurq/partitions.hpp"
#include "schurq/rational.hpp"

namespace schurq {

/// Levels DP_0..DP_max_weight of the Schur graph plus the covering edges
/// between consecutive levels.
struct SchurGraphSlice {
    std::vector<std::vector<StrictPartition>> levels;
    std::vector<std::pair<StrictPartition, StrictPartition>> edges;  // mu -> lambda
};

SchurGraphSlice build_schur_graph(int max_weight);

/// Number of saturated chains mu = nu0 -> nu1 -> ... -> lambda in the Schur
/// graph; 0 when mu is not contained in lambda, 1 when mu = lambda. This is
/// the count g_{lambda/mu} of standard shifted tableaux of the skew shape.
Integer g_paths(const StrictPartition& mu, const StrictPartition& lambda);

/// Closed form g_{lambda/empty} = |lambda|!/prod(lambda_k!) *
/// prod_{i<j} (lambda_i-lambda_j)/(lambda_i+lambda_j).
Integer g_unskew(const StrictPartition& lambda);

/// g_{lambda/mu} = g_{lambda/empty} * P*_mu(lambda_1..lambda_l) /
/// (|lambda| falling |mu|), with the factorial P evaluated at the parts.
Integer g_formula(const StrictPartition& mu, const StrictPartition& lambda);

/// g_{lambda/mu} = (|lambda|-|mu|)! * Pf(A) with X entries
/// (l_i-l_j)/((l_i+l_j) l_i! l_j!), Y entries 1/(l_i-mu_j)! (zero for
/// negative arguments), and a zero part appended when l(lambda)+l(mu) is odd.
Integer g_pfaffian(const StrictPartition& mu, const StrictPartition& lambda);

}  // namespace schurq
