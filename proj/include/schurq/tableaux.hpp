#pragma once

#include <functional>
#include <vector>

#include "schurq/parameters.hpp"
#include "schurq/partitions.hpp"
#include "schurq/polynomial.hpp"

namespace schurq {

/// Letter of the marked alphabet 1' < 1 < 2' < 2 < ...; |k'| = |k| = k,
/// sgn(k) = +1, sgn(k') = -1.
struct MarkedLetter {
    int level;
    bool marked;

    /// Rank in the total order (1' -> 1, 1 -> 2, 2' -> 3, ...).
    int rank() const { return 2 * level - (marked ? 1 : 0); }
    int sign() const { return marked ? -1 : 1; }
};

/// Filling of the shifted diagram, entries aligned with shifted_cells(shape):
/// weakly increasing along rows and columns, at most one unmarked k per
/// column, at most one marked k' per row.
struct MarkedShiftedTableau {
    StrictPartition shape;
    std::vector<MarkedLetter> entries;
};

/// Streams every marked shifted tableau of the given shape with letters of
/// level <= n, each exactly once, in depth-first row-major order.
void enumerate_marked(const StrictPartition& lambda, int n,
                      const std::function<void(const MarkedShiftedTableau&)>& visit);

/// Multiparameter Schur Q-polynomial via the marked-tableau sum
///   Q_{lambda;a}(x_1..x_n) = sum_T prod_cells (x_|T(i,j)| - sgn(T(i,j)) a_{j-i+1}).
/// Requires a_1 = 0 and the prefix up to a_{lambda_1}.
MultiPoly q_multiparam(const StrictPartition& lambda, const ParameterSequence& a, int n);

/// P = Q / 2^length(lambda).
MultiPoly p_multiparam(const StrictPartition& lambda, const ParameterSequence& a, int n);

/// Specializations: a = 0 (classical) and a_k = k - 1 (factorial).
MultiPoly q_classical(const StrictPartition& lambda, int n);
MultiPoly p_classical(const StrictPartition& lambda, int n);
MultiPoly q_factorial(const StrictPartition& lambda, int n);
MultiPoly p_factorial(const StrictPartition& lambda, int n);

/// Same polynomial through chains of strict partitions with 2x2-free layers
/// weighted by strip_factor; equals q_multiparam identically.
MultiPoly q_via_unmarked(const StrictPartition& lambda, const ParameterSequence& a, int n);

}  // namespace schurq
