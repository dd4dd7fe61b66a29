#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "schurq/parameters.hpp"
#include "schurq/partitions.hpp"
#include "schurq/polynomial.hpp"
#include "schurq/rational.hpp"

namespace schurq {

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Skew-symmetric square matrix over an exact ring (Rational or MultiPoly).
template <typename Ring>
class SkewMatrix {
public:
    explicit SkewMatrix(std::vector<std::vector<Ring>> entries) : entries_(std::move(entries)) {
        const std::size_t m = entries_.size();
        for (const auto& row : entries_)
            if (row.size() != m) throw std::invalid_argument("skew matrix must be square");
        for (std::size_t i = 0; i < m; ++i) {
            if (!ring_is_zero(entries_[i][i]))
                throw std::invalid_argument("skew matrix has nonzero diagonal");
            for (std::size_t j = i + 1; j < m; ++j)
                if (!ring_is_zero(entries_[i][j] + entries_[j][i]))
                    throw std::invalid_argument("matrix is not skew-symmetric");
        }
    }

    std::size_t size() const { return entries_.size(); }
    const Ring& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }

private:
    std::vector<std::vector<Ring>> entries_;
};

inline Rational ring_one(const SkewMatrix<Rational>&) { return Rational(1); }
inline MultiPoly ring_one(const SkewMatrix<MultiPoly>& a) {
    return MultiPoly::constant(a.size() ? a.at(0, 0).n_vars() : 0, Rational(1));
}

/// Pfaffian as the signed perfect-matching sum, computed by expansion along
/// the first remaining row with memoization on index subsets. Division-free,
/// so it works over polynomial rings; sizes up to ~12 are fine.
template <typename Ring>
Ring pfaffian(const SkewMatrix<Ring>& a) {
    const std::size_t m = a.size();
    if (m % 2 != 0) throw std::invalid_argument("pfaffian needs even size");
    if (m > 24) throw std::invalid_argument("pfaffian size too large for subset expansion");
    const Ring one = ring_one(a);
    if (m == 0) return one;
    const Ring zero = one - one;
    std::map<std::uint32_t, Ring> memo;

    std::function<Ring(std::uint32_t)> pf = [&](std::uint32_t mask) -> Ring {
        if (mask == 0) return one;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const auto i0 = static_cast<std::uint32_t>(__builtin_ctz(mask));
        Ring acc = zero;
        int position = 1;
        for (std::uint32_t j = i0 + 1; j < m; ++j) {
            if (!(mask & (1u << j))) continue;
            ++position;
            const Ring& entry = a.at(i0, j);
            if (!ring_is_zero(entry)) {
                Ring term = entry * pf(mask & ~(1u << i0) & ~(1u << j));
                if (position % 2 == 0)
                    acc = acc + term;
                else
                    acc = acc - term;
            }
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return pf((1u << m) - 1u);
}

/// Point is unusable for the Pfaffian ratio (coincidences or zero sums);
/// callers resample.
struct SingularPointError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Nimmo ratio Pf(A_lambda)/Pf(A_0) at an exact point, with the odd-size
/// cases augmented by an appended zero variable. Equals P_{lambda;a} at the
/// point; requires pairwise-distinct nonzero coordinates with no x_i + x_j = 0.
Rational nimmo_eval(const StrictPartition& lambda, const ParameterSequence& a,
                    const std::vector<Rational>& point);

/// Giambelli-Schur Pfaffian: Q_{lambda;a} as Pf((Q_{(lambda_i,lambda_j);a}))
/// over 2*ceil((l+1)/2) indices, padding with lambda_{l+1} = 0 and the
/// convention Q_{(k,l)} = -Q_{(l,k)}, Q_{(k,k)} = 0, Q_{(k,0)} = Q_{(k)}.
MultiPoly giambelli_q(const StrictPartition& lambda, const ParameterSequence& a, int n);

/// Two-row Q with the antisymmetry normalization used by giambelli_q.
MultiPoly q_two_row_normalized(int r, int s, const ParameterSequence& a, int n);

}  // namespace schurq
