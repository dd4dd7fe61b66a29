#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schurq/partitions.hpp"
#include "schurq/polynomial.hpp"
#include "schurq/rational.hpp"

namespace schurq {

/// Finite prefix (a_1, ..., a_M) of a parameter sequence, a_1 = 0 always.
/// Every consumer states the prefix length it needs; reading past the stored
/// prefix throws rather than extrapolating.
class ParameterSequence {
public:
    enum class Kind { classical, factorial, custom };

    /// a_k = 0.
    static ParameterSequence classical(int count);
    /// a_k = k - 1.
    static ParameterSequence factorial(int count);
    /// Explicit values; the first must be 0.
    static ParameterSequence custom(std::vector<Rational> values);

    /// "classical" | "factorial" | "custom:0,1,3,6". Presets are materialized
    /// with `count` values; a custom list is used as given.
    static ParameterSequence parse(std::string_view spec, int count);

    Kind kind() const { return kind_; }
    int count() const { return static_cast<int>(values_.size()); }
    /// 1-based access, throws past the stored prefix.
    const Rational& at(int k) const;
    const std::vector<Rational>& values() const { return values_; }

    /// Throws unless a_1..a_k are available.
    void require(int k, const char* what) const;
    bool pairwise_distinct(int upto) const;

    std::string to_string() const;

private:
    ParameterSequence(Kind kind, std::vector<Rational> values);

    Kind kind_;
    std::vector<Rational> values_;
};

/// Generalized power (x | a)^k = (x - a_1)(x - a_2)...(x - a_k); k = 0 gives 1.
Rational generalized_power(const Rational& x, int k, const ParameterSequence& a);
MultiPoly generalized_power(const MultiPoly& x, int k, const ParameterSequence& a);

/// Falling factorial (x down k) = x(x-1)...(x-k+1), the factorial-sequence
/// specialization of the generalized power.
Rational falling_factorial(const Rational& x, int k);

/// Evaluation node x(lambda): (a_{lambda_1+1}, ..., a_{lambda_l+1}, 0, ..., 0)
/// padded with a_1 = 0 to length n.
std::vector<Rational> node_point(const StrictPartition& lambda, const ParameterSequence& a,
                                 int n);

/// Interpolation normalization H_a(mu) = P_{mu;a}(x(mu)), computed by the
/// division-free product
///   prod_i prod_{k in [1,mu_i] minus {mu_j+1 : j>i}} (a_{mu_i+1} - a_k)
///   * prod_{i<j} (a_{mu_i+1} + a_{mu_j+1}),
/// which agrees with the quotient form whenever the parameters are pairwise
/// distinct and stays total when they are not.
Rational h_weight(const StrictPartition& mu, const ParameterSequence& a);

}  // namespace schurq
