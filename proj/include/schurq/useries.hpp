#pragma once

#include <vector>

#include "schurq/polynomial.hpp"

namespace schurq {

/// Truncated expansion at u = infinity: sum of coeff(k) * u^-k for
/// k = 0..order, with polynomial coefficients. All arithmetic truncates at
/// the common order.
class USeries {
public:
    USeries(std::size_t n_vars, int order)
        : n_vars_(n_vars), coeffs_(static_cast<std::size_t>(order) + 1, MultiPoly(n_vars)) {}

    static USeries one(std::size_t n_vars, int order) {
        USeries s(n_vars, order);
        s.coeffs_[0] = MultiPoly::constant(n_vars, Rational(1));
        return s;
    }

    std::size_t n_vars() const { return n_vars_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const MultiPoly& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, MultiPoly p);

    USeries operator+(const USeries& o) const;
    USeries operator-(const USeries& o) const;
    USeries operator*(const USeries& o) const;
    USeries operator*(const MultiPoly& p) const;
    USeries operator*(const Rational& c) const;
    USeries operator-() const;

    /// Multiplies by u^-k (shifts coefficients; top terms fall off).
    USeries shifted_down(int k) const;

    /// Inverse in the truncated ring; the u^0 coefficient must be a nonzero
    /// constant.
    USeries inverse() const;

    bool operator==(const USeries& o) const {
        return n_vars_ == o.n_vars_ && coeffs_ == o.coeffs_;
    }

private:
    std::size_t n_vars_;
    std::vector<MultiPoly> coeffs_;

    void check_compatible(const USeries& o) const;
};

/// Polynomial in u with MultiPoly coefficients; index = power of u.
using UPoly = std::vector<MultiPoly>;

/// num/den expanded at u = infinity as u^shift * series, where series has a
/// generically nonzero u^0 coefficient. shift = deg_u(num) - deg_u(den), so
/// 1/(u - a) comes back as shift -1 with series 1 + a*u^-1 + ... The leading
/// u-coefficient of den must be a nonzero constant.
struct RatioExpansion {
    int shift;
    USeries series;
};

RatioExpansion useries_of_ratio(const UPoly& num, const UPoly& den, int order);

}  // namespace schurq
