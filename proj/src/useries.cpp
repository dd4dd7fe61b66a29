#include "schurq/useries.hpp"

#include <stdexcept>

namespace schurq {

void USeries::check_compatible(const USeries& o) const {
    if (n_vars_ != o.n_vars_ || coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("series orders or variable counts differ");
}

void USeries::set_coeff(int k, MultiPoly p) {
    if (p.n_vars() != n_vars_) throw std::invalid_argument("coefficient arity mismatch");
    coeffs_.at(static_cast<std::size_t>(k)) = std::move(p);
}

USeries USeries::operator+(const USeries& o) const {
    check_compatible(o);
    USeries out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] += o.coeffs_[k];
    return out;
}

USeries USeries::operator-(const USeries& o) const {
    check_compatible(o);
    USeries out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] -= o.coeffs_[k];
    return out;
}

USeries USeries::operator-() const {
    USeries out(n_vars_, order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

USeries USeries::operator*(const USeries& o) const {
    check_compatible(o);
    USeries out(n_vars_, order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

USeries USeries::operator*(const MultiPoly& p) const {
    USeries out(n_vars_, order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] * p;
    return out;
}

USeries USeries::operator*(const Rational& c) const {
    USeries out(n_vars_, order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] * c;
    return out;
}

USeries USeries::shifted_down(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    USeries out(n_vars_, order());
    for (std::size_t j = 0; j + static_cast<std::size_t>(k) < coeffs_.size(); ++j)
        out.coeffs_[j + static_cast<std::size_t>(k)] = coeffs_[j];
    return out;
}

USeries USeries::inverse() const {
    if (!coeffs_[0].is_constant() || coeffs_[0].is_zero())
        throw std::invalid_argument("series inverse needs a nonzero constant leading term");
    const Rational lead = coeffs_[0].constant_term();
    USeries out(n_vars_, order());
    out.coeffs_[0] = MultiPoly::constant(n_vars_, Rational(1) / lead);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        MultiPoly acc(n_vars_);
        for (std::size_t j = 1; j <= k; ++j) {
            if (coeffs_[j].is_zero() || out.coeffs_[k - j].is_zero()) continue;
            acc += coeffs_[j] * out.coeffs_[k - j];
        }
        out.coeffs_[k] = acc * (Rational(-1) / lead);
    }
    return out;
}

RatioExpansion useries_of_ratio(const UPoly& num, const UPoly& den, int order) {
    auto top = [](const UPoly& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<std::size_t>(d)].is_zero()) --d;
        return d;
    };
    const int dn = top(num);
    const int dd = top(den);
    if (dd < 0) throw std::invalid_argument("zero denominator");
    const std::size_t n_vars = den[0].n_vars();
    // Rewrite p(u) = u^deg * sum_k p[deg-k] * u^-k and divide the reversed
    // series; the factored powers of u combine into the shift.
    auto reversed = [&](const UPoly& p, int d) {
        USeries s(n_vars, order);
        for (int k = 0; k <= order && d - k >= 0; ++k) s.set_coeff(k, p[static_cast<std::size_t>(d - k)]);
        return s;
    };
    if (dn < 0) return {0, USeries(n_vars, order)};
    USeries quotient = reversed(num, dn) * reversed(den, dd).inverse();
    return {dn - dd, quotient};
}

}  // namespace schurq
