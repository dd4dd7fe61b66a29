#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schurq/monomial.hpp"
#include "schurq/rational.hpp"

namespace schurq {

/// Sparse multivariate polynomial in x1..xn over exact rationals.
///
/// Terms are kept in a canonical graded-lexicographic map with no zero
/// coefficients. Values are immutable in spirit: every operation returns a
/// fresh polynomial, so sharing across threads is safe.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    MultiPoly() : n_vars_(0) {}
    explicit MultiPoly(std::size_t n_vars) : n_vars_(n_vars) {}

    static MultiPoly zero(std::size_t n_vars) { return MultiPoly(n_vars); }
    static MultiPoly constant(std::size_t n_vars, const Rational& c);
    /// x_{index} with 0-based index.
    static MultiPoly variable(std::size_t n_vars, std::size_t index);

    std::size_t n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_term() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; empty for the zero polynomial (the -inf sentinel is
    /// deliberately not a number).
    std::optional<int> degree() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator/(const Rational& c) const;
    MultiPoly operator+(const Rational& c) const;
    MultiPoly operator-(const Rational& c) const;

    bool operator==(const MultiPoly& o) const {
        return n_vars_ == o.n_vars_ && terms_ == o.terms_;
    }

    MultiPoly pow(unsigned e) const;

    /// Exact evaluation at a rational point (length must equal n_vars).
    Rational evaluate(std::span<const Rational> point) const;

    /// Substitutes `value` for x_{var_index} (0-based). `value` may live in a
    /// ring with extra trailing variables; the result is lifted to
    /// value.n_vars() and no longer mentions x_{var_index}.
    MultiPoly substitute(std::size_t var_index, const MultiPoly& value) const;

    /// Sets the last variable to zero and drops it (n_vars decreases by one).
    MultiPoly restrict_last_var() const;

    /// Embeds into a ring with more variables (new ones unused).
    MultiPoly extend_vars(std::size_t new_n_vars) const;

    /// Sum of the terms of maximal total degree (zero polynomial for zero).
    MultiPoly top_homogeneous() const;

    bool is_symmetric() const;

    /// Symmetric and, after x1 := t, x2 := -t, independent of t. For
    /// n_vars <= 1 only the (vacuous) symmetry clause applies.
    bool is_supersymmetric() const;

    void add_term(const Monomial& m, const Rational& c);

    /// Canonical text form, leading term first, e.g. "2*x1^2*x2 - 1/3*x3".
    std::string to_string() const;

    /// Parses the grammar produced by to_string().
    static MultiPoly parse(std::string_view text, std::size_t n_vars);

private:
    std::size_t n_vars_;
    TermMap terms_;

    void check_same_ring(const MultiPoly& o) const;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace schurq
