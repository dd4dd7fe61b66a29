#include "schurq/pfaffian.hpp"

#include <set>

#include "schurq/tableaux.hpp"

namespace schurq {

namespace {

// Pf(A_0) for coordinates xs, appending a zero coordinate when the count is
// odd. Entries (x_i - x_j)/(x_i + x_j).
Rational pf_zero_block(std::vector<Rational> xs) {
    if (xs.size() % 2 != 0) xs.emplace_back(0);
    const std::size_t m = xs.size();
    std::vector<std::vector<Rational>> entries(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            Rational den = xs[i] + xs[j];
            if (den == 0) throw SingularPointError("x_i + x_j = 0");
            entries[i][j] = (xs[i] - xs[j]) / den;
        }
    return pfaffian(SkewMatrix<Rational>(std::move(entries)));
}

// Pf(A_lambda) with the bordered matrix [[A_0, B], [-B^t, 0]], appending a
// zero coordinate when n + l is odd.
Rational pf_bordered(std::vector<Rational> xs, const StrictPartition& lambda,
                     const ParameterSequence& a) {
    const int l = lambda.length();
    if ((xs.size() + static_cast<std::size_t>(l)) % 2 != 0) xs.emplace_back(0);
    const std::size_t n = xs.size();
    const std::size_t m = n + static_cast<std::size_t>(l);
    std::vector<std::vector<Rational>> entries(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational den = xs[i] + xs[j];
            if (den == 0) throw SingularPointError("x_i + x_j = 0");
            entries[i][j] = (xs[i] - xs[j]) / den;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 1; j <= l; ++j) {
            // Column j holds (x_i | a)^{lambda_{l+1-j}}.
            Rational b = generalized_power(xs[i], lambda.part(l + 1 - j), a);
            entries[i][n + static_cast<std::size_t>(j - 1)] = b;
            entries[n + static_cast<std::size_t>(j - 1)][i] = -b;
        }
    return pfaffian(SkewMatrix<Rational>(std::move(entries)));
}

}  // namespace

Rational nimmo_eval(const StrictPartition& lambda, const ParameterSequence& a,
                    const std::vector<Rational>& point) {
    const int n = static_cast<int>(point.size());
    const int l = lambda.length();
    if (n < l) throw std::invalid_argument("nimmo_eval needs n >= length of lambda");
    a.require(std::max(1, lambda.max_part()), "nimmo_eval");

    std::set<Rational> seen;
    for (const Rational& x : point) {
        if (!seen.insert(x).second) throw SingularPointError("repeated coordinate");
        // An appended zero coordinate must stay distinct from every x_i, and
        // x_i + 0 must not vanish; both reduce to x_i != 0.
        if (x == 0) throw SingularPointError("zero coordinate");
    }

    Rational denom = pf_zero_block(point);
    if (denom == 0) throw SingularPointError("Pf_0 vanishes at the point");
    Rational numer = pf_bordered(point, lambda, a);
    return numer / denom;
}

MultiPoly q_two_row_normalized(int r, int s, const ParameterSequence& a, int n) {
    if (r < 0 || s < 0) throw std::invalid_argument("two-row indices must be non-negative");
    if (r == s) return MultiPoly::zero(static_cast<std::size_t>(n));
    if (r < s) return -q_two_row_normalized(s, r, a, n);
    std::vector<int> parts{r};
    if (s > 0) parts.push_back(s);
    return q_multiparam(StrictPartition(std::move(parts)), a, n);
}

MultiPoly giambelli_q(const StrictPartition& lambda, const ParameterSequence& a, int n) {
    const int l = lambda.length();
    if (l == 0) return MultiPoly::constant(static_cast<std::size_t>(n), Rational(1));
    const int m = 2 * ((l + 1) / 2);  // l rounded up to even
    std::vector<std::vector<MultiPoly>> entries(
        static_cast<std::size_t>(m),
        std::vector<MultiPoly>(static_cast<std::size_t>(m), MultiPoly(static_cast<std::size_t>(n))));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                q_two_row_normalized(lambda.part(i), lambda.part(j), a, n);
        }
    return pfaffian(SkewMatrix<MultiPoly>(std::move(entries)));
}

}  // namespace schurq
