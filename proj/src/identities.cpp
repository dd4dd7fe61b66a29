#include "schurq/identities.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "schurq/pfaffian.hpp"
#include "schurq/tableaux.hpp"

namespace schurq {

Rational definition_oracle_eval(const StrictPartition& lambda, const ParameterSequence& a,
                                const std::vector<Rational>& point) {
    const int n = static_cast<int>(point.size());
    const int l = lambda.length();
    if (l > n) return Rational(0);
    if (n > 8) throw std::invalid_argument("symmetrization oracle limited to n <= 8");
    a.require(std::max(1, lambda.max_part()), "definition oracle");

    std::set<Rational> seen;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (!seen.insert(point[i]).second)
            throw SingularPointError("repeated coordinate");
        for (std::size_t j = i + 1; j < point.size(); ++j)
            if (point[i] + point[j] == 0) throw SingularPointError("x_i + x_j = 0");
    }

    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Rational total(0);
    do {
        Rational term(1);
        for (int i = 1; i <= l; ++i)
            term *= generalized_power(point[perm[static_cast<std::size_t>(i - 1)]],
                                      lambda.part(i), a);
        for (int i = 1; i <= l; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const Rational& xi = point[perm[static_cast<std::size_t>(i - 1)]];
                const Rational& xj = point[perm[static_cast<std::size_t>(j - 1)]];
                term *= (xi + xj) / (xi - xj);
            }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / Rational(factorial(static_cast<unsigned long>(n - l)));
}

bool vanishing_check(const StrictPartition& mu, const StrictPartition& lambda,
                     const ParameterSequence& a) {
    const int needed = std::max(mu.max_part(), lambda.max_part()) + 1;
    a.require(needed, "vanishing check");
    if (!a.pairwise_distinct(needed))
        throw std::invalid_argument("vanishing theorem needs pairwise-distinct parameters");
    const int n = std::max(mu.length(), lambda.length());
    auto x = node_point(lambda, a, n);
    Rational value = p_multiparam(mu, a, n).evaluate(x);
    if (mu == lambda) return value == h_weight(mu, a);
    if (!contains(lambda, mu)) return value == 0;
    return true;  // mu strictly inside lambda: the theorem asserts nothing
}

InterpolationSystem build_interpolation_system(const ParameterSequence& a, int max_weight,
                                               int n) {
    InterpolationSystem sys;
    sys.shapes = strict_partitions_upto(max_weight);
    for (const auto& lambda : sys.shapes) {
        if (lambda.length() > n)
            throw std::invalid_argument("interpolation system needs n >= every shape length");
        sys.nodes.push_back(node_point(lambda, a, n));
    }
    std::vector<MultiPoly> polys;
    polys.reserve(sys.shapes.size());
    for (const auto& mu : sys.shapes) polys.push_back(p_multiparam(mu, a, n));
    for (const auto& node : sys.nodes) {
        std::vector<Rational> row;
        row.reserve(polys.size());
        for (const auto& p : polys) row.push_back(p.evaluate(node));
        sys.matrix.push_back(std::move(row));
    }
    return sys;
}

std::vector<Rational> interpolate(const StrictPartition& mu, const ParameterSequence& a,
                                  int n) {
    a.require(mu.max_part() + 1, "interpolate");
    if (!a.pairwise_distinct(mu.max_part() + 1))
        throw std::invalid_argument("interpolation needs pairwise-distinct parameters");
    InterpolationSystem sys = build_interpolation_system(a, mu.weight(), n);
    std::vector<Rational> rhs(sys.shapes.size(), Rational(0));
    for (std::size_t i = 0; i < sys.shapes.size(); ++i)
        if (sys.shapes[i] == mu) rhs[i] = h_weight(mu, a);
    return solve_linear(sys.matrix, std::move(rhs));
}

bool pieri_check(const StrictPartition& mu, const ParameterSequence& a, int n) {
    a.require(mu.max_part() + 1, "pieri check");
    Rational shift(0);
    for (int j = 1; j <= mu.length(); ++j) shift += a.at(mu.part(j) + 1);
    MultiPoly p1 = p_multiparam(StrictPartition({1}), a, n);
    MultiPoly lhs = p_multiparam(mu, a, n) * (p1 - shift);
    MultiPoly rhs(static_cast<std::size_t>(n));
    for (const auto& lambda : covers_of(mu)) rhs += p_multiparam(lambda, a, n);
    return lhs == rhs;
}

}  // namespace schurq
