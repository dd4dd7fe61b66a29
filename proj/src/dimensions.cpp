#include "schurq/dimensions.hpp"

#include <map>
#include <stdexcept>

#include "schurq/parameters.hpp"
#include "schurq/pfaffian.hpp"
#include "schurq/tableaux.hpp"

namespace schurq {

SchurGraphSlice build_schur_graph(int max_weight) {
    SchurGraphSlice slice;
    for (int w = 0; w <= max_weight; ++w) slice.levels.push_back(strict_partitions_of(w));
    for (int w = 0; w + 1 <= max_weight; ++w)
        for (const auto& mu : slice.levels[static_cast<std::size_t>(w)])
            for (const auto& lambda : covers_of(mu))
                if (lambda.weight() <= max_weight) slice.edges.emplace_back(mu, lambda);
    return slice;
}

Integer g_paths(const StrictPartition& mu, const StrictPartition& lambda) {
    if (!contains(lambda, mu)) return 0;
    std::map<StrictPartition, Integer> counts{{mu, Integer(1)}};
    for (int w = mu.weight(); w < lambda.weight(); ++w) {
        std::map<StrictPartition, Integer> next;
        for (const auto& [nu, count] : counts)
            for (const auto& up : covers_of(nu)) {
                if (!contains(lambda, up)) continue;
                next[up] += count;
            }
        counts = std::move(next);
    }
    auto it = counts.find(lambda);
    return it == counts.end() ? Integer(0) : it->second;
}

Integer g_unskew(const StrictPartition& lambda) {
    Rational value(factorial(static_cast<unsigned long>(lambda.weight())));
    for (int k = 1; k <= lambda.length(); ++k)
        value /= Rational(factorial(static_cast<unsigned long>(lambda.part(k))));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = i + 1; j <= lambda.length(); ++j)
            value *= Rational(lambda.part(i) - lambda.part(j), lambda.part(i) + lambda.part(j));
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("g_unskew produced a non-integer");
    return value.get_num();
}

Integer g_formula(const StrictPartition& mu, const StrictPartition& lambda) {
    if (!contains(lambda, mu)) return 0;
    const int n = lambda.length();
    auto a = ParameterSequence::factorial(std::max(1, mu.max_part()));
    std::vector<Rational> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) parts.emplace_back(lambda.part(i));
    Rational p_star = p_multiparam(mu, a, n).evaluate(parts);
    Rational value = Rational(g_unskew(lambda)) * p_star /
                     falling_factorial(Rational(lambda.weight()), mu.weight());
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("g_formula produced a non-integer");
    return value.get_num();
}

namespace {

Rational factorial_reciprocal(int m) {
    if (m < 0) return Rational(0);
    return Rational(1) / Rational(factorial(static_cast<unsigned long>(m)));
}

}  // namespace

Integer g_pfaffian(const StrictPartition& mu, const StrictPartition& lambda) {
    if (lambda.weight() < mu.weight()) return 0;
    std::vector<int> rows(lambda.parts());
    const int k_mu = mu.length();
    if ((rows.size() + static_cast<std::size_t>(k_mu)) % 2 != 0) rows.push_back(0);
    const std::size_t k = rows.size();
    const std::size_t m = k + static_cast<std::size_t>(k_mu);
    std::vector<std::vector<Rational>> entries(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            entries[i][j] = Rational(rows[i] - rows[j], rows[i] + rows[j]) *
                            factorial_reciprocal(rows[i]) * factorial_reciprocal(rows[j]);
            entries[i][j].canonicalize();
        }
    for (std::size_t i = 0; i < k; ++i)
        for (int j = 1; j <= k_mu; ++j) {
            // Column j holds 1/(lambda_i - mu_{l+1-j})!, mirroring the
            // reversed column order of the bordered Nimmo matrix; the direct
            // order flips the Pfaffian's sign when length(mu) is 2 or 3 mod 4.
            Rational y = factorial_reciprocal(rows[i] - mu.part(k_mu + 1 - j));
            entries[i][k + static_cast<std::size_t>(j - 1)] = y;
            entries[k + static_cast<std::size_t>(j - 1)][i] = -y;
        }
    Rational value = Rational(factorial(static_cast<unsigned long>(lambda.weight() - mu.weight()))) *
                     pfaffian(SkewMatrix<Rational>(std::move(entries)));
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("g_pfaffian produced a non-integer");
    return value.get_num();
}

}  // namespace schurq
