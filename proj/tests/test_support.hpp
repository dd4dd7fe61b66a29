#pragma once

#include <random>
#include <set>
#include <vector>

#include "schurq/parameters.hpp"
#include "schurq/polynomial.hpp"
#include "schurq/rational.hpp"

namespace schurq::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_lo = -9, int num_hi = 9, int den_hi = 4) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (r != 0) return r;
    }
}

inline MultiPoly random_poly(Rng& rng, std::size_t n_vars, int max_deg, int terms) {
    std::uniform_int_distribution<int> exp(0, max_deg);
    MultiPoly p(n_vars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n_vars);
        for (std::size_t k = 0; k < n_vars; ++k)
            m.exponents[k] = static_cast<std::uint32_t>(exp(rng));
        p.add_term(m, random_rational(rng));
    }
    return p;
}

/// a_1 = 0, the rest small rationals, pairwise distinct with no two summing
/// to zero (so every interpolation weight H_a(mu) is nonzero).
inline ParameterSequence random_parameters(Rng& rng, int count) {
    std::vector<Rational> values{Rational(0)};
    std::set<Rational> seen{Rational(0)};
    while (static_cast<int>(values.size()) < count) {
        Rational r = random_rational(rng);
        if (seen.count(r) || seen.count(-r)) continue;
        seen.insert(r);
        values.push_back(r);
    }
    return ParameterSequence::custom(std::move(values));
}

/// Pairwise distinct, nonzero, no two coordinates summing to zero.
inline std::vector<Rational> random_admissible_point(Rng& rng, int n) {
    std::vector<Rational> point;
    std::set<Rational> seen;
    while (static_cast<int>(point.size()) < n) {
        Rational r = random_rational(rng, -12, 12, 4);
        if (r == 0 || seen.count(r) || seen.count(-r)) continue;
        seen.insert(r);
        point.push_back(r);
    }
    return point;
}

}  // namespace schurq::testing
