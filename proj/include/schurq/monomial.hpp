#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace schurq {

// Exponent vector of fixed length (the variable count of the ambient ring).
struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t n_vars) : exponents(n_vars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    std::size_t n_vars() const { return exponents.size(); }

    std::uint32_t total_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
    }

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

// Graded-lexicographic order: first by total degree, then lexicographically.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.total_degree();
        auto db = b.total_degree();
        if (da != db) return da < db;
        return a.exponents < b.exponents;
    }
};

}  // namespace schurq
