#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurq/series.hpp"
#include "schurq/tableaux.hpp"
#include "test_support.hpp"

using namespace schurq;
using schurq::testing::Rng;

namespace {

// Expansion of 1/prod_{k=1}^{count}(u - a_k) rebuilt from first principles
// for the re-substitution check.
USeries expand_inverse(const ParameterSequence& a, int count, int order) {
    UPoly den{MultiPoly::constant(0, Rational(1))};
    for (int k = 1; k <= count; ++k) {
        UPoly next(den.size() + 1, MultiPoly(0));
        for (std::size_t i = 0; i < den.size(); ++i) {
            next[i + 1] += den[i];
            next[i] -= den[i] * a.at(k);
        }
        den = std::move(next);
    }
    auto [shift, series] = useries_of_ratio({MultiPoly::constant(0, Rational(1))}, den, order);
    return series.shifted_down(-shift);
}

}  // namespace

TEST_CASE("d table for equal sequences is the identity") {
    Rng rng(601);
    auto a = schurq::testing::random_parameters(rng, 7);
    auto table = d_coeffs(a, a, 5);
    for (int r = 0; r <= 5; ++r)
        for (int rp = 0; rp <= 5; ++rp) CHECK(table.at(r, rp) == (r == rp ? 1 : 0));
}

TEST_CASE("d table is unitriangular and matches the super-h closed form") {
    Rng rng(602);
    auto a = schurq::testing::random_parameters(rng, 8);
    auto b = schurq::testing::random_parameters(rng, 8);
    auto table = d_coeffs(a, b, 6);
    for (int r = 0; r <= 6; ++r) {
        CHECK(table.at(r, r) == 1);
        for (int rp = r + 1; rp <= 6; ++rp) CHECK(table.at(r, rp) == 0);
        for (int rp = 0; rp <= r; ++rp)
            CHECK(table.at(r, rp) == d_coeff_super_h(a, b, r, rp));
    }
    // Factorial-to-classical sanity: d_{r,r'} = h_{r-r'}(b_2..b_{r'+1}).
    auto fact = ParameterSequence::factorial(8);
    auto classical = ParameterSequence::classical(8);
    auto t2 = d_coeffs(classical, fact, 4);
    CHECK(t2.at(1, 0) == 0);  // h_1 of the empty alphabet against a_2 = 0
    CHECK(t2.at(2, 1) == 1);  // h_1(b_2) = 1
}

TEST_CASE("re-substituting the d table reproduces the left-hand series") {
    Rng rng(603);
    const int max_r = 5, order = max_r + 1;
    auto a = schurq::testing::random_parameters(rng, max_r + 2);
    auto b = schurq::testing::random_parameters(rng, max_r + 2);
    auto table = d_coeffs(a, b, max_r);
    for (int rp = 0; rp <= max_r; ++rp) {
        USeries lhs = expand_inverse(b, rp + 1, order);
        USeries rhs(0, order);
        for (int r = rp; r <= max_r; ++r)
            rhs = rhs + expand_inverse(a, r + 1, order) * table.at(r, rp);
        for (int k = 0; k <= order; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
    }
}

TEST_CASE("two-row transition expansion") {
    Rng rng(604);
    auto a = schurq::testing::random_parameters(rng, 6);
    auto b = schurq::testing::random_parameters(rng, 6);
    CHECK(transition_two_row_check(2, 1, a, a, 2));  // equal sequences: trivial
    CHECK(transition_two_row_check(2, 1,
                                   ParameterSequence::factorial(6),
                                   ParameterSequence::classical(6), 2));
    CHECK(transition_two_row_check(3, 2, a, b, 2));
    CHECK(transition_two_row_check(4, 1, a, b, 3));
    CHECK_THROWS(transition_two_row_check(1, 1, a, b, 2));
}

TEST_CASE("transition matrix structure") {
    Rng rng(605);
    auto a = schurq::testing::random_parameters(rng, 6);
    auto b = schurq::testing::random_parameters(rng, 6);

    auto same = transition_matrix(a, a, 4);
    CHECK(same.entries == identity_matrix(same.shapes.size()));

    auto t_ab = transition_matrix(a, b, 4);
    auto t_ba = transition_matrix(b, a, 4);
    CHECK(matmul(t_ab.entries, t_ba.entries) == identity_matrix(t_ab.shapes.size()));

    for (std::size_t mi = 0; mi < t_ab.shapes.size(); ++mi) {
        CHECK(t_ab.entries[mi][mi] == 1);
        for (std::size_t ni = 0; ni < t_ab.shapes.size(); ++ni) {
            const auto& mu = t_ab.shapes[mi];
            const auto& nu = t_ab.shapes[ni];
            if (nu.length() != mu.length() || !contains(mu, nu))
                CHECK(t_ab.entries[mi][ni] == 0);
        }
    }
}

TEST_CASE("transition expansion of Q in the second basis") {
    Rng rng(606);
    std::vector<std::pair<ParameterSequence, ParameterSequence>> pairs;
    pairs.emplace_back(ParameterSequence::factorial(6), ParameterSequence::classical(6));
    pairs.emplace_back(schurq::testing::random_parameters(rng, 6),
                       schurq::testing::random_parameters(rng, 6));
    for (const auto& [a, b] : pairs) {
        auto t = transition_matrix(a, b, 4);
        const int n = 2;
        for (std::size_t mi = 0; mi < t.shapes.size(); ++mi) {
            MultiPoly residual = q_multiparam(t.shapes[mi], a, n);
            for (std::size_t ni = 0; ni < t.shapes.size(); ++ni) {
                if (t.entries[mi][ni] == 0) continue;
                residual -= q_multiparam(t.shapes[ni], b, n) * t.entries[mi][ni];
            }
            CHECK(residual.is_zero());
        }
    }
}

TEST_CASE("one-row generating function") {
    // Coefficient of u^-r for classical parameters in one variable is 2x^r.
    auto classical = ParameterSequence::classical(8);
    CHECK(one_row_genfun_check(classical, 1, 6));
    CHECK(one_row_genfun_check(classical, 3, 6));
    CHECK(one_row_genfun_check(ParameterSequence::factorial(8), 2, 5));
    Rng rng(607);
    CHECK(one_row_genfun_check(schurq::testing::random_parameters(rng, 9), 2, 7));
}

TEST_CASE("expansion identity behind the one-row theorem") {
    // 1 + 2 sum_r (x|a)^r / (u|ta)^r = (u+x)/(u-x) with a_1 = 0.
    Rng rng(608);
    auto a = schurq::testing::random_parameters(rng, 8);
    const int order = 6;
    auto x = MultiPoly::variable(1, 0);
    USeries lhs = USeries::one(1, order);
    for (int r = 1; r <= order; ++r) {
        UPoly den{MultiPoly::constant(1, Rational(1))};
        for (int j = 2; j <= r + 1; ++j) {
            UPoly next(den.size() + 1, MultiPoly(1));
            for (std::size_t i = 0; i < den.size(); ++i) {
                next[i + 1] += den[i];
                next[i] -= den[i] * a.at(j);
            }
            den = std::move(next);
        }
        auto [shift, series] = useries_of_ratio({generalized_power(x, r, a)}, den, order);
        lhs = lhs + series.shifted_down(-shift) * Rational(2);
    }
    UPoly num{x, MultiPoly::constant(1, Rational(1))};
    UPoly den{-x, MultiPoly::constant(1, Rational(1))};
    USeries rhs = useries_of_ratio(num, den, order).series;
    CHECK(lhs == rhs);
}

TEST_CASE("two-row linear relations") {
    Rng rng(609);
    std::vector<ParameterSequence> batteries = {
        ParameterSequence::classical(8), ParameterSequence::factorial(8),
        schurq::testing::random_parameters(rng, 8)};
    for (const auto& a : batteries)
        for (int k = 1; k <= 4; ++k)
            for (int l = 0; l < k; ++l)
                for (int n = 1; n <= 2; ++n) CHECK(two_row_relations_check(k, l, a, n));
}

TEST_CASE("classical reduction of the two-row relation") {
    // With a = 0 the relation collapses to
    // P_{(k+1,l)} + P_{(k,l+1)} = P_{(k)} P_{(l+1)} - P_{(k+1)} P_{(l)}.
    auto classical = ParameterSequence::classical(8);
    const int n = 2;
    auto p_one = [&](int r) {
        return r == 0 ? MultiPoly::constant(n, Rational(1))
                      : p_multiparam(StrictPartition({r}), classical, n);
    };
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l < k; ++l) {
            MultiPoly lhs = p_two_row_normalized(k + 1, l, classical, n) +
                            p_two_row_normalized(k, l + 1, classical, n);
            MultiPoly rhs = p_one(k) * p_one(l + 1) - p_one(k + 1) * p_one(l);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("double generating function checked directly") {
    CHECK(two_row_genfun_direct_check(ParameterSequence::factorial(10), 2, 6));
}
