#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurq/identities.hpp"
#include "schurq/linalg.hpp"
#include "schurq/pfaffian.hpp"
#include "schurq/tableaux.hpp"
#include "test_support.hpp"

using namespace schurq;
using schurq::testing::Rng;

namespace {

std::vector<std::vector<Rational>> random_skew(Rng& rng, std::size_t m) {
    std::vector<std::vector<Rational>> e(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            e[i][j] = schurq::testing::random_rational(rng);
            e[j][i] = -e[i][j];
        }
    return e;
}

}  // namespace

TEST_CASE("small pfaffians") {
    Rational c = make_rational(7, 3);
    SkewMatrix<Rational> two({{Rational(0), c}, {-c, Rational(0)}});
    CHECK(pfaffian(two) == c);

    Rng rng(401);
    auto e = random_skew(rng, 4);
    Rational expected = e[0][1] * e[2][3] - e[0][2] * e[1][3] + e[0][3] * e[1][2];
    CHECK(pfaffian(SkewMatrix<Rational>(e)) == expected);

    SkewMatrix<Rational> empty(std::vector<std::vector<Rational>>{});
    CHECK(pfaffian(empty) == 1);
}

TEST_CASE("pfaffian squared is the determinant") {
    Rng rng(402);
    for (std::size_t m : {2u, 4u, 6u, 8u}) {
        for (int t = 0; t < 4; ++t) {
            auto e = random_skew(rng, m);
            Rational pf = pfaffian(SkewMatrix<Rational>(e));
            CHECK(pf * pf == determinant(e));
        }
    }
}

TEST_CASE("pfaffian is linear in a row and column pair") {
    Rng rng(403);
    const std::size_t m = 6, k = 2;
    auto a = random_skew(rng, m);
    auto b = a;
    for (std::size_t j = 0; j < m; ++j) {
        if (j == k) continue;
        b[k][j] = schurq::testing::random_rational(rng);
        b[j][k] = -b[k][j];
    }
    auto c = a;
    for (std::size_t j = 0; j < m; ++j) {
        if (j == k) continue;
        c[k][j] = a[k][j] + b[k][j];
        c[j][k] = -c[k][j];
    }
    CHECK(pfaffian(SkewMatrix<Rational>(c)) ==
          pfaffian(SkewMatrix<Rational>(a)) + pfaffian(SkewMatrix<Rational>(b)));
}

TEST_CASE("skew matrix validation") {
    CHECK_THROWS(SkewMatrix<Rational>({{Rational(1)}}));  // nonzero diagonal
    CHECK_THROWS(SkewMatrix<Rational>({{Rational(0), Rational(1)},
                                       {Rational(1), Rational(0)}}));
    Rng rng(404);
    CHECK_THROWS(pfaffian(SkewMatrix<Rational>(random_skew(rng, 3))));  // odd size
}

TEST_CASE("pfaffian over the polynomial ring") {
    // Entries x_i in a 4x4 arrangement keep the matching sum symbolic.
    auto x = [&](std::size_t i) { return MultiPoly::variable(6, i); };
    std::vector<std::vector<MultiPoly>> e(4, std::vector<MultiPoly>(4, MultiPoly(6)));
    std::size_t next = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            e[i][j] = x(next++);
            e[j][i] = -e[i][j];
        }
    auto pf = pfaffian(SkewMatrix<MultiPoly>(e));
    CHECK(pf == x(0) * x(5) - x(1) * x(4) + x(2) * x(3));
}

TEST_CASE("nimmo evaluation on pinned instances") {
    auto classical = ParameterSequence::classical(3);
    std::vector<Rational> pt{Rational(1), Rational(2)};
    CHECK(nimmo_eval(StrictPartition({1}), classical, pt) == 3);  // P_(1)(1,2)
    CHECK(nimmo_eval(StrictPartition(), classical, pt) == 1);

    auto fact = ParameterSequence::factorial(4);
    std::vector<Rational> pt3{Rational(5), Rational(3), Rational(2)};
    CHECK(nimmo_eval(StrictPartition({2, 1}), fact, pt3) ==
          p_multiparam(StrictPartition({2, 1}), fact, 3).evaluate(pt3));
}

TEST_CASE("nimmo rejects singular points") {
    auto classical = ParameterSequence::classical(3);
    CHECK_THROWS_AS(nimmo_eval(StrictPartition({1}), classical,
                               {Rational(1), Rational(1)}),
                    SingularPointError);
    CHECK_THROWS_AS(nimmo_eval(StrictPartition({1}), classical,
                               {Rational(1), Rational(-1)}),
                    SingularPointError);
    CHECK_THROWS_AS(nimmo_eval(StrictPartition({1}), classical,
                               {Rational(0), Rational(2)}),
                    SingularPointError);
}

TEST_CASE("nimmo matches the tableau path at random admissible points") {
    Rng rng(405);
    std::vector<ParameterSequence> batteries = {
        ParameterSequence::classical(6), ParameterSequence::factorial(6),
        schurq::testing::random_parameters(rng, 6)};
    for (int w = 0; w <= 4; ++w)
        for (const auto& lam : strict_partitions_of(w))
            for (const auto& a : batteries)
                for (int n = lam.length(); n <= 3; ++n) {
                    auto poly = p_multiparam(lam, a, n);
                    for (int t = 0; t < 3; ++t) {
                        auto pt = schurq::testing::random_admissible_point(rng, n);
                        CHECK(nimmo_eval(lam, a, pt) == poly.evaluate(pt));
                    }
                }
}

TEST_CASE("giambelli pfaffian") {
    Rng rng(406);
    auto params = schurq::testing::random_parameters(rng, 6);

    // Two rows: the 2x2 pfaffian is the entry itself.
    CHECK(giambelli_q(StrictPartition({3, 1}), params, 2) ==
          q_multiparam(StrictPartition({3, 1}), params, 2));
    // Padded odd-length case.
    CHECK(giambelli_q(StrictPartition({3, 2, 1}), params, 3) ==
          q_multiparam(StrictPartition({3, 2, 1}), params, 3));
    CHECK(giambelli_q(StrictPartition({2, 1}), ParameterSequence::classical(3), 3) ==
          q_classical(StrictPartition({2, 1}), 3));
    CHECK(giambelli_q(StrictPartition(), params, 2) ==
          MultiPoly::constant(2, Rational(1)));
}
