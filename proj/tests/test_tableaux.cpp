#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "schurq/linalg.hpp"
#include "schurq/tableaux.hpp"
#include "test_support.hpp"

using namespace schurq;
using schurq::testing::Rng;

namespace {

// Independent oracle: enumerate every assignment of letters to cells and
// filter by the tableau conditions checked on the raw cell grid.
std::set<std::vector<int>> tableaux_by_bruteforce(const StrictPartition& shape, int n) {
    auto cells = shifted_cells(shape);
    std::set<std::vector<int>> valid;
    std::vector<int> ranks(cells.size(), 1);
    auto is_valid = [&]() {
        std::map<std::pair<int, int>, int> at;
        for (std::size_t t = 0; t < cells.size(); ++t) at[{cells[t].row, cells[t].col}] = ranks[t];
        for (std::size_t t = 0; t < cells.size(); ++t) {
            auto right = at.find({cells[t].row, cells[t].col + 1});
            if (right != at.end() && ranks[t] > right->second) return false;
            auto down = at.find({cells[t].row + 1, cells[t].col});
            if (down != at.end() && ranks[t] > down->second) return false;
        }
        // rank 2k is unmarked k, rank 2k-1 is marked k
        for (int k = 1; k <= n; ++k) {
            std::map<int, int> unmarked_per_col, marked_per_row;
            for (std::size_t t = 0; t < cells.size(); ++t) {
                if (ranks[t] == 2 * k && ++unmarked_per_col[cells[t].col] > 1) return false;
                if (ranks[t] == 2 * k - 1 && ++marked_per_row[cells[t].row] > 1) return false;
            }
        }
        return true;
    };
    if (cells.empty()) {
        valid.insert({});
        return valid;
    }
    for (;;) {
        if (is_valid()) valid.insert(ranks);
        std::size_t t = 0;
        while (t < ranks.size() && ranks[t] == 2 * n) ranks[t++] = 1;
        if (t == ranks.size()) break;
        ++ranks[t];
    }
    return valid;
}

std::set<std::vector<int>> tableaux_by_enumerator(const StrictPartition& shape, int n) {
    std::set<std::vector<int>> out;
    enumerate_marked(shape, n, [&](const MarkedShiftedTableau& t) {
        std::vector<int> ranks;
        for (const auto& entry : t.entries) ranks.push_back(entry.rank());
        bool inserted = out.insert(ranks).second;
        REQUIRE(inserted);  // no tableau may be produced twice
    });
    return out;
}

std::size_t rank_of(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("marked enumeration counts on small shapes") {
    CHECK(tableaux_by_enumerator(StrictPartition({1}), 1).size() == 2);  // 1', 1
    CHECK(tableaux_by_enumerator(StrictPartition({2}), 1).size() == 2);  // 1'1, 11
    CHECK(tableaux_by_enumerator(StrictPartition({1}), 0).empty());
    CHECK(tableaux_by_enumerator(StrictPartition({2, 1}), 1).empty());
}

TEST_CASE("marked enumeration matches brute force") {
    std::vector<std::pair<StrictPartition, int>> cases = {
        {StrictPartition({1}), 2},  {StrictPartition({2}), 2},  {StrictPartition({3}), 2},
        {StrictPartition({2, 1}), 2}, {StrictPartition({3, 1}), 2}, {StrictPartition({2, 1}), 3},
        {StrictPartition({3, 2}), 2},
    };
    for (const auto& [shape, n] : cases) {
        auto oracle = tableaux_by_bruteforce(shape, n);
        auto got = tableaux_by_enumerator(shape, n);
        CHECK(got == oracle);
    }
}

TEST_CASE("one-box and one-row polynomials") {
    Rng rng(301);
    auto params = schurq::testing::random_parameters(rng, 4);
    auto x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    CHECK(q_multiparam(StrictPartition({1}), params, 2) == (x1 + x2) * Rational(2));
    CHECK(p_multiparam(StrictPartition({1}), params, 2) == x1 + x2);

    auto x = MultiPoly::variable(1, 0);
    CHECK(q_multiparam(StrictPartition({2}), params, 1) ==
          x * (x - params.at(2)) * Rational(2));
    CHECK(q_multiparam(StrictPartition({2}), params, 1) ==
          generalized_power(x, 2, params) * Rational(2));
}

TEST_CASE("guards and conventions") {
    auto params = ParameterSequence::factorial(4);
    CHECK(q_multiparam(StrictPartition({2, 1}), params, 1).is_zero());  // length > n
    CHECK(p_multiparam(StrictPartition(), params, 3) ==
          MultiPoly::constant(3, Rational(1)));
    auto x = MultiPoly::variable(1, 0);
    CHECK(p_factorial(StrictPartition({2}), 1) == x * (x - Rational(1)));
    CHECK(q_factorial(StrictPartition({1}), 2) == q_classical(StrictPartition({1}), 2));
    CHECK_THROWS(q_multiparam(StrictPartition({5}), ParameterSequence::factorial(3), 2));
}

TEST_CASE("classical specialization is the top homogeneous part") {
    Rng rng(302);
    for (int w = 1; w <= 5; ++w)
        for (const auto& lam : strict_partitions_of(w)) {
            auto params = schurq::testing::random_parameters(rng, w + 1);
            int n = std::min(4, lam.length() + 1);
            auto q = q_multiparam(lam, params, n);
            CHECK(q.top_homogeneous() == q_classical(lam, n));
        }
}

TEST_CASE("outputs are supersymmetric and stable under x_{n+1} = 0") {
    Rng rng(303);
    for (int w = 1; w <= 5; ++w)
        for (const auto& lam : strict_partitions_of(w)) {
            auto params = schurq::testing::random_parameters(rng, w + 1);
            for (int n = lam.length(); n <= 3; ++n) {
                auto q = q_multiparam(lam, params, n);
                CHECK(q.is_supersymmetric());
                CHECK(q_multiparam(lam, params, n + 1).restrict_last_var() == q);
            }
        }
}

TEST_CASE("unmarked chain formula agrees with the marked formula") {
    Rng rng(304);
    auto x = MultiPoly::variable(1, 0);
    auto params = schurq::testing::random_parameters(rng, 6);
    CHECK(q_via_unmarked(StrictPartition({1}), params, 1) == x * Rational(2));
    CHECK(q_via_unmarked(StrictPartition({2}), params, 1) ==
          q_multiparam(StrictPartition({2}), params, 1));
    CHECK(q_via_unmarked(StrictPartition({2, 1}), params, 2) ==
          q_multiparam(StrictPartition({2, 1}), params, 2));

    std::vector<ParameterSequence> batteries = {
        ParameterSequence::classical(7), ParameterSequence::factorial(7),
        schurq::testing::random_parameters(rng, 7)};
    for (int w = 0; w <= 5; ++w)
        for (const auto& lam : strict_partitions_of(w))
            for (const auto& a : batteries)
                for (int n = 0; n <= 3; ++n)
                    CHECK(q_via_unmarked(lam, a, n) == q_multiparam(lam, a, n));
}

TEST_CASE("multiparameter P span has full rank at small weight") {
    // Coefficient vectors of {P_{lambda;a} : |lambda| <= 6} in the monomial
    // basis are linearly independent (desk-scale basis property).
    Rng rng(305);
    auto params = schurq::testing::random_parameters(rng, 7);
    auto shapes = strict_partitions_upto(6);
    std::vector<MultiPoly> polys;
    for (const auto& lam : shapes) polys.push_back(p_multiparam(lam, params, 3));

    std::map<Monomial, std::size_t, GradedLexLess> columns;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms())
            columns.emplace(m, columns.size());
    std::vector<std::vector<Rational>> matrix(
        polys.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [m, c] : polys[r].terms()) matrix[r][columns.at(m)] = c;
    CHECK(rank_of(matrix) == shapes.size());
}
