#include "schurq/tableaux.hpp"

#include <map>
#include <stdexcept>

#include "schurq/strips.hpp"

namespace schurq {

namespace {

struct Enumerator {
    const StrictPartition& shape;
    int n;
    std::vector<Cell> cells;
    std::vector<MarkedLetter> entries;
    // left_rank/top_rank: rank of the neighbour entry, 0 when absent.
    std::vector<int> left_of;  // index into entries, -1 when absent
    std::vector<int> top_of;
    // unmarked_in_col[col][k], marked_in_row[row][k]
    std::vector<std::vector<char>> unmarked_in_col;
    std::vector<std::vector<char>> marked_in_row;

    const std::function<void(const MarkedShiftedTableau&)>* visit = nullptr;
    // Polynomial-accumulation mode: partial products maintained per depth.
    const ParameterSequence* params = nullptr;
    std::vector<MultiPoly> partial;
    MultiPoly sum;

    Enumerator(const StrictPartition& shape_, int n_)
        : shape(shape_), n(n_), cells(shifted_cells(shape_)), sum(0) {
        entries.resize(cells.size(), {0, false});
        left_of.assign(cells.size(), -1);
        top_of.assign(cells.size(), -1);
        std::map<std::pair<int, int>, int> index;
        for (std::size_t t = 0; t < cells.size(); ++t) index[{cells[t].row, cells[t].col}] = static_cast<int>(t);
        for (std::size_t t = 0; t < cells.size(); ++t) {
            auto left = index.find({cells[t].row, cells[t].col - 1});
            if (left != index.end()) left_of[t] = left->second;
            auto top = index.find({cells[t].row - 1, cells[t].col});
            if (top != index.end()) top_of[t] = top->second;
        }
        int max_col = 0, max_row = 0;
        for (const Cell& c : cells) {
            max_col = std::max(max_col, c.col);
            max_row = std::max(max_row, c.row);
        }
        unmarked_in_col.assign(static_cast<std::size_t>(max_col) + 1,
                               std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
        marked_in_row.assign(static_cast<std::size_t>(max_row) + 1,
                             std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    }

    void run(std::size_t t) {
        if (t == cells.size()) {
            if (visit) (*visit)({shape, entries});
            if (params) sum += partial[t];
            return;
        }
        const Cell& cell = cells[t];
        int min_rank = 1;
        if (left_of[t] >= 0) min_rank = std::max(min_rank, entries[static_cast<std::size_t>(left_of[t])].rank());
        if (top_of[t] >= 0) min_rank = std::max(min_rank, entries[static_cast<std::size_t>(top_of[t])].rank());
        for (int rank = min_rank; rank <= 2 * n; ++rank) {
            MarkedLetter letter{(rank + 1) / 2, rank % 2 == 1};
            auto& col_seen = unmarked_in_col[static_cast<std::size_t>(cell.col)][static_cast<std::size_t>(letter.level)];
            auto& row_seen = marked_in_row[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(letter.level)];
            if (!letter.marked && col_seen) continue;
            if (letter.marked && row_seen) continue;
            entries[t] = letter;
            char& flag = letter.marked ? row_seen : col_seen;
            flag = 1;
            if (params) {
                const Rational& shift = params->at(cell.content() + 1);
                MultiPoly factor = MultiPoly::variable(partial[t].n_vars(), static_cast<std::size_t>(letter.level - 1));
                factor.add_term(Monomial(partial[t].n_vars()), letter.marked ? shift : -shift);
                partial[t + 1] = partial[t] * factor;
            }
            run(t + 1);
            flag = 0;
        }
    }
};

}  // namespace

void enumerate_marked(const StrictPartition& lambda, int n,
                      const std::function<void(const MarkedShiftedTableau&)>& visit) {
    if (n < 0) throw std::invalid_argument("negative letter bound");
    Enumerator e(lambda, n);
    e.visit = &visit;
    e.run(0);
}

MultiPoly q_multiparam(const StrictPartition& lambda, const ParameterSequence& a, int n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    a.require(std::max(1, lambda.max_part()), "q_multiparam");
    if (lambda.length() > n) return MultiPoly::zero(static_cast<std::size_t>(n));
    Enumerator e(lambda, n);
    e.params = &a;
    e.partial.assign(e.cells.size() + 1, MultiPoly(static_cast<std::size_t>(n)));
    e.partial[0] = MultiPoly::constant(static_cast<std::size_t>(n), Rational(1));
    e.sum = MultiPoly::zero(static_cast<std::size_t>(n));
    e.run(0);
    return e.sum;
}

MultiPoly p_multiparam(const StrictPartition& lambda, const ParameterSequence& a, int n) {
    MultiPoly q = q_multiparam(lambda, a, n);
    Rational scale(1);
    for (int i = 0; i < lambda.length(); ++i) scale *= 2;
    return q / scale;
}

MultiPoly q_classical(const StrictPartition& lambda, int n) {
    return q_multiparam(lambda, ParameterSequence::classical(std::max(1, lambda.max_part())), n);
}

MultiPoly p_classical(const StrictPartition& lambda, int n) {
    return p_multiparam(lambda, ParameterSequence::classical(std::max(1, lambda.max_part())), n);
}

MultiPoly q_factorial(const StrictPartition& lambda, int n) {
    return q_multiparam(lambda, ParameterSequence::factorial(std::max(1, lambda.max_part())), n);
}

MultiPoly p_factorial(const StrictPartition& lambda, int n) {
    return p_multiparam(lambda, ParameterSequence::factorial(std::max(1, lambda.max_part())), n);
}

MultiPoly q_via_unmarked(const StrictPartition& lambda, const ParameterSequence& a, int n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    a.require(std::max(1, lambda.max_part()), "q_via_unmarked");
    const auto n_vars = static_cast<std::size_t>(n);
    auto subs = strict_subpartitions(lambda);
    std::map<StrictPartition, MultiPoly> layer;
    layer.emplace(StrictPartition(), MultiPoly::constant(n_vars, Rational(1)));
    for (int j = 1; j <= n; ++j) {
        const MultiPoly xj = MultiPoly::variable(n_vars, static_cast<std::size_t>(j - 1));
        std::map<StrictPartition, MultiPoly> next;
        for (const auto& nu : subs) {
            MultiPoly total(n_vars);
            for (const auto& [kappa, weight] : layer) {
                if (!contains(nu, kappa)) continue;
                SkewShiftedShape step(nu, kappa);
                if (step.has_2x2_block()) continue;
                MultiPoly f = strip_factor(step, a, xj);
                if (f.is_zero()) continue;
                total += weight * f;
            }
            if (!total.is_zero()) next.emplace(nu, std::move(total));
        }
        layer = std::move(next);
    }
    auto it = layer.find(lambda);
    return it == layer.end() ? MultiPoly::zero(n_vars) : it->second;
}

}  // namespace schurq
