#include "schurq/strips.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace schurq {

std::optional<std::vector<BorderStrip>> border_strip_decompose(const SkewShiftedShape& shape) {
    if (shape.has_2x2_block()) return std::nullopt;
    const auto& cells = shape.cells();
    if (cells.empty()) return std::vector<BorderStrip>{};

    // Group cells into maximal content intervals.
    std::map<int, std::vector<Cell>> by_content;
    for (const Cell& c : cells) by_content[c.content()].push_back(c);

    std::vector<BorderStrip> strips;
    std::optional<int> prev_content;
    for (auto& [content, group] : by_content) {
        if (!prev_content || content != *prev_content + 1) strips.emplace_back();
        auto& strip = strips.back().cells;
        strip.insert(strip.end(), group.begin(), group.end());
        prev_content = content;
    }

    for (BorderStrip& strip : strips) {
        std::sort(strip.cells.begin(), strip.cells.end());
        for (const Cell& c : strip.cells) {
            if (shape.contains_cell(c.row, c.col + 1))
                strip.interior_sides.push_back(
                    {InteriorSide::Orientation::horizontal, 2 * c.row, 2 * c.col + 1});
            if (shape.contains_cell(c.row + 1, c.col))
                strip.interior_sides.push_back(
                    {InteriorSide::Orientation::vertical, 2 * c.row + 1, 2 * c.col});
        }
    }
    return strips;
}

MultiPoly strip_factor(const SkewShiftedShape& shape, const ParameterSequence& a,
                       const MultiPoly& x) {
    if (shape.has_2x2_block())
        throw std::invalid_argument("not a horizontal-vertical strip: 2x2 block present");
    const std::size_t n_vars = x.n_vars();
    MultiPoly out = MultiPoly::constant(n_vars, Rational(1));
    // Per-cell marking rule: a cell that is not leftmost in its row must be
    // unmarked, a cell that is not lowest in its column must be marked, and a
    // cell forced both ways kills the layer.
    for (const Cell& c : shape.cells()) {
        const bool has_left = shape.contains_cell(c.row, c.col - 1);
        const bool has_below = shape.contains_cell(c.row + 1, c.col);
        a.require(c.content() + 1, "strip factor");
        if (has_left && has_below) return MultiPoly::zero(n_vars);
        if (has_left) {
            out = out * (x - a.at(c.content() + 1));
        } else if (has_below) {
            out = out * (x + a.at(c.content() + 1));
        } else {
            out = out * (x * Rational(2));
        }
    }
    return out;
}

}  // namespace schurq
