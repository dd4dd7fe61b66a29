#pragma once

#include <optional>
#include <vector>

#include "schurq/parameters.hpp"
#include "schurq/partitions.hpp"
#include "schurq/polynomial.hpp"

namespace schurq {

/// Side shared by two adjacent cells of a skew shape. Midpoint coordinates
/// use unit squares centered at the cell coordinates, so exactly one of
/// (eps, delta) is a half-integer; they are stored doubled to stay integral.
struct InteriorSide {
    enum class Orientation { horizontal, vertical };  // direction of the cell pair

    Orientation orientation;
    int eps2;    // 2 * row coordinate of the midpoint
    int delta2;  // 2 * column coordinate of the midpoint

    /// Index of the parameter attached to this side. For a horizontal pair
    /// (i,j),(i,j+1) this is content(i,j+1)+1; for a vertical pair
    /// (i,j),(i+1,j) it is content(i,j)+1. Both equal delta - eps + 3/2.
    int param_index() const { return (delta2 - eps2 + 3) / 2; }
};

/// One border strip: cells whose contents form a maximal integer interval.
struct BorderStrip {
    std::vector<Cell> cells;
    std::vector<InteriorSide> interior_sides;
};

/// Splits a 2x2-free skew shifted shape into its minimal border strips
/// (grouping cells by maximal content intervals). Returns nullopt when the
/// shape has a 2x2 block.
std::optional<std::vector<BorderStrip>> border_strip_decompose(const SkewShiftedShape& shape);

/// Weight of one letter-layer of an unmarked shifted tableau:
///   f(shape; a; x) = prod over strips of 2x * prod(x + a_idx | vertical sides)
///                                          * prod(x - a_idx | horizontal sides).
/// A layer admitting no marking at all -- some cell has neighbours both to
/// the left and below, which happens exactly when the shape holds two cells
/// on the main diagonal -- has weight zero. Throws on a 2x2 block.
MultiPoly strip_factor(const SkewShiftedShape& shape, const ParameterSequence& a,
                       const MultiPoly& x);

}  // namespace schurq
