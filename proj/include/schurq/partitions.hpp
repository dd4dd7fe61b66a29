#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schurq {

/// Strictly decreasing positive parts; the empty partition is allowed.
class StrictPartition {
public:
    StrictPartition() = default;
    /// Validates strict decrease; trailing zeros are dropped.
    explicit StrictPartition(std::vector<int> parts);

    static bool is_strict(const std::vector<int>& parts);

    /// Text form "3,2,1"; "-" for the empty partition.
    static StrictPartition parse(std::string_view text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    /// 1-based part access; parts beyond the length read as 0.
    int part(int i) const;
    int max_part() const { return parts_.empty() ? 0 : parts_[0]; }

    bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
    bool operator!=(const StrictPartition& o) const { return parts_ != o.parts_; }
    bool operator<(const StrictPartition& o) const;  // weight, then decreasing-lex rank

private:
    std::vector<int> parts_;
};

/// Cell of a (shifted) diagram, 1-based: row i, column j with i <= j.
struct Cell {
    int row;
    int col;
    int content() const { return col - row; }
    bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
    bool operator<(const Cell& o) const {
        return std::pair(row, col) < std::pair(o.row, o.col);
    }
};

/// Cells of the shifted diagram: row i covers columns i .. lambda_i + i - 1.
std::vector<Cell> shifted_cells(const StrictPartition& lambda);
bool in_shifted_diagram(const StrictPartition& lambda, int row, int col);

/// mu_i <= lambda_i for all i (equivalently shifted-diagram containment).
bool contains(const StrictPartition& outer, const StrictPartition& inner);
/// inner grows to outer by adding exactly one cell.
bool covers(const StrictPartition& inner, const StrictPartition& outer);
/// All strict partitions obtained from mu by adding one cell.
std::vector<StrictPartition> covers_of(const StrictPartition& mu);

/// All strict partitions of n, decreasing-lexicographic order.
std::vector<StrictPartition> strict_partitions_of(int n);
/// Concatenation of strict_partitions_of(0..n).
std::vector<StrictPartition> strict_partitions_upto(int n);
/// All strict mu with mu `contains`-below lambda, any weight.
std::vector<StrictPartition> strict_subpartitions(const StrictPartition& lambda);

/// Difference of shifted diagrams of nested strict partitions.
class SkewShiftedShape {
public:
    SkewShiftedShape(StrictPartition outer, StrictPartition inner);

    const StrictPartition& outer() const { return outer_; }
    const StrictPartition& inner() const { return inner_; }
    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains_cell(int row, int col) const;

    /// Four cells (i,j),(i,j+1),(i+1,j),(i+1,j+1) all present somewhere.
    bool has_2x2_block() const;

private:
    StrictPartition outer_;
    StrictPartition inner_;
    std::vector<Cell> cells_;
};

}  // namespace schurq
