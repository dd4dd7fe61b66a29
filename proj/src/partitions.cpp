#include "schurq/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurq {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!is_strict(parts_)) {
        std::string repr;
        for (int p : parts_) repr += std::to_string(p) + ",";
        throw std::invalid_argument("not a strict partition: " + repr);
    }
}

bool StrictPartition::is_strict(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i > 0 && parts[i - 1] <= parts[i]) return false;
    }
    return true;
}

StrictPartition StrictPartition::parse(std::string_view text) {
    if (text.empty() || text == "-") return StrictPartition();
    std::vector<int> parts;
    std::string buf(text);
    std::istringstream in(buf);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty part in partition literal");
        parts.push_back(std::stoi(token));
    }
    return StrictPartition(std::move(parts));
}

std::string StrictPartition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

int StrictPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int StrictPartition::part(int i) const {
    if (i < 1) throw std::out_of_range("part index is 1-based");
    return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

bool StrictPartition::operator<(const StrictPartition& o) const {
    if (weight() != o.weight()) return weight() < o.weight();
    return parts_ > o.parts_;  // decreasing lex within a weight class
}

std::vector<Cell> shifted_cells(const StrictPartition& lambda) {
    std::vector<Cell> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = i; j <= lambda.part(i) + i - 1; ++j) cells.push_back({i, j});
    return cells;
}

bool in_shifted_diagram(const StrictPartition& lambda, int row, int col) {
    return row >= 1 && row <= lambda.length() && col >= row &&
           col <= lambda.part(row) + row - 1;
}

bool contains(const StrictPartition& outer, const StrictPartition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool covers(const StrictPartition& inner, const StrictPartition& outer) {
    return outer.weight() == inner.weight() + 1 && contains(outer, inner);
}

std::vector<StrictPartition> covers_of(const StrictPartition& mu) {
    std::vector<StrictPartition> out;
    for (int i = 1; i <= mu.length(); ++i) {
        if (i == 1 || mu.part(i - 1) > mu.part(i) + 1) {
            auto parts = mu.parts();
            parts[static_cast<std::size_t>(i - 1)] += 1;
            out.emplace_back(std::move(parts));
        }
    }
    if (mu.empty() || mu.parts().back() > 1) {
        auto parts = mu.parts();
        parts.push_back(1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

namespace {

void strict_rec(int remaining, int max_part, std::vector<int>& prefix,
                std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // Feasibility: the largest weight below p is p-1 + p-2 + ... = p(p-1)/2.
        if (remaining - p > (p - 1) * p / 2) continue;
        prefix.push_back(p);
        strict_rec(remaining - p, p - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> strict_partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative weight");
    std::vector<StrictPartition> out;
    std::vector<int> prefix;
    strict_rec(n, n, prefix, out);
    return out;
}

std::vector<StrictPartition> strict_partitions_upto(int n) {
    std::vector<StrictPartition> out;
    for (int w = 0; w <= n; ++w) {
        auto level = strict_partitions_of(w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

namespace {

void sub_rec(const StrictPartition& lambda, int row, int bound, std::vector<int>& prefix,
             std::vector<StrictPartition>& out) {
    out.emplace_back(prefix);
    if (row > lambda.length()) return;
    int hi = std::min(lambda.part(row), bound);
    for (int p = hi; p >= 1; --p) {
        prefix.push_back(p);
        sub_rec(lambda, row + 1, p - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> strict_subpartitions(const StrictPartition& lambda) {
    // mu_i <= lambda_i row by row; each branch either stops or picks the next
    // part below both lambda's bound and the previous part.
    std::vector<StrictPartition> out;
    std::vector<int> prefix;
    sub_rec(lambda, 1, lambda.max_part(), prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

SkewShiftedShape::SkewShiftedShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw std::invalid_argument("inner partition not contained in outer");
    for (int i = 1; i <= outer_.length(); ++i) {
        int start = std::max(i, inner_.part(i) + i);
        for (int j = start; j <= outer_.part(i) + i - 1; ++j) cells_.push_back({i, j});
    }
}

bool SkewShiftedShape::contains_cell(int row, int col) const {
    return in_shifted_diagram(outer_, row, col) && !in_shifted_diagram(inner_, row, col);
}

bool SkewShiftedShape::has_2x2_block() const {
    for (const Cell& c : cells_)
        if (contains_cell(c.row, c.col + 1) && contains_cell(c.row + 1, c.col) &&
            contains_cell(c.row + 1, c.col + 1))
            return true;
    return false;
}

}  // namespace schurq
