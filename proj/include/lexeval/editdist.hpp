#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexeval {

// Levenshtein distance with unit insertion, deletion and substitution costs,
// computed over Unicode scalar values.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::string_view a, std::string_view b);

// Normalized edit distance as an exact ratio distance / max(|a|, |b|).
struct NedRatio {
  std::size_t distance = 0;
  std::size_t length = 0;  // 0 only when both inputs are empty

  double value() const {
    return length == 0 ? 0.0 : static_cast<double>(distance) / static_cast<double>(length);
  }
};

NedRatio ned_ratio(std::u32string_view a, std::u32string_view b);
NedRatio ned_ratio(std::string_view a, std::string_view b);

// In [0, 1]; 0 for identical strings, including two empty ones.
double ned(std::u32string_view a, std::u32string_view b);
double ned(std::string_view a, std::string_view b);

// The full (|a|+1) x (|b|+1) table. The distance functions above roll a
// single row; this exists for inspection in tests.
class DpTable {
 public:
  DpTable(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  std::size_t at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> cells_;
};

DpTable edit_distance_table(std::u32string_view a, std::u32string_view b);

}  // namespace lexeval
