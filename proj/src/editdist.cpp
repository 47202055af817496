#include "lexeval/editdist.hpp"

#include <algorithm>
#include <numeric>

#include "lexeval/text.hpp"

namespace lexeval {

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  // prev[j] holds D[i-1][j]; one row of length |b|+1.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t substitution = diag + (a[i - 1] != b[j - 1] ? 1 : 0);
      row[j] = std::min({up + 1, row[j - 1] + 1, substitution});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  return edit_distance(decode_utf8(a), decode_utf8(b));
}

NedRatio ned_ratio(std::u32string_view a, std::u32string_view b) {
  return {edit_distance(a, b), std::max(a.size(), b.size())};
}

NedRatio ned_ratio(std::string_view a, std::string_view b) {
  return ned_ratio(decode_utf8(a), decode_utf8(b));
}

double ned(std::u32string_view a, std::u32string_view b) { return ned_ratio(a, b).value(); }

double ned(std::string_view a, std::string_view b) { return ned_ratio(a, b).value(); }

DpTable edit_distance_table(std::u32string_view a, std::u32string_view b) {
  DpTable d(a.size() + 1, b.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) d.at(i, 0) = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d.at(0, j) = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d.at(i, j) = std::min({d.at(i - 1, j) + 1, d.at(i, j - 1) + 1,
                             d.at(i - 1, j - 1) + (a[i - 1] != b[j - 1] ? 1 : 0)});
    }
  }
  return d;
}

}  // namespace lexeval
