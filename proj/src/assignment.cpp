#include "lexeval/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lexeval {

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("CostMatrix rows must have equal length");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CostMatrix CostMatrix::transposed() const {
  CostMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

namespace {

std::string describe_invalid(std::size_t row, std::size_t col, double value) {
  std::ostringstream msg;
  msg << "cost at (" << row << ", " << col << ") is " << value
      << "; entries must be finite and non-negative";
  return msg.str();
}

}  // namespace

InvalidCost::InvalidCost(std::size_t row, std::size_t col, double value)
    : std::domain_error(describe_invalid(row, col, value)), row_(row), col_(col) {}

Assignment solve_min_assignment(const CostMatrix& costs) {
  const std::size_t rows = costs.rows();
  const std::size_t cols = costs.cols();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double x = costs(r, c);
      if (!std::isfinite(x) || x < 0) throw InvalidCost(r, c, x);
    }
  }

  Assignment result;
  if (costs.empty()) return result;

  // Square the problem with zero-cost dummies; pairs touching a dummy are
  // dropped at the end. Shortest augmenting path with row/column potentials,
  // 1-based with column 0 as the virtual source.
  const std::size_t k = std::max(rows, cols);
  auto cost = [&](std::size_t i, std::size_t j) {
    return (i <= rows && j <= cols) ? costs(i - 1, j - 1) : 0.0;
  };
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<double> u(k + 1, 0.0), v(k + 1, 0.0), min_slack(k + 1);
  std::vector<std::size_t> owner(k + 1, 0), way(k + 1, 0);
  std::vector<char> visited(k + 1);

  for (std::size_t i = 1; i <= k; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(visited.begin(), visited.end(), 0);
    do {
      visited[j0] = 1;
      const std::size_t i0 = owner[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (visited[j]) continue;
        const double slack = cost(i0, j) - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (visited[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t i = owner[j];
    if (i >= 1 && i <= rows && j <= cols) result.pairs.emplace_back(i - 1, j - 1);
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  for (const auto& [r, c] : result.pairs) result.total_cost += costs(r, c);
  return result;
}

}  // namespace lexeval
