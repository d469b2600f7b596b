// diarmap/src/hungarian.cc
//
// Copyright (c) 2026 The diarmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diarmap/hungarian.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diarmap/error.h"

namespace diarmap {

WeightMatrix::WeightMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_) throw Error("ragged weight matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

std::size_t Assignment::num_pairs() const {
  return static_cast<std::size_t>(
      std::count_if(row_to_col.begin(), row_to_col.end(),
                    [](const auto &c) { return c.has_value(); }));
}

namespace {

// Minimum-cost assignment on an n×m cost matrix with n <= m, using the
// shortest augmenting path formulation with potentials. Returns the column
// of every row.
std::vector<std::size_t> solve_min_cost(const std::vector<double> &cost, std::size_t n,
                                        std::size_t m) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      double delta = inf;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        double cur = cost[(i0 - 1) * m + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

// Optimal total over the rows/cols flagged as active.
double best_total(const WeightMatrix &w, const std::vector<char> &row_active,
                  const std::vector<char> &col_active) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < w.rows(); ++r) {
    if (row_active[r]) rows.push_back(r);
  }
  for (std::size_t c = 0; c < w.cols(); ++c) {
    if (col_active[c]) cols.push_back(c);
  }
  if (rows.empty() || cols.empty()) return 0.0;
  const bool transpose = rows.size() > cols.size();
  const auto &small = transpose ? cols : rows;
  const auto &large = transpose ? rows : cols;
  const std::size_t n = small.size(), m = large.size();
  std::vector<double> cost(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cost[i * m + j] = transpose ? -w(large[j], small[i]) : -w(small[i], large[j]);
    }
  }
  auto match = solve_min_cost(cost, n, m);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += -cost[i * m + match[i]];
  return total;
}

void check_matrix(const WeightMatrix &w) {
  if (w.rows() == 0 || w.cols() == 0) throw Error("empty weight matrix");
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) {
      if (!std::isfinite(w(r, c))) throw Error("non-finite weight in matrix");
    }
  }
}

}  // namespace

double max_assignment_weight(const WeightMatrix &weights) {
  check_matrix(weights);
  return best_total(weights, std::vector<char>(weights.rows(), 1),
                    std::vector<char>(weights.cols(), 1));
}

Assignment hungarian_assign(const WeightMatrix &weights) {
  check_matrix(weights);
  const std::size_t n = weights.rows(), m = weights.cols();
  std::vector<char> row_active(n, 1), col_active(m, 1);
  const double optimum = best_total(weights, row_active, col_active);
  const double tol = 1e-9 * std::max(1.0, std::abs(optimum));
  const std::size_t target_pairs = std::min(n, m);

  // Fix rows in order, each to the smallest choice that still admits an
  // optimal completion.
  Assignment out;
  out.row_to_col.assign(n, std::nullopt);
  double fixed = 0.0;
  std::size_t pairs = 0;
  for (std::size_t r = 0; r < n; ++r) {
    row_active[r] = 0;
    std::size_t cols_left = 0;
    for (char c : col_active) cols_left += c != 0;
    bool placed = false;
    for (std::size_t c = 0; c < m && !placed; ++c) {
      if (!col_active[c]) continue;
      col_active[c] = 0;
      double completion = best_total(weights, row_active, col_active);
      if (fixed + weights(r, c) + completion >= optimum - tol) {
        out.row_to_col[r] = c;
        fixed += weights(r, c);
        ++pairs;
        placed = true;
      } else {
        col_active[c] = 1;
      }
    }
    if (!placed) {
      // Leaving the row unmatched must keep min(n, m) pairs reachable.
      const std::size_t rows_left = n - r - 1;
      if (pairs + std::min(rows_left, cols_left) < target_pairs) {
        throw Error("assignment tie-break failed to reach the optimum");
      }
    }
  }
  out.total = fixed;
  return out;
}

}  // namespace diarmap
