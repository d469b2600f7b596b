// diarmap/include/diarmap/hungarian.h
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

#ifndef DIARMAP_HUNGARIAN_H_
#define DIARMAP_HUNGARIAN_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace diarmap {

// Dense row-major matrix of non-negative weights.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  WeightMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct Assignment {
  // Column matched to each row, nullopt for unmatched rows.
  std::vector<std::optional<std::size_t>> row_to_col;
  double total = 0.0;

  std::size_t num_pairs() const;
};

// Maximum-weight assignment of min(rows, cols) pairs. Among optimal
// assignments the lexicographically smallest row_to_col vector is returned,
// ordering columns ascending and "unmatched" after every column. Throws
// Error on an empty matrix or non-finite entries.
Assignment hungarian_assign(const WeightMatrix &weights);

// Optimal total only; skips the tie-break pass.
double max_assignment_weight(const WeightMatrix &weights);

}  // namespace diarmap

#endif  // DIARMAP_HUNGARIAN_H_
