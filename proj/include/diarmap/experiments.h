// diarmap/include/diarmap/experiments.h
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

// Studies behind the `bench` subcommand and the acceptance suite, plus the
// small statistics they need.

#ifndef DIARMAP_EXPERIMENTS_H_
#define DIARMAP_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "diarmap/mapping.h"
#include "diarmap/synthetic.h"

namespace diarmap {

double median(std::vector<double> values);

// Spearman rank correlation with average ranks for ties. NaN when either
// side is constant or the sizes differ.
double spearman(std::span<const double> x, std::span<const double> y);

// P[X >= successes] for X ~ Binomial(trials, 1/2).
double sign_test_p_value(std::size_t successes, std::size_t trials);

struct TimingPoint {
  std::size_t k = 0;
  std::string method;
  double median_ms = 0.0;
  std::uint64_t cliques = 0;  // greedy only
  bool skipped = false;       // greedy budget exceeded
};

// Times greedy and pairwise mapping on random complete graphs with
// `speakers` vertices per part for K = min_k..max_k. Each point is the
// median of `repetitions` (at least 5) timed runs after one warm-up run.
std::vector<TimingPoint> timing_study(std::size_t speakers, std::size_t min_k,
                                      std::size_t max_k, std::size_t repetitions,
                                      std::uint64_t seed,
                                      std::uint64_t clique_budget = kDefaultCliqueBudget);

struct ApproxRow {
  std::size_t trial = 0;
  double w_pairwise = 0.0;
  double w_rls = 0.0;
  double w_greedy = 0.0;
  double w_opt = 0.0;
  double w_graph = 0.0;
};

// Random complete graphs solved by every mapper and the exhaustive oracle.
// Instances over the oracle cap are skipped with a warning on `log`.
std::vector<ApproxRow> approx_study(std::size_t speakers, std::size_t k,
                                    std::size_t trials, std::uint64_t seed,
                                    std::ostream *log = nullptr);

struct WeightDerRow {
  std::size_t trial = 0;
  double weight = 0.0;
  double der = 0.0;
};

// One synthetic reference; every trial perturbs it with a random noise level
// into a fresh K-hypothesis ensemble, combines it with pairwise mapping and
// scores the result against the reference.
std::vector<WeightDerRow> weight_vs_der_study(std::size_t speakers, std::size_t k,
                                              std::size_t trials, std::uint64_t seed);

}  // namespace diarmap

#endif  // DIARMAP_EXPERIMENTS_H_
