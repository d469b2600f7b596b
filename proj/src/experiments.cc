// diarmap/src/experiments.cc
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

#include "diarmap/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "diarmap/error.h"
#include "diarmap/pipeline.h"
#include "diarmap/scoring.h"

namespace diarmap {

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

template <typename F>
double time_ms(F &&f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (x.size() != y.size() || x.size() < 2) return nan;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return nan;
  return sxy / std::sqrt(sxx * syy);
}

double sign_test_p_value(std::size_t successes, std::size_t trials) {
  if (successes == 0) return 1.0;
  if (successes > trials) return 0.0;
  // Sum C(n, i) / 2^n in log space.
  double p = 0.0;
  const double log_half_n = -static_cast<double>(trials) * std::log(2.0);
  for (std::size_t i = successes; i <= trials; ++i) {
    const double log_choose = std::lgamma(static_cast<double>(trials) + 1.0) -
                              std::lgamma(static_cast<double>(i) + 1.0) -
                              std::lgamma(static_cast<double>(trials - i) + 1.0);
    p += std::exp(log_choose + log_half_n);
  }
  return std::min(1.0, p);
}

std::vector<TimingPoint> timing_study(std::size_t speakers, std::size_t min_k,
                                      std::size_t max_k, std::size_t repetitions,
                                      std::uint64_t seed, std::uint64_t clique_budget) {
  repetitions = std::max<std::size_t>(repetitions, 5);
  std::vector<TimingPoint> out;
  for (std::size_t k = min_k; k <= max_k; ++k) {
    Rng rng = derive_rng(seed, k);
    const MappingGraph graph = random_complete_graph(k, speakers, rng);

    TimingPoint greedy{k, "greedy"};
    try {
      map_labels_greedy(graph, {clique_budget}, &greedy.cliques);
      std::vector<double> samples;
      for (std::size_t r = 0; r < repetitions; ++r) {
        samples.push_back(time_ms([&] { map_labels_greedy(graph, {clique_budget}); }));
      }
      greedy.median_ms = median(samples);
    } catch (const BudgetExceeded &) {
      greedy.skipped = true;
      greedy.median_ms = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(greedy);

    TimingPoint pairwise{k, "pairwise"};
    map_labels_pairwise(graph);
    std::vector<double> samples;
    for (std::size_t r = 0; r < repetitions; ++r) {
      samples.push_back(time_ms([&] { map_labels_pairwise(graph); }));
    }
    pairwise.median_ms = median(samples);
    out.push_back(pairwise);
  }
  return out;
}

std::vector<ApproxRow> approx_study(std::size_t speakers, std::size_t k,
                                    std::size_t trials, std::uint64_t seed,
                                    std::ostream *log) {
  std::vector<ApproxRow> out;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, t);
    const MappingGraph graph = random_complete_graph(k, speakers, rng);
    ApproxRow row;
    row.trial = t;
    try {
      row.w_opt = brute_force_optimum(graph).weight;
    } catch (const TooLarge &e) {
      if (log) *log << "warning: trial " << t << " skipped: " << e.what() << '\n';
      continue;
    }
    RlsConfig config;
    config.seed = seed + t;
    row.w_pairwise = partition_weight(graph, map_labels_pairwise(graph));
    row.w_rls = run_rls(graph, config).weight;
    try {
      row.w_greedy = partition_weight(graph, map_labels_greedy(graph));
    } catch (const BudgetExceeded &) {
      row.w_greedy = std::numeric_limits<double>::quiet_NaN();
    }
    row.w_graph = graph.total_weight();
    out.push_back(row);
  }
  return out;
}

std::vector<WeightDerRow> weight_vs_der_study(std::size_t speakers, std::size_t k,
                                              std::size_t trials, std::uint64_t seed) {
  const Hypothesis reference = generate_reference(speakers, {}, seed);
  std::vector<WeightDerRow> out;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, 1'000'000 + t);
    const double level = uniform_real(rng, 0.25, 2.5);
    const auto hyps = perturb_reference(reference, k, NoiseParams::moderate().scaled(level),
                                        splitmix64(seed + t));
    const auto result = combine_recording(hyps);
    out.push_back({t, result.weight, compute_der(reference, result.combined).der});
  }
  return out;
}

}  // namespace diarmap
