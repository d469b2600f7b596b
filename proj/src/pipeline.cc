// diarmap/src/pipeline.cc
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

#include "diarmap/pipeline.h"

#include <chrono>

#include "diarmap/error.h"

namespace diarmap {

std::string to_string(Method method) {
  switch (method) {
    case Method::kGreedy:
      return "greedy";
    case Method::kPairwise:
      return "pairwise";
    case Method::kRls:
      return "rls";
  }
  return "?";
}

Method parse_method(const std::string &name) {
  if (name == "greedy") return Method::kGreedy;
  if (name == "pairwise") return Method::kPairwise;
  if (name == "rls") return Method::kRls;
  throw Error("unknown mapping method '" + name + "'");
}

CombineResult combine_recording(const std::vector<Hypothesis> &hypotheses,
                                const CombineOptions &options) {
  const MappingGraph graph = build_graph(hypotheses, options.weight_mode);
  CombineResult result;

  const auto start = std::chrono::steady_clock::now();
  switch (options.method) {
    case Method::kGreedy:
      result.partition = map_labels_greedy(graph, {options.clique_budget});
      break;
    case Method::kPairwise:
      result.partition =
          map_labels_pairwise(hypotheses, {options.weight_mode, options.sort_by_der});
      break;
    case Method::kRls: {
      RlsConfig config;
      config.epochs = options.rls_epochs;
      config.iterations = options.rls_iterations;
      config.seed = options.seed;
      config.patience = options.patience;
      result.partition = map_labels_rls(graph, config);
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  result.mapping_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  result.weight = partition_weight(graph, result.partition);
  result.graph_weight = graph.total_weight();

  auto relabeled = apply_partition(hypotheses, result.partition);
  if (options.rank_weighting && options.sort_by_der) {
    std::vector<Hypothesis> ordered;
    for (std::size_t k : sort_by_avg_der(hypotheses)) ordered.push_back(relabeled[k]);
    relabeled = std::move(ordered);
  }
  result.combined = combine(relabeled, {options.rank_weighting});
  return result;
}

}  // namespace diarmap
