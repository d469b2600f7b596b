// diarmap/include/diarmap/pipeline.h
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

#ifndef DIARMAP_PIPELINE_H_
#define DIARMAP_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diarmap/graph.h"
#include "diarmap/mapping.h"
#include "diarmap/rttm.h"
#include "diarmap/voting.h"

namespace diarmap {

enum class Method { kGreedy, kPairwise, kRls };

std::string to_string(Method method);
// Throws Error for unknown names.
Method parse_method(const std::string &name);

struct CombineOptions {
  Method method = Method::kPairwise;
  bool sort_by_der = true;  // pairwise only
  WeightMode weight_mode = WeightMode::kRelative;
  std::uint64_t seed = 0;  // rls only
  std::size_t rls_epochs = 1000;
  std::optional<std::size_t> rls_iterations;
  std::size_t patience = 100;
  std::uint64_t clique_budget = kDefaultCliqueBudget;  // greedy only
  bool rank_weighting = false;
};

struct CombineResult {
  Hypothesis combined;
  Partition partition;
  double weight = 0.0;        // w(Φ) on the input graph
  double graph_weight = 0.0;  // w(G)
  double mapping_ms = 0.0;    // wall time of the label mapping step
};

// build graph → map labels → relabel → vote, for one recording.
CombineResult combine_recording(const std::vector<Hypothesis> &hypotheses,
                                const CombineOptions &options = {});

}  // namespace diarmap

#endif  // DIARMAP_PIPELINE_H_
