// diarmap/include/diarmap/voting.h
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

#ifndef DIARMAP_VOTING_H_
#define DIARMAP_VOTING_H_

#include <string>
#include <vector>

#include "diarmap/graph.h"
#include "diarmap/rttm.h"

namespace diarmap {

struct VoteConfig {
  // Weight hypothesis k (0-based, in the order given) by 1/(k+1), normalized.
  // Otherwise every hypothesis weighs 1/K.
  bool rank_weighting = false;
};

// Label given to clique c by apply_partition.
std::string clique_label(std::size_t c);

// Shorter labels first, then lexicographic; numeric labels sort by value.
bool label_order(const std::string &a, const std::string &b);

// Renames speaker i of hypothesis k to clique_label(c) where (k, i) ∈ V_c.
// Vertex ids follow build_graph(hypotheses); dummy members are ignored.
// Throws Error if a speaker has no clique.
std::vector<Hypothesis> apply_partition(const std::vector<Hypothesis> &hypotheses,
                                        const Partition &partition);

std::vector<double> hypothesis_weights(std::size_t count, const VoteConfig &config);

// Region-wise voting over relabeled hypotheses. The timeline is cut at every
// turn boundary; in each region the speaker count is the weighted mean of
// the per-hypothesis active counts, rounded half up, and that many labels
// with the highest summed weight are emitted (ties by label_order).
Hypothesis combine(const std::vector<Hypothesis> &relabeled, const VoteConfig &config = {});

}  // namespace diarmap

#endif  // DIARMAP_VOTING_H_
