// diarmap/include/diarmap/mapping.h
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

// Label mapping algorithms over the K-partite speaker graph:
//
//   * greedy maximal-clique selection (exponential in K),
//   * pairwise Hungarian mapping with a merging running hypothesis
//     (linear in K, at least w(G)/C on complete graphs),
//   * randomized local search with edge-weighted vertex swaps,
//   * an exhaustive oracle for small instances.
//
// Every algorithm returns a canonical orthogonal Partition of the graph it
// was given; algorithms that need a complete graph pad internally and drop
// the dummy vertices from their result.

#ifndef DIARMAP_MAPPING_H_
#define DIARMAP_MAPPING_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diarmap/graph.h"
#include "diarmap/rttm.h"

namespace diarmap {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
// Cumulative cliques the greedy mapper may enumerate over all its rounds.
// With 4 speakers per hypothesis this admits 10 hypotheses (~1.1M cliques)
// and refuses 11 (~4.4M).
inline constexpr std::uint64_t kDefaultCliqueBudget = 2'000'000;
inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000;

// Clique index of every vertex, indexed [part][member].
struct GlobalLabelMap {
  std::vector<std::vector<std::size_t>> clique_of;

  // Groups vertices by clique index; the result is canonical.
  Partition to_partition() const;
};

GlobalLabelMap to_label_map(const MappingGraph &graph, const Partition &partition);

// Number of maximal cliques: the product of the non-empty part sizes,
// saturating at UINT64_MAX.
std::uint64_t count_maximal_cliques(const MappingGraph &graph);

using CliqueVisitor = std::function<void(std::span<const VertexId>)>;

// Visits every maximal clique (one vertex from each non-empty part) in
// lexicographic order and returns how many were visited. Throws
// BudgetExceeded before visiting anything if the count exceeds `cap`.
std::uint64_t enumerate_maximal_cliques(const MappingGraph &graph,
                                        const CliqueVisitor &visit,
                                        std::uint64_t cap = kDefaultEnumerationCap);

struct GreedyOptions {
  std::uint64_t clique_budget = kDefaultCliqueBudget;
};

// Repeatedly enumerates the maximal cliques of the remaining vertices, keeps
// the heaviest (first in enumeration order on ties) and removes it.
// Throws BudgetExceeded when the cumulative enumeration would pass the
// budget. `enumerated`, when given, receives the number of cliques scored.
Partition map_labels_greedy(const MappingGraph &graph, const GreedyOptions &options = {},
                            std::uint64_t *enumerated = nullptr);

// Pairwise mapping on a bare graph. Part 0 seeds C running cliques; each
// following part is matched to them by hungarian_assign on the running
// clique weights, and matched vertices' edge weights are added into their
// clique.
Partition map_labels_pairwise(const MappingGraph &graph);

struct PairwiseOptions {
  WeightMode weight_mode = WeightMode::kRelative;
  bool sort_by_der = false;
};

// Pairwise mapping on hypotheses. The running hypothesis starts as the first
// (after optional sorting) input; each next hypothesis is matched against
// its current labels with weights recomputed from the merged turns, then
// merged in. Vertex ids refer to build_graph(hypotheses) in input order.
Partition map_labels_pairwise(const std::vector<Hypothesis> &hypotheses,
                              const PairwiseOptions &options = {});

// Output label of every speaker of each side. A speaker missing from its
// side's map keeps its own label. Identical output labels across the two
// sides are merged.
struct LocalLabelMap {
  std::map<std::string, std::string> first;
  std::map<std::string, std::string> second;
};

// Relabels both hypotheses and unions the turns of equal labels. Throws
// Error if two speakers of the same side collide on one label or the
// recordings differ.
Hypothesis merge_hypotheses(const Hypothesis &first, const Hypothesis &second,
                            const LocalLabelMap &mapping);

// Orders hypotheses by their mean DER against every other hypothesis taken
// as reference, lowest first; ties keep input order. References without
// speech are skipped.
std::vector<std::size_t> sort_by_avg_der(const std::vector<Hypothesis> &hypotheses);

struct RlsConfig {
  std::size_t epochs = 1000;                // N
  std::optional<std::size_t> iterations;    // M, defaults to 4·C·K
  std::uint64_t seed = 0;
  std::size_t patience = 100;               // epochs without improvement

  // Throws Error unless every count is >= 1.
  void validate() const;
  std::size_t iterations_for(const MappingGraph &graph) const;
};

struct RlsResult {
  Partition partition;
  double weight = 0.0;
  std::size_t epochs_run = 0;
  // w of the partition each epoch ended with.
  std::vector<double> epoch_weights;
};

// Randomized local search. Each epoch draws a uniform random orthogonal
// partition, then for M iterations samples a cross-clique edge with
// probability proportional to its weight and, each with probability 1/2,
// moves one endpoint into the other endpoint's clique by swapping it with
// its part-mate there. The heaviest end-of-epoch partition is kept. Epoch n
// draws from its own stream derived from (seed, n), so a longer run extends
// a shorter one.
RlsResult run_rls(const MappingGraph &graph, const RlsConfig &config = {});
Partition map_labels_rls(const MappingGraph &graph, const RlsConfig &config = {});

struct OptimumResult {
  Partition partition;
  double weight = 0.0;
};

// Number of orthogonal covering partitions of the padded graph, (C!)^(K-1),
// saturating at UINT64_MAX.
std::uint64_t count_partitions(const MappingGraph &graph);

// Exhaustive search. Throws TooLarge when count_partitions exceeds `cap`.
OptimumResult brute_force_optimum(const MappingGraph &graph,
                                  std::uint64_t cap = kDefaultBruteForceCap);

}  // namespace diarmap

#endif  // DIARMAP_MAPPING_H_
