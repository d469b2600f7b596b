// diarmap/src/mapping.cc
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

#include "diarmap/mapping.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "diarmap/error.h"
#include "diarmap/hungarian.h"
#include "diarmap/random.h"
#include "diarmap/scoring.h"

namespace diarmap {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

}  // namespace

Partition GlobalLabelMap::to_partition() const {
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (std::size_t k = 0; k < clique_of.size(); ++k) {
    for (std::size_t i = 0; i < clique_of[k].size(); ++i) {
      groups[clique_of[k][i]].push_back({k, i});
    }
  }
  Partition p;
  for (auto &[_, clique] : groups) p.cliques.push_back(std::move(clique));
  return canonical(std::move(p));
}

GlobalLabelMap to_label_map(const MappingGraph &graph, const Partition &partition) {
  validate_partition(graph, partition);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  GlobalLabelMap map;
  map.clique_of.resize(graph.num_parts());
  for (std::size_t k = 0; k < graph.num_parts(); ++k) {
    map.clique_of[k].assign(graph.part_size(k), kNone);
  }
  std::size_t next = partition.cliques.size();
  for (std::size_t c = 0; c < partition.cliques.size(); ++c) {
    for (const auto &v : partition.cliques[c]) map.clique_of[v.part][v.member] = c;
  }
  // Uncovered dummies become singletons.
  for (auto &part : map.clique_of) {
    for (auto &c : part) {
      if (c == kNone) c = next++;
    }
  }
  return map;
}

// ---------------------------------------------------------------------------
// Maximal cliques and the greedy mapper.

std::uint64_t count_maximal_cliques(const MappingGraph &graph) {
  std::uint64_t count = 1;
  bool any = false;
  for (std::size_t k = 0; k < graph.num_parts(); ++k) {
    if (graph.part_size(k) == 0) continue;
    any = true;
    count = saturating_mul(count, graph.part_size(k));
  }
  return any ? count : 0;
}

std::uint64_t enumerate_maximal_cliques(const MappingGraph &graph,
                                        const CliqueVisitor &visit, std::uint64_t cap) {
  const std::uint64_t count = count_maximal_cliques(graph);
  if (count > cap) {
    throw BudgetExceeded("graph has " +
                         (count == kSaturated ? std::string("too many")
                                              : std::to_string(count)) +
                         " maximal cliques, cap is " + std::to_string(cap));
  }
  if (count == 0) return 0;

  std::vector<std::size_t> parts;
  for (std::size_t k = 0; k < graph.num_parts(); ++k) {
    if (graph.part_size(k) > 0) parts.push_back(k);
  }
  std::vector<VertexId> clique;
  for (std::size_t k : parts) clique.push_back({k, 0});
  for (std::uint64_t n = 0; n < count; ++n) {
    visit(clique);
    for (std::size_t d = clique.size(); d-- > 0;) {
      if (++clique[d].member < graph.part_size(clique[d].part)) break;
      clique[d].member = 0;
    }
  }
  return count;
}

namespace {

// Depth-first scan of the cliques formed by one remaining vertex per active
// part, tracking the partial intra-clique weight.
class HeaviestCliqueSearch {
 public:
  HeaviestCliqueSearch(const MappingGraph &graph,
                       const std::vector<std::vector<std::size_t>> &remaining)
      : graph_(graph) {
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      if (remaining[k].empty()) continue;
      auto &choices = choices_.emplace_back();
      for (std::size_t i : remaining[k]) choices.push_back({k, i});
    }
    current_.resize(choices_.size());
  }

  std::vector<VertexId> run() {
    best_weight_ = -1.0;
    visit(0, 0.0);
    return best_;
  }

 private:
  void visit(std::size_t depth, double partial) {
    if (depth == choices_.size()) {
      if (partial > best_weight_) {
        best_weight_ = partial;
        best_ = current_;
      }
      return;
    }
    for (const auto &v : choices_[depth]) {
      double added = 0.0;
      for (std::size_t d = 0; d < depth; ++d) added += graph_.weight(current_[d], v);
      current_[depth] = v;
      visit(depth + 1, partial + added);
    }
  }

  const MappingGraph &graph_;
  std::vector<std::vector<VertexId>> choices_;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
  double best_weight_ = -1.0;
};

}  // namespace

Partition map_labels_greedy(const MappingGraph &graph, const GreedyOptions &options,
                            std::uint64_t *enumerated) {
  const MappingGraph padded = pad_to_complete(graph);
  std::vector<std::vector<std::size_t>> remaining(padded.num_parts());
  for (std::size_t k = 0; k < padded.num_parts(); ++k) {
    remaining[k].resize(padded.part_size(k));
    std::iota(remaining[k].begin(), remaining[k].end(), std::size_t{0});
  }

  std::uint64_t used = 0;
  Partition result;
  while (true) {
    std::uint64_t count = 1;
    bool any = false;
    for (const auto &part : remaining) {
      if (part.empty()) continue;
      any = true;
      count = saturating_mul(count, part.size());
    }
    if (!any) break;
    if (count > options.clique_budget || used + count > options.clique_budget) {
      throw BudgetExceeded("greedy mapping needs more than " +
                           std::to_string(options.clique_budget) +
                           " maximal cliques");
    }
    used += count;

    auto clique = HeaviestCliqueSearch(padded, remaining).run();
    for (const auto &v : clique) std::erase(remaining[v.part], v.member);
    result.cliques.push_back(std::move(clique));
  }
  if (enumerated) *enumerated = used;
  return canonical(restrict_to(graph, result));
}

// ---------------------------------------------------------------------------
// Pairwise mapping.

Partition map_labels_pairwise(const MappingGraph &graph) {
  const MappingGraph padded = pad_to_complete(graph);
  const std::size_t parts = padded.num_parts();
  if (parts == 0) return {};
  const std::size_t c_max = padded.max_part_size();
  const std::size_t n = padded.num_vertices();
  const auto vertices = padded.vertices();

  GlobalLabelMap map;
  map.clique_of.assign(parts, std::vector<std::size_t>(c_max, 0));
  // Running weight from each clique to every vertex not yet placed.
  std::vector<std::vector<double>> running(c_max, std::vector<double>(n, 0.0));
  for (std::size_t c = 0; c < c_max; ++c) {
    map.clique_of[0][c] = c;
    for (const auto &v : vertices) {
      if (v.part > 0) running[c][padded.index(v)] = padded.weight({0, c}, v);
    }
  }

  for (std::size_t k = 1; k < parts; ++k) {
    WeightMatrix m(c_max, c_max);
    for (std::size_t c = 0; c < c_max; ++c) {
      for (std::size_t j = 0; j < c_max; ++j) m(c, j) = running[c][padded.index({k, j})];
    }
    const auto assignment = hungarian_assign(m);
    for (std::size_t c = 0; c < c_max; ++c) {
      const std::size_t j = *assignment.row_to_col[c];
      map.clique_of[k][j] = c;
      for (const auto &v : vertices) {
        if (v.part > k) running[c][padded.index(v)] += padded.weight({k, j}, v);
      }
    }
  }
  return canonical(restrict_to(graph, map.to_partition()));
}

Hypothesis merge_hypotheses(const Hypothesis &first, const Hypothesis &second,
                            const LocalLabelMap &mapping) {
  if (!first.empty() && !second.empty() &&
      first.recording_id() != second.recording_id()) {
    throw Error("cannot merge recordings '" + first.recording_id() + "' and '" +
                second.recording_id() + "'");
  }
  Hypothesis out(first.empty() && !second.empty() ? second.recording_id()
                                                  : first.recording_id());
  auto relabel = [&out](const Hypothesis &h, const std::map<std::string, std::string> &m,
                        const char *side) {
    std::set<std::string> used;
    for (const auto &[speaker, set] : h.activities()) {
      auto it = m.find(speaker);
      const std::string &label = it == m.end() ? speaker : it->second;
      if (!used.insert(label).second) {
        throw Error(std::string("two speakers of the ") + side +
                    " hypothesis map to label '" + label + "'");
      }
      out.add_activity(label, set);
    }
  };
  relabel(first, mapping.first, "first");
  relabel(second, mapping.second, "second");
  return out;
}

std::vector<std::size_t> sort_by_avg_der(const std::vector<Hypothesis> &hypotheses) {
  const std::size_t k = hypotheses.size();
  std::vector<double> mean(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    double sum = 0.0;
    std::size_t terms = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || hypotheses[j].total_speaker_time() == 0) continue;
      sum += compute_der(hypotheses[j], hypotheses[i]).der;
      ++terms;
    }
    mean[i] = terms ? sum / static_cast<double>(terms) : 0.0;
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&mean](std::size_t a, std::size_t b) { return mean[a] < mean[b]; });
  return order;
}

Partition map_labels_pairwise(const std::vector<Hypothesis> &hypotheses,
                              const PairwiseOptions &options) {
  if (hypotheses.size() < 2) throw Error("pairwise mapping needs >= 2 hypotheses");
  for (std::size_t k = 0; k < hypotheses.size(); ++k) {
    if (hypotheses[k].recording_id() != hypotheses[0].recording_id()) {
      throw Error("hypotheses are for different recordings");
    }
    if (hypotheses[k].num_speakers() == 0) {
      throw Error("hypothesis " + std::to_string(k) + " has no speakers");
    }
  }

  std::vector<std::size_t> order(hypotheses.size());
  if (options.sort_by_der) {
    order = sort_by_avg_der(hypotheses);
  } else {
    std::iota(order.begin(), order.end(), std::size_t{0});
  }

  auto clique_label = [](std::size_t c) { return "#" + std::to_string(c); };

  GlobalLabelMap map;
  map.clique_of.resize(hypotheses.size());
  for (std::size_t k = 0; k < hypotheses.size(); ++k) {
    map.clique_of[k].assign(hypotheses[k].num_speakers(), 0);
  }

  const Hypothesis &anchor = hypotheses[order[0]];
  const auto anchor_speakers = anchor.speakers();
  LocalLabelMap initial;
  for (std::size_t i = 0; i < anchor_speakers.size(); ++i) {
    initial.first[anchor_speakers[i]] = clique_label(i);
    map.clique_of[order[0]][i] = i;
  }
  Hypothesis running = merge_hypotheses(anchor, Hypothesis(anchor.recording_id()), initial);
  std::size_t num_cliques = anchor_speakers.size();

  for (std::size_t step = 1; step < order.size(); ++step) {
    const std::size_t k = order[step];
    const Hypothesis &next = hypotheses[k];
    const auto speakers = next.speakers();

    WeightMatrix m(num_cliques, speakers.size());
    for (std::size_t c = 0; c < num_cliques; ++c) {
      const auto &merged = running.activity(clique_label(c));
      for (std::size_t j = 0; j < speakers.size(); ++j) {
        m(c, j) = overlap_weight(merged, next.activity(speakers[j]), options.weight_mode);
      }
    }
    const auto assignment = hungarian_assign(m);

    LocalLabelMap local;
    std::vector<char> matched(speakers.size(), 0);
    for (std::size_t c = 0; c < num_cliques; ++c) {
      if (!assignment.row_to_col[c]) continue;
      const std::size_t j = *assignment.row_to_col[c];
      matched[j] = 1;
      local.second[speakers[j]] = clique_label(c);
      map.clique_of[k][j] = c;
    }
    for (std::size_t j = 0; j < speakers.size(); ++j) {
      if (matched[j]) continue;
      const std::size_t c = num_cliques++;
      local.second[speakers[j]] = clique_label(c);
      map.clique_of[k][j] = c;
    }
    running = merge_hypotheses(running, next, local);
  }
  return map.to_partition();
}

// ---------------------------------------------------------------------------
// Randomized local search.

void RlsConfig::validate() const {
  if (epochs == 0) throw Error("RLS needs at least one epoch");
  if (patience == 0) throw Error("RLS patience must be positive");
  if (iterations && *iterations == 0) throw Error("RLS needs at least one iteration");
}

std::size_t RlsConfig::iterations_for(const MappingGraph &graph) const {
  if (iterations) return *iterations;
  return std::max<std::size_t>(1, 4 * graph.max_part_size() * graph.num_parts());
}

namespace {

struct IndexedEdge {
  std::size_t a;
  std::size_t b;
  double weight;
};

}  // namespace

RlsResult run_rls(const MappingGraph &graph, const RlsConfig &config) {
  config.validate();
  RlsResult result;
  const MappingGraph padded = pad_to_complete(graph);
  const std::size_t parts = padded.num_parts();
  const std::size_t c_max = padded.max_part_size();
  const std::size_t n = padded.num_vertices();
  if (n == 0) return result;
  const std::size_t iterations = config.iterations_for(padded);

  const auto vertices = padded.vertices();
  std::vector<IndexedEdge> edges;  // only edges that can be sampled
  for (const auto &e : all_edges(padded)) {
    if (e.weight > 0.0) edges.push_back({padded.index(e.u), padded.index(e.v), e.weight});
  }

  // slot[v]: clique of vertex v; holder[c * parts + k]: vertex of part k in c.
  std::vector<std::size_t> slot(n), holder(c_max * parts);
  auto move_into = [&](std::size_t x, std::size_t target) {
    const std::size_t part = vertices[x].part;
    const std::size_t from = slot[x];
    if (from == target) return;
    const std::size_t y = holder[target * parts + part];
    slot[x] = target;
    slot[y] = from;
    holder[target * parts + part] = x;
    holder[from * parts + part] = y;
  };
  auto current_partition = [&] {
    GlobalLabelMap map;
    map.clique_of.resize(parts);
    for (std::size_t k = 0; k < parts; ++k) {
      for (std::size_t i = 0; i < c_max; ++i) {
        map.clique_of[k].push_back(slot[padded.index({k, i})]);
      }
    }
    return canonical(restrict_to(graph, map.to_partition()));
  };

  double best = -1.0;
  std::size_t stale = 0;
  std::vector<std::size_t> perm(c_max);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    Rng rng = derive_rng(config.seed, epoch);
    for (std::size_t k = 0; k < parts; ++k) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      shuffle(std::span<std::size_t>(perm), rng);
      for (std::size_t i = 0; i < c_max; ++i) {
        const std::size_t v = padded.index({k, i});
        slot[v] = perm[i];
        holder[perm[i] * parts + k] = v;
      }
    }

    double cross = 0.0;
    for (std::size_t it = 0; it < iterations; ++it) {
      cross = 0.0;
      for (const auto &e : edges) {
        if (slot[e.a] != slot[e.b]) cross += e.weight;
      }
      if (cross <= 0.0) break;
      const double target = uniform01(rng) * cross;
      const IndexedEdge *picked = nullptr;
      double acc = 0.0;
      for (const auto &e : edges) {
        if (slot[e.a] == slot[e.b]) continue;
        picked = &e;
        acc += e.weight;
        if (acc > target) break;
      }
      const bool swap_first = coin_flip(rng);
      const bool swap_second = coin_flip(rng);
      if (swap_first) move_into(picked->a, slot[picked->b]);
      if (swap_second) move_into(picked->b, slot[picked->a]);
    }
    cross = 0.0;
    for (const auto &e : edges) {
      if (slot[e.a] != slot[e.b]) cross += e.weight;
    }

    Partition candidate = current_partition();
    const double weight = partition_weight(graph, candidate);
    result.epoch_weights.push_back(weight);
    ++result.epochs_run;
    if (weight > best) {
      best = weight;
      result.partition = std::move(candidate);
      stale = 0;
    } else {
      ++stale;
    }
    // No positive edge crosses cliques: nothing heavier exists.
    if (cross <= 0.0) break;
    if (stale >= config.patience) break;
  }
  result.weight = best;
  return result;
}

Partition map_labels_rls(const MappingGraph &graph, const RlsConfig &config) {
  return run_rls(graph, config).partition;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle.

std::uint64_t count_partitions(const MappingGraph &graph) {
  const std::size_t c_max = graph.max_part_size();
  std::uint64_t factorial = 1;
  for (std::size_t i = 2; i <= c_max; ++i) factorial = saturating_mul(factorial, i);
  std::uint64_t count = 1;
  for (std::size_t k = 1; k < graph.num_parts(); ++k) {
    count = saturating_mul(count, factorial);
  }
  return count;
}

OptimumResult brute_force_optimum(const MappingGraph &graph, std::uint64_t cap) {
  const std::uint64_t count = count_partitions(graph);
  if (count > cap) {
    throw TooLarge("exhaustive search over " +
                   (count == kSaturated ? std::string("too many")
                                        : std::to_string(count)) +
                   " partitions exceeds cap " + std::to_string(cap));
  }
  const MappingGraph padded = pad_to_complete(graph);
  const std::size_t parts = padded.num_parts();
  const std::size_t c_max = padded.max_part_size();

  // members[k][c]: member of part k placed in clique c.
  std::vector<std::vector<std::size_t>> members(parts, std::vector<std::size_t>(c_max));
  for (auto &m : members) std::iota(m.begin(), m.end(), std::size_t{0});
  auto best_members = members;
  double best = -1.0;

  auto search = [&](auto &&self, std::size_t k, double partial) -> void {
    if (k == parts) {
      if (partial > best) {
        best = partial;
        best_members = members;
      }
      return;
    }
    auto &perm = members[k];
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      double added = 0.0;
      for (std::size_t c = 0; c < c_max; ++c) {
        for (std::size_t j = 0; j < k; ++j) {
          added += padded.weight({j, members[j][c]}, {k, perm[c]});
        }
      }
      self(self, k + 1, partial + added);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  search(search, parts > 0 ? 1 : 0, 0.0);

  GlobalLabelMap map;
  map.clique_of.assign(parts, std::vector<std::size_t>(c_max, 0));
  for (std::size_t k = 0; k < parts; ++k) {
    for (std::size_t c = 0; c < c_max; ++c) map.clique_of[k][best_members[k][c]] = c;
  }
  OptimumResult out;
  out.partition = canonical(restrict_to(graph, map.to_partition()));
  out.weight = partition_weight(graph, out.partition);
  return out;
}

}  // namespace diarmap
