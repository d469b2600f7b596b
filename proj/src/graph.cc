// diarmap/src/graph.cc
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

#include "diarmap/graph.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "diarmap/error.h"

namespace diarmap {

std::string to_string(VertexId v) {
  return std::to_string(v.part) + "." + std::to_string(v.member);
}

MappingGraph::MappingGraph(const std::vector<std::size_t> &part_sizes) {
  std::vector<std::vector<std::string>> labels;
  labels.reserve(part_sizes.size());
  for (std::size_t k = 0; k < part_sizes.size(); ++k) {
    auto &part = labels.emplace_back();
    for (std::size_t i = 0; i < part_sizes[k]; ++i) {
      part.push_back(std::to_string(k) + "." + std::to_string(i));
    }
  }
  *this = MappingGraph(std::move(labels));
}

MappingGraph::MappingGraph(std::vector<std::vector<std::string>> labels)
    : labels_(std::move(labels)) {
  offsets_.reserve(labels_.size());
  for (const auto &part : labels_) {
    offsets_.push_back(num_vertices_);
    dummy_.emplace_back(part.size(), 0);
    num_vertices_ += part.size();
  }
  weights_.assign(num_vertices_ * num_vertices_, 0.0);
}

std::size_t MappingGraph::max_part_size() const {
  std::size_t c = 0;
  for (const auto &part : labels_) c = std::max(c, part.size());
  return c;
}

bool MappingGraph::is_complete() const {
  const std::size_t c = max_part_size();
  return std::all_of(labels_.begin(), labels_.end(),
                     [c](const auto &part) { return part.size() == c; });
}

bool MappingGraph::contains(VertexId v) const {
  return v.part < labels_.size() && v.member < labels_[v.part].size();
}

void MappingGraph::check(VertexId v) const {
  if (!contains(v)) throw Error("vertex " + to_string(v) + " not in graph");
}

bool MappingGraph::is_dummy(VertexId v) const {
  check(v);
  return dummy_[v.part][v.member] != 0;
}

const std::string &MappingGraph::label(VertexId v) const {
  check(v);
  return labels_[v.part][v.member];
}

std::vector<VertexId> MappingGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_vertices_);
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    for (std::size_t i = 0; i < labels_[k].size(); ++i) out.push_back({k, i});
  }
  return out;
}

void MappingGraph::set_weight(VertexId u, VertexId v, double w) {
  check(u);
  check(v);
  if (u.part == v.part) {
    throw Error("no edge inside part " + std::to_string(u.part));
  }
  if (!std::isfinite(w) || w < 0.0) {
    throw Error("edge weight must be finite and non-negative");
  }
  if (w != 0.0 && (is_dummy(u) || is_dummy(v))) {
    throw Error("edges incident to dummy vertices must have weight 0");
  }
  weights_[index(u) * num_vertices_ + index(v)] = w;
  weights_[index(v) * num_vertices_ + index(u)] = w;
}

double MappingGraph::total_weight() const {
  double total = 0.0;
  for (std::size_t a = 0; a < num_vertices_; ++a) {
    for (std::size_t b = a + 1; b < num_vertices_; ++b) {
      total += weights_[a * num_vertices_ + b];
    }
  }
  return total;
}

double overlap_weight(const IntervalSet &a, const IntervalSet &b, WeightMode mode) {
  const Millis inter = overlap_duration(a, b);
  if (mode == WeightMode::kAbsolute) return millis_to_seconds(inter);
  const Millis uni = a.total_duration() + b.total_duration() - inter;
  if (uni <= 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

MappingGraph build_graph(const std::vector<Hypothesis> &hypotheses, WeightMode mode) {
  if (hypotheses.size() < 2) {
    throw Error("at least two hypotheses are needed to build a mapping graph");
  }
  const std::string &rec = hypotheses.front().recording_id();
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k < hypotheses.size(); ++k) {
    if (hypotheses[k].recording_id() != rec) {
      throw Error("hypothesis " + std::to_string(k) + " is for recording '" +
                  hypotheses[k].recording_id() + "', expected '" + rec + "'");
    }
    if (hypotheses[k].num_speakers() == 0) {
      throw Error("hypothesis " + std::to_string(k) + " has no speakers");
    }
    labels.push_back(hypotheses[k].speakers());
  }

  MappingGraph graph(labels);
  for (std::size_t k = 0; k < hypotheses.size(); ++k) {
    for (std::size_t kk = k + 1; kk < hypotheses.size(); ++kk) {
      for (std::size_t i = 0; i < labels[k].size(); ++i) {
        const auto &a = hypotheses[k].activity(labels[k][i]);
        for (std::size_t j = 0; j < labels[kk].size(); ++j) {
          const auto &b = hypotheses[kk].activity(labels[kk][j]);
          graph.set_weight({k, i}, {kk, j}, overlap_weight(a, b, mode));
        }
      }
    }
  }
  return graph;
}

MappingGraph pad_to_complete(const MappingGraph &graph) {
  if (graph.is_complete()) return graph;
  const std::size_t c = graph.max_part_size();
  auto labels = graph.labels_;
  for (auto &part : labels) {
    while (part.size() < c) part.push_back("<dummy>");
  }
  MappingGraph padded(std::move(labels));
  for (std::size_t k = 0; k < graph.num_parts(); ++k) {
    for (std::size_t i = 0; i < c; ++i) {
      padded.dummy_[k][i] = i >= graph.part_size(k) ? 1 : graph.dummy_[k][i];
    }
  }
  const auto real = graph.vertices();
  for (std::size_t a = 0; a < real.size(); ++a) {
    for (std::size_t b = a + 1; b < real.size(); ++b) {
      if (real[a].part == real[b].part) continue;
      double w = graph.weight(real[a], real[b]);
      if (w != 0.0) padded.set_weight(real[a], real[b], w);
    }
  }
  return padded;
}

void validate_partition(const MappingGraph &graph, const Partition &partition) {
  std::vector<char> seen(graph.num_vertices(), 0);
  for (std::size_t c = 0; c < partition.cliques.size(); ++c) {
    const auto &clique = partition.cliques[c];
    std::vector<char> parts(graph.num_parts(), 0);
    for (const auto &v : clique) {
      if (!graph.contains(v)) {
        throw PartitionError("vertex " + to_string(v) + " is not in the graph");
      }
      if (parts[v.part]) {
        throw PartitionError("clique " + std::to_string(c) +
                             " holds two vertices of part " + std::to_string(v.part));
      }
      parts[v.part] = 1;
      if (seen[graph.index(v)]) {
        throw PartitionError("vertex " + to_string(v) + " appears in two cliques");
      }
      seen[graph.index(v)] = 1;
    }
  }
  for (const auto &v : graph.vertices()) {
    if (!seen[graph.index(v)] && !graph.is_dummy(v)) {
      throw PartitionError("vertex " + to_string(v) + " is not covered");
    }
  }
}

Partition canonical(Partition partition) {
  auto &cliques = partition.cliques;
  std::erase_if(cliques, [](const auto &c) { return c.empty(); });
  for (auto &c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return partition;
}

Partition strip_dummies(const MappingGraph &graph, const Partition &partition) {
  Partition out;
  for (const auto &clique : partition.cliques) {
    std::vector<VertexId> kept;
    for (const auto &v : clique) {
      if (!graph.is_dummy(v)) kept.push_back(v);
    }
    if (!kept.empty()) out.cliques.push_back(std::move(kept));
  }
  return out;
}

Partition restrict_to(const MappingGraph &graph, const Partition &partition) {
  Partition out;
  for (const auto &clique : partition.cliques) {
    std::vector<VertexId> kept;
    for (const auto &v : clique) {
      if (graph.contains(v) && !graph.is_dummy(v)) kept.push_back(v);
    }
    if (!kept.empty()) out.cliques.push_back(std::move(kept));
  }
  return out;
}

double partition_weight(const MappingGraph &graph, const Partition &partition) {
  validate_partition(graph, partition);
  double total = 0.0;
  for (const auto &clique : partition.cliques) {
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        total += graph.weight(clique[a], clique[b]);
      }
    }
  }
  return total;
}

std::vector<WeightedEdge> all_edges(const MappingGraph &graph) {
  std::vector<WeightedEdge> out;
  const auto vs = graph.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (vs[a].part == vs[b].part) continue;
      out.push_back({vs[a], vs[b], graph.weight(vs[a], vs[b])});
    }
  }
  return out;
}

std::vector<WeightedEdge> cross_clique_edges(const MappingGraph &graph,
                                             const Partition &partition) {
  validate_partition(graph, partition);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> clique_of(graph.num_vertices(), kNone);
  for (std::size_t c = 0; c < partition.cliques.size(); ++c) {
    for (const auto &v : partition.cliques[c]) clique_of[graph.index(v)] = c;
  }
  std::vector<WeightedEdge> out;
  for (const auto &e : all_edges(graph)) {
    std::size_t a = clique_of[graph.index(e.u)];
    std::size_t b = clique_of[graph.index(e.v)];
    if (a == kNone || b == kNone || a != b) out.push_back(e);
  }
  return out;
}

std::string write_edge_list(const MappingGraph &graph) {
  std::string out;
  char buf[96];
  for (const auto &e : all_edges(graph)) {
    std::snprintf(buf, sizeof(buf), "%zu.%zu %zu.%zu %.6f\n", e.u.part, e.u.member,
                  e.v.part, e.v.member, e.weight);
    out += buf;
  }
  return out;
}

}  // namespace diarmap
