// diarmap/include/diarmap/graph.h
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

// The K-partite speaker graph. Every hypothesis contributes one part, every
// speaker one vertex; every pair of vertices from different parts is an edge
// whose weight measures how much the two speakers' activity agrees. A label
// mapping is an orthogonal clique partition (at most one vertex per part in
// each clique) and its quality is the summed weight of intra-clique edges.

#ifndef DIARMAP_GRAPH_H_
#define DIARMAP_GRAPH_H_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "diarmap/rttm.h"

namespace diarmap {

enum class WeightMode {
  kRelative,  // |Δu ∩ Δv| / |Δu ∪ Δv|, 0 when both are empty
  kAbsolute,  // |Δu ∩ Δv| in seconds
};

struct VertexId {
  std::size_t part = 0;
  std::size_t member = 0;

  friend auto operator<=>(const VertexId &, const VertexId &) = default;
};

std::string to_string(VertexId v);

class MappingGraph {
 public:
  // Edgeless-weight graph (all weights 0) with the given part sizes.
  explicit MappingGraph(const std::vector<std::size_t> &part_sizes);
  // Parts labelled by speaker names.
  explicit MappingGraph(std::vector<std::vector<std::string>> labels);

  std::size_t num_parts() const { return labels_.size(); }
  std::size_t part_size(std::size_t part) const { return labels_.at(part).size(); }
  std::size_t max_part_size() const;
  std::size_t num_vertices() const { return num_vertices_; }
  bool is_complete() const;

  bool contains(VertexId v) const;
  bool is_dummy(VertexId v) const;
  const std::string &label(VertexId v) const;
  std::size_t index(VertexId v) const { return offsets_[v.part] + v.member; }
  std::vector<VertexId> vertices() const;

  // Zero for vertices of the same part.
  double weight(VertexId u, VertexId v) const {
    return weights_[index(u) * num_vertices_ + index(v)];
  }
  // Throws Error for same-part pairs, negative or non-finite weights, and
  // non-zero weights touching a dummy vertex.
  void set_weight(VertexId u, VertexId v, double w);

  // w(G): sum over all edges.
  double total_weight() const;

 private:
  friend MappingGraph pad_to_complete(const MappingGraph &graph);

  void check(VertexId v) const;

  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<char>> dummy_;
  std::vector<std::size_t> offsets_;
  std::size_t num_vertices_ = 0;
  std::vector<double> weights_;
};

// Requires >= 2 hypotheses of one recording, each with >= 1 speaker. Part k
// holds hypothesis k's speakers in label order.
MappingGraph build_graph(const std::vector<Hypothesis> &hypotheses,
                         WeightMode mode = WeightMode::kRelative);

// Edge weight between two activity sets under `mode`.
double overlap_weight(const IntervalSet &a, const IntervalSet &b, WeightMode mode);

// Adds zero-weighted dummy vertices until every part has max_part_size()
// members. Real vertices keep their ids.
MappingGraph pad_to_complete(const MappingGraph &graph);

struct Partition {
  std::vector<std::vector<VertexId>> cliques;

  friend bool operator==(const Partition &, const Partition &) = default;
};

// Throws PartitionError unless every clique is orthogonal, cliques are
// disjoint, vertices exist, and every non-dummy vertex is covered.
void validate_partition(const MappingGraph &graph, const Partition &partition);

// Drops empty cliques, sorts vertices within a clique and cliques by their
// smallest vertex.
Partition canonical(Partition partition);

// Removes dummy vertices (and cliques left empty).
Partition strip_dummies(const MappingGraph &graph, const Partition &partition);

// Restricts a partition to vertices that exist in `graph`. Used to map a
// partition of pad_to_complete(graph) back onto graph.
Partition restrict_to(const MappingGraph &graph, const Partition &partition);

// Σ_c Σ_{e ∈ E(V_c)} w(e). Validates first.
double partition_weight(const MappingGraph &graph, const Partition &partition);

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight = 0.0;
};

std::vector<WeightedEdge> all_edges(const MappingGraph &graph);

// Edges whose endpoints lie in different cliques. Vertices missing from the
// partition (uncovered dummies) count as singleton cliques.
std::vector<WeightedEdge> cross_clique_edges(const MappingGraph &graph,
                                             const Partition &partition);

// "k.i κ.j weight" per edge, k < κ, one per line.
std::string write_edge_list(const MappingGraph &graph);

}  // namespace diarmap

#endif  // DIARMAP_GRAPH_H_
