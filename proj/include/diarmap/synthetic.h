// diarmap/include/diarmap/synthetic.h
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

// Synthetic ensembles for desk-scale experiments: a random reference with
// overlapping speech and K noisy system outputs derived from it.

#ifndef DIARMAP_SYNTHETIC_H_
#define DIARMAP_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "diarmap/graph.h"
#include "diarmap/random.h"
#include "diarmap/rttm.h"

namespace diarmap {

struct ReferenceParams {
  std::string recording_id = "synth";
  Millis duration = 300'000;
  Millis min_turn = 1'000;
  Millis max_turn = 8'000;
  Millis max_gap = 1'500;
  // Chance that a turn is accompanied by an overlapping turn of another
  // speaker.
  double overlap_prob = 0.15;
};

struct NoiseParams {
  Millis jitter = 0;            // boundaries move by up to ±jitter
  double delete_prob = 0.0;     // per reference turn
  double confusion_prob = 0.0;  // per turn, attributed to another speaker
  double inserts_per_minute = 0.0;
  // Hypothesis k scales every noise term by a factor drawn uniformly from
  // [1 - spread, 1 + spread], so ensembles mix stronger and weaker systems.
  double quality_spread = 0.0;

  static NoiseParams none() { return {}; }
  static NoiseParams moderate();
  NoiseParams scaled(double factor) const;
};

struct SyntheticEnsemble {
  Hypothesis reference;
  std::vector<Hypothesis> hypotheses;
};

// Every speaker gets at least one turn.
Hypothesis generate_reference(std::size_t speakers, const ReferenceParams &params,
                              std::uint64_t seed);

// Hypothesis k uses its own stream derived from (seed, k). Labels are
// "h<k>_<n>" with n a random permutation of the reference speakers. Deletion
// never removes a speaker's last turn.
std::vector<Hypothesis> perturb_reference(const Hypothesis &reference,
                                          std::size_t count, const NoiseParams &noise,
                                          std::uint64_t seed);

SyntheticEnsemble gen_synthetic(std::size_t speakers, std::size_t count,
                                const NoiseParams &noise, std::uint64_t seed,
                                const ReferenceParams &params = {});

// Complete K-partite graph, C vertices per part, weights uniform in [0, 1).
MappingGraph random_complete_graph(std::size_t parts, std::size_t part_size, Rng &rng);

}  // namespace diarmap

#endif  // DIARMAP_SYNTHETIC_H_
