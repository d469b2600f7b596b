// diarmap/src/synthetic.cc
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

#include "diarmap/synthetic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "diarmap/error.h"

namespace diarmap {

NoiseParams NoiseParams::moderate() {
  NoiseParams n;
  n.jitter = 300;
  n.delete_prob = 0.05;
  n.confusion_prob = 0.12;
  n.inserts_per_minute = 1.0;
  n.quality_spread = 0.5;
  return n;
}

NoiseParams NoiseParams::scaled(double factor) const {
  NoiseParams n = *this;
  n.jitter = static_cast<Millis>(std::llround(static_cast<double>(jitter) * factor));
  n.delete_prob = std::min(1.0, delete_prob * factor);
  n.confusion_prob = std::min(1.0, confusion_prob * factor);
  n.inserts_per_minute = inserts_per_minute * factor;
  return n;
}

namespace {

Millis uniform_millis(Rng &rng, Millis lo, Millis hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<Millis>(uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

std::size_t other_speaker(Rng &rng, std::size_t speakers, std::size_t current) {
  if (speakers < 2) return current;
  std::size_t s = uniform_index(rng, speakers - 1);
  return s >= current ? s + 1 : s;
}

}  // namespace

Hypothesis generate_reference(std::size_t speakers, const ReferenceParams &params,
                              std::uint64_t seed) {
  if (speakers == 0) throw Error("a reference needs at least one speaker");
  Rng rng = derive_rng(seed, 0);
  std::vector<SpeakerTurn> turns;
  const auto name = [](std::size_t s) { return "spk" + std::to_string(s); };

  Millis t = uniform_millis(rng, 0, params.max_gap);
  std::size_t previous = speakers;
  while (t < params.duration) {
    std::size_t s = previous < speakers ? other_speaker(rng, speakers, previous)
                                        : uniform_index(rng, speakers);
    Millis len = uniform_millis(rng, params.min_turn, params.max_turn);
    turns.push_back({params.recording_id, name(s), t, len});
    if (speakers > 1 && uniform01(rng) < params.overlap_prob) {
      std::size_t o = other_speaker(rng, speakers, s);
      Millis start = t + uniform_millis(rng, 0, len / 2);
      Millis olen = uniform_millis(rng, params.min_turn / 2, params.max_turn / 2);
      turns.push_back({params.recording_id, name(o), start, std::max<Millis>(olen, 1)});
    }
    previous = s;
    t += len + uniform_millis(rng, 0, params.max_gap);
  }
  Hypothesis ref = Hypothesis::from_turns(params.recording_id, turns);
  for (std::size_t s = 0; s < speakers; ++s) {
    if (!ref.has_speaker(name(s))) {
      ref.add_turn(name(s), t, uniform_millis(rng, params.min_turn, params.max_turn));
      t += params.max_turn;
    }
  }
  return ref;
}

std::vector<Hypothesis> perturb_reference(const Hypothesis &reference, std::size_t count,
                                          const NoiseParams &noise, std::uint64_t seed) {
  const auto ref_speakers = reference.speakers();
  const std::size_t n = ref_speakers.size();
  const auto turns = reference.turns();
  Millis end_time = 0;
  for (const auto &t : turns) end_time = std::max(end_time, t.end());
  std::map<std::string, std::size_t> speaker_index;
  for (std::size_t s = 0; s < n; ++s) speaker_index[ref_speakers[s]] = s;

  std::vector<Hypothesis> out;
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng = derive_rng(seed, k + 1);
    const double factor =
        uniform_real(rng, 1.0 - noise.quality_spread, 1.0 + noise.quality_spread);
    const NoiseParams local = noise.scaled(std::max(0.0, factor));

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    shuffle(std::span<std::size_t>(perm), rng);
    const auto label = [&](std::size_t s) {
      return "h" + std::to_string(k + 1) + "_" + std::to_string(perm[s]);
    };

    std::vector<std::size_t> remaining(n, 0);
    for (const auto &t : turns) ++remaining[speaker_index.at(t.speaker)];

    std::vector<std::vector<Interval>> pieces(n);
    for (const auto &t : turns) {
      std::size_t s = speaker_index.at(t.speaker);
      const double u_delete = uniform01(rng);
      const double u_confuse = uniform01(rng);
      const std::size_t confused = other_speaker(rng, n, s);
      const Millis j1 = uniform_millis(rng, -local.jitter, local.jitter);
      const Millis j2 = uniform_millis(rng, -local.jitter, local.jitter);
      const bool last = remaining[s] == 1 && pieces[s].empty();
      --remaining[s];
      if (u_delete < local.delete_prob && !last) continue;
      if (u_confuse < local.confusion_prob && !last) s = confused;
      Millis begin = std::max<Millis>(0, t.onset + j1);
      Millis end = std::max(begin + 10, t.end() + j2);
      pieces[s].push_back({begin, end});
    }

    const double minutes = static_cast<double>(end_time) / 60'000.0;
    const double expected = local.inserts_per_minute * minutes;
    auto inserts = static_cast<std::size_t>(std::floor(expected));
    if (uniform01(rng) < expected - std::floor(expected)) ++inserts;
    for (std::size_t i = 0; i < inserts && n > 0; ++i) {
      std::size_t s = uniform_index(rng, n);
      Millis begin = uniform_millis(rng, 0, std::max<Millis>(0, end_time - 1));
      Millis len = uniform_millis(rng, 300, 2'000);
      pieces[s].push_back({begin, begin + len});
    }

    Hypothesis h(reference.recording_id());
    for (std::size_t s = 0; s < n; ++s) {
      h.add_activity(label(s), IntervalSet(std::move(pieces[s])));
    }
    out.push_back(std::move(h));
  }
  return out;
}

SyntheticEnsemble gen_synthetic(std::size_t speakers, std::size_t count,
                                const NoiseParams &noise, std::uint64_t seed,
                                const ReferenceParams &params) {
  if (count < 2) throw Error("an ensemble needs at least two hypotheses");
  SyntheticEnsemble e;
  e.reference = generate_reference(speakers, params, seed);
  e.hypotheses = perturb_reference(e.reference, count, noise, seed);
  return e;
}

MappingGraph random_complete_graph(std::size_t parts, std::size_t part_size, Rng &rng) {
  MappingGraph g(std::vector<std::size_t>(parts, part_size));
  const auto vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (vs[a].part != vs[b].part) g.set_weight(vs[a], vs[b], uniform01(rng));
    }
  }
  return g;
}

}  // namespace diarmap
