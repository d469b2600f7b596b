// diarmap/src/voting.cc
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

#include "diarmap/voting.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "diarmap/error.h"

namespace diarmap {

std::string clique_label(std::size_t c) { return std::to_string(c + 1); }

bool label_order(const std::string &a, const std::string &b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Hypothesis> apply_partition(const std::vector<Hypothesis> &hypotheses,
                                        const Partition &partition) {
  std::vector<std::vector<std::string>> speakers;
  std::vector<std::vector<std::string>> renamed;
  for (const auto &h : hypotheses) {
    speakers.push_back(h.speakers());
    renamed.emplace_back(h.num_speakers());
  }
  for (std::size_t c = 0; c < partition.cliques.size(); ++c) {
    for (const auto &v : partition.cliques[c]) {
      if (v.part >= hypotheses.size()) {
        throw Error("partition refers to hypothesis " + std::to_string(v.part) +
                    " of " + std::to_string(hypotheses.size()));
      }
      if (v.member >= speakers[v.part].size()) continue;  // dummy
      renamed[v.part][v.member] = clique_label(c);
    }
  }

  std::vector<Hypothesis> out;
  for (std::size_t k = 0; k < hypotheses.size(); ++k) {
    Hypothesis h(hypotheses[k].recording_id());
    for (std::size_t i = 0; i < speakers[k].size(); ++i) {
      if (renamed[k][i].empty()) {
        throw Error("speaker '" + speakers[k][i] + "' of hypothesis " +
                    std::to_string(k) + " is missing from the partition");
      }
      h.add_activity(renamed[k][i], hypotheses[k].activity(speakers[k][i]));
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<double> hypothesis_weights(std::size_t count, const VoteConfig &config) {
  std::vector<double> w(count, count ? 1.0 / static_cast<double>(count) : 0.0);
  if (config.rank_weighting && count > 0) {
    double norm = 0.0;
    for (std::size_t k = 0; k < count; ++k) norm += 1.0 / static_cast<double>(k + 1);
    for (std::size_t k = 0; k < count; ++k) {
      w[k] = 1.0 / static_cast<double>(k + 1) / norm;
    }
  }
  return w;
}

Hypothesis combine(const std::vector<Hypothesis> &relabeled, const VoteConfig &config) {
  if (relabeled.empty()) return {};
  for (const auto &h : relabeled) {
    if (h.recording_id() != relabeled.front().recording_id()) {
      throw Error("cannot combine hypotheses of different recordings");
    }
  }
  const auto weights = hypothesis_weights(relabeled.size(), config);

  // Common label set, in label order.
  std::vector<std::string> labels;
  for (const auto &h : relabeled) {
    for (const auto &[label, _] : h.activities()) labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end(), label_order);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::map<std::string, std::size_t> label_index;
  for (std::size_t l = 0; l < labels.size(); ++l) label_index[labels[l]] = l;

  struct Track {
    std::size_t hyp;
    std::size_t label;
    const std::vector<Interval> *intervals;
    std::size_t next = 0;
  };
  std::vector<Track> tracks;
  std::vector<Millis> bounds;
  for (std::size_t k = 0; k < relabeled.size(); ++k) {
    for (const auto &[label, set] : relabeled[k].activities()) {
      tracks.push_back({k, label_index.at(label), &set.intervals()});
      for (const auto &p : set.intervals()) bounds.insert(bounds.end(), {p.begin, p.end});
    }
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  std::vector<IntervalSet> emitted(labels.size());
  std::vector<double> score(labels.size());
  std::vector<std::size_t> ranked(labels.size());
  for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
    const Millis t = bounds[b];
    std::fill(score.begin(), score.end(), 0.0);
    double expected = 0.0;
    for (auto &tr : tracks) {
      const auto &iv = *tr.intervals;
      while (tr.next < iv.size() && iv[tr.next].end <= t) ++tr.next;
      if (tr.next < iv.size() && iv[tr.next].begin <= t) {
        score[tr.label] += weights[tr.hyp];
        expected += weights[tr.hyp];
      }
    }
    // Round half up; the slack absorbs weights like 1/6 summing to 1.4999….
    const auto count = static_cast<std::size_t>(std::floor(expected + 0.5 + 1e-9));
    if (count == 0) continue;
    std::iota(ranked.begin(), ranked.end(), std::size_t{0});
    std::stable_sort(ranked.begin(), ranked.end(), [&score](std::size_t x, std::size_t y) {
      return score[x] > score[y];
    });
    for (std::size_t r = 0; r < count && r < ranked.size(); ++r) {
      if (score[ranked[r]] <= 0.0) break;
      emitted[ranked[r]].add({t, bounds[b + 1]});
    }
  }

  Hypothesis out(relabeled.front().recording_id());
  for (std::size_t l = 0; l < labels.size(); ++l) {
    if (!emitted[l].empty()) out.add_activity(labels[l], emitted[l]);
  }
  return out;
}

}  // namespace diarmap
