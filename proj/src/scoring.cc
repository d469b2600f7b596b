// diarmap/src/scoring.cc
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

#include "diarmap/scoring.h"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "diarmap/error.h"
#include "diarmap/hungarian.h"

namespace diarmap {

namespace {

// Restricts every speaker to the scored region.
Hypothesis restrict(const Hypothesis &h, const IntervalSet &no_score) {
  if (no_score.empty()) return h;
  Hypothesis out(h.recording_id());
  for (const auto &[speaker, set] : h.activities()) {
    out.add_activity(speaker, set.subtract(no_score));
  }
  return out;
}

IntervalSet no_score_region(const Hypothesis &reference, const ScoringOptions &options) {
  std::vector<Interval> pieces;
  if (options.collar > 0) {
    for (const auto &[_, set] : reference.activities()) {
      for (const auto &p : set.intervals()) {
        pieces.push_back({std::max<Millis>(0, p.begin - options.collar),
                          p.begin + options.collar});
        pieces.push_back({std::max<Millis>(0, p.end - options.collar),
                          p.end + options.collar});
      }
    }
  }
  IntervalSet zone(std::move(pieces));
  if (!options.score_overlaps) {
    const auto speakers = reference.speakers();
    for (std::size_t a = 0; a < speakers.size(); ++a) {
      for (std::size_t b = a + 1; b < speakers.size(); ++b) {
        zone = zone.unite(reference.activity(speakers[a])
                              .intersect(reference.activity(speakers[b])));
      }
    }
  }
  return zone;
}

// Walks a speaker's sorted intervals alongside an advancing time cursor.
struct Cursor {
  const std::vector<Interval> *intervals;
  std::size_t next = 0;

  bool active_at(Millis t) {
    while (next < intervals->size() && (*intervals)[next].end <= t) ++next;
    return next < intervals->size() && (*intervals)[next].begin <= t;
  }
};

}  // namespace

std::map<std::string, std::string> optimal_speaker_map(const Hypothesis &reference,
                                                       const Hypothesis &hypothesis) {
  std::map<std::string, std::string> out;
  if (reference.empty() || hypothesis.empty()) return out;
  const auto refs = reference.speakers();
  const auto hyps = hypothesis.speakers();
  WeightMatrix overlap(hyps.size(), refs.size());
  for (std::size_t h = 0; h < hyps.size(); ++h) {
    for (std::size_t r = 0; r < refs.size(); ++r) {
      overlap(h, r) = static_cast<double>(
          overlap_duration(hypothesis.activity(hyps[h]), reference.activity(refs[r])));
    }
  }
  const auto assignment = hungarian_assign(overlap);
  for (std::size_t h = 0; h < hyps.size(); ++h) {
    if (assignment.row_to_col[h]) out[hyps[h]] = refs[*assignment.row_to_col[h]];
  }
  return out;
}

DerReport compute_der(const Hypothesis &reference, const Hypothesis &hypothesis,
                      const ScoringOptions &options) {
  if (reference.recording_id() != hypothesis.recording_id()) {
    throw Error("cannot score recording '" + hypothesis.recording_id() +
                "' against reference '" + reference.recording_id() + "'");
  }
  const IntervalSet zone = no_score_region(reference, options);
  const Hypothesis ref = restrict(reference, zone);
  const Hypothesis hyp = restrict(hypothesis, zone);
  const Millis total = ref.total_speaker_time();
  if (total <= 0) {
    throw Error("reference for '" + reference.recording_id() +
                "' has no scored speech; DER is undefined");
  }

  const auto mapping = optimal_speaker_map(ref, hyp);
  const auto ref_labels = ref.speakers();
  const auto hyp_labels = hyp.speakers();
  std::map<std::string, std::size_t> ref_index;
  for (std::size_t r = 0; r < ref_labels.size(); ++r) ref_index[ref_labels[r]] = r;
  constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> mapped_ref(hyp_labels.size(), kUnmapped);
  for (std::size_t h = 0; h < hyp_labels.size(); ++h) {
    auto it = mapping.find(hyp_labels[h]);
    if (it != mapping.end()) mapped_ref[h] = ref_index.at(it->second);
  }

  std::vector<Millis> bounds;
  std::vector<Cursor> ref_cursors, hyp_cursors;
  for (const auto &label : ref_labels) {
    const auto &iv = ref.activity(label).intervals();
    ref_cursors.push_back({&iv});
    for (const auto &p : iv) bounds.insert(bounds.end(), {p.begin, p.end});
  }
  for (const auto &label : hyp_labels) {
    const auto &iv = hyp.activity(label).intervals();
    hyp_cursors.push_back({&iv});
    for (const auto &p : iv) bounds.insert(bounds.end(), {p.begin, p.end});
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  Millis missed = 0, false_alarm = 0, confusion = 0;
  std::vector<char> ref_active(ref_labels.size());
  for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
    const Millis t = bounds[b];
    const Millis d = bounds[b + 1] - t;
    std::int64_t n_ref = 0, n_hyp = 0, n_correct = 0;
    for (std::size_t r = 0; r < ref_cursors.size(); ++r) {
      ref_active[r] = ref_cursors[r].active_at(t);
      n_ref += ref_active[r];
    }
    for (std::size_t h = 0; h < hyp_cursors.size(); ++h) {
      if (!hyp_cursors[h].active_at(t)) continue;
      ++n_hyp;
      if (mapped_ref[h] != kUnmapped && ref_active[mapped_ref[h]]) ++n_correct;
    }
    missed += d * std::max<std::int64_t>(0, n_ref - n_hyp);
    false_alarm += d * std::max<std::int64_t>(0, n_hyp - n_ref);
    confusion += d * (std::min(n_ref, n_hyp) - n_correct);
  }

  DerReport report;
  report.missed_speech = millis_to_seconds(missed);
  report.false_alarm = millis_to_seconds(false_alarm);
  report.speaker_error = millis_to_seconds(confusion);
  report.total_reference_speech = millis_to_seconds(total);
  report.der = static_cast<double>(missed + false_alarm + confusion) /
               static_cast<double>(total);
  return report;
}

std::string format_der_table(const DerReport &report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%8s %8s %8s %8s\n%8.2f %8.2f %8.2f %8.2f\n", "MS", "FA", "SE", "DER",
                100.0 * report.missed_ratio(), 100.0 * report.false_alarm_ratio(),
                100.0 * report.speaker_error_ratio(), 100.0 * report.der);
  return buf;
}

}  // namespace diarmap
