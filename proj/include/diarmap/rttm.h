// diarmap/include/diarmap/rttm.h
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

#ifndef DIARMAP_RTTM_H_
#define DIARMAP_RTTM_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "diarmap/interval_set.h"

namespace diarmap {

struct SpeakerTurn {
  std::string recording_id;
  std::string speaker;
  Millis onset = 0;
  Millis duration = 0;

  Millis end() const { return onset + duration; }
  friend bool operator==(const SpeakerTurn &, const SpeakerTurn &) = default;
};

// One system's output for one recording. Per-speaker activity is always kept
// normalized (disjoint, sorted, adjacent turns merged); different speakers
// may overlap. Speakers are ordered by label.
class Hypothesis {
 public:
  Hypothesis() = default;
  explicit Hypothesis(std::string recording_id)
      : recording_id_(std::move(recording_id)) {}

  // Throws Error if a turn belongs to another recording or has a
  // non-positive duration.
  static Hypothesis from_turns(std::string recording_id,
                               const std::vector<SpeakerTurn> &turns);

  const std::string &recording_id() const { return recording_id_; }

  void add_turn(const std::string &speaker, Millis onset, Millis duration);
  // Unions `activity` into the speaker's regions. An empty set still
  // registers the speaker.
  void add_activity(const std::string &speaker, const IntervalSet &activity);

  std::vector<std::string> speakers() const;
  std::size_t num_speakers() const { return activity_.size(); }
  bool has_speaker(const std::string &speaker) const {
    return activity_.contains(speaker);
  }
  bool empty() const { return activity_.empty(); }

  // Throws Error naming the label if the speaker is unknown.
  const IntervalSet &activity(const std::string &speaker) const;
  const std::map<std::string, IntervalSet> &activities() const { return activity_; }

  // Normalized turns, sorted by (onset, speaker).
  std::vector<SpeakerTurn> turns() const;

  // Summed speaker time (overlapped speech counts once per speaker).
  Millis total_speaker_time() const;
  // Union of all speakers' activity.
  IntervalSet speech() const;

  friend bool operator==(const Hypothesis &, const Hypothesis &) = default;

 private:
  std::string recording_id_;
  std::map<std::string, IntervalSet> activity_;
};

// Same-speaker overlapping or adjacent turns merged; result sorted by
// (recording, onset, speaker). Idempotent.
std::vector<SpeakerTurn> normalize_turns(const std::vector<SpeakerTurn> &turns);

// Parses RTTM text. `;;` lines and blank lines are skipped. Every other line
// must be a SPEAKER record with at least 9 fields. Throws ParseError.
std::map<std::string, Hypothesis> parse_rttm(std::string_view text);

// Reads and parses a file; ParseError messages are prefixed with the path.
std::map<std::string, Hypothesis> read_rttm_file(const std::string &path);

// One SPEAKER line per normalized turn, 3-decimal times, channel "1".
std::string write_rttm(const Hypothesis &hypothesis);
std::string write_rttm(const std::map<std::string, Hypothesis> &recordings);

void write_rttm_file(const std::string &path, const std::string &contents);

// Throws Error naming the label if it is not a speaker of `hypothesis`.
IntervalSet active_intervals(const Hypothesis &hypothesis, const std::string &speaker);

}  // namespace diarmap

#endif  // DIARMAP_RTTM_H_
