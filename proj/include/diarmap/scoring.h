// diarmap/include/diarmap/scoring.h
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

#ifndef DIARMAP_SCORING_H_
#define DIARMAP_SCORING_H_

#include <map>
#include <string>

#include "diarmap/rttm.h"

namespace diarmap {

struct ScoringOptions {
  // Half-width of the no-score zone around every reference turn boundary.
  Millis collar = 0;
  // When false, regions with two or more reference speakers are not scored.
  bool score_overlaps = true;
};

// All durations in seconds of speaker time.
struct DerReport {
  double missed_speech = 0.0;
  double false_alarm = 0.0;
  double speaker_error = 0.0;
  double total_reference_speech = 0.0;
  double der = 0.0;

  double missed_ratio() const { return missed_speech / total_reference_speech; }
  double false_alarm_ratio() const { return false_alarm / total_reference_speech; }
  double speaker_error_ratio() const { return speaker_error / total_reference_speech; }
};

// hypothesis speaker -> reference speaker, maximizing total overlap.
std::map<std::string, std::string> optimal_speaker_map(const Hypothesis &reference,
                                                       const Hypothesis &hypothesis);

// Throws Error when the recordings differ or the scored reference holds no
// speech.
DerReport compute_der(const Hypothesis &reference, const Hypothesis &hypothesis,
                      const ScoringOptions &options = {});

// Fixed-format table: MS, FA, SE and DER as percentages with 2 decimals.
std::string format_der_table(const DerReport &report);

}  // namespace diarmap

#endif  // DIARMAP_SCORING_H_
