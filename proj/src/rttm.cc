// diarmap/src/rttm.cc
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

#include "diarmap/rttm.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "diarmap/error.h"

namespace diarmap {

Hypothesis Hypothesis::from_turns(std::string recording_id,
                                  const std::vector<SpeakerTurn> &turns) {
  Hypothesis h(std::move(recording_id));
  std::map<std::string, std::vector<Interval>> pieces;
  for (const auto &t : turns) {
    if (t.recording_id != h.recording_id_) {
      throw Error("turn of recording '" + t.recording_id +
                  "' added to hypothesis of '" + h.recording_id_ + "'");
    }
    if (t.duration <= 0 || t.onset < 0) {
      throw Error("invalid turn for speaker '" + t.speaker + "'");
    }
    pieces[t.speaker].push_back({t.onset, t.end()});
  }
  for (auto &[speaker, list] : pieces) {
    h.activity_.emplace(speaker, IntervalSet(std::move(list)));
  }
  return h;
}

void Hypothesis::add_turn(const std::string &speaker, Millis onset, Millis duration) {
  if (duration <= 0 || onset < 0) {
    throw Error("invalid turn for speaker '" + speaker + "'");
  }
  activity_[speaker].add({onset, onset + duration});
}

void Hypothesis::add_activity(const std::string &speaker, const IntervalSet &activity) {
  auto &slot = activity_[speaker];
  slot = slot.empty() ? activity : slot.unite(activity);
}

std::vector<std::string> Hypothesis::speakers() const {
  std::vector<std::string> out;
  out.reserve(activity_.size());
  for (const auto &[speaker, _] : activity_) out.push_back(speaker);
  return out;
}

const IntervalSet &Hypothesis::activity(const std::string &speaker) const {
  auto it = activity_.find(speaker);
  if (it == activity_.end()) {
    throw Error("unknown speaker '" + speaker + "' in recording '" +
                recording_id_ + "'");
  }
  return it->second;
}

std::vector<SpeakerTurn> Hypothesis::turns() const {
  std::vector<SpeakerTurn> out;
  for (const auto &[speaker, set] : activity_) {
    for (const auto &p : set.intervals()) {
      out.push_back({recording_id_, speaker, p.begin, p.length()});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpeakerTurn &a, const SpeakerTurn &b) {
    return a.onset < b.onset || (a.onset == b.onset && a.speaker < b.speaker);
  });
  return out;
}

Millis Hypothesis::total_speaker_time() const {
  Millis total = 0;
  for (const auto &[_, set] : activity_) total += set.total_duration();
  return total;
}

IntervalSet Hypothesis::speech() const {
  std::vector<Interval> all;
  for (const auto &[_, set] : activity_) {
    all.insert(all.end(), set.intervals().begin(), set.intervals().end());
  }
  return IntervalSet(std::move(all));
}

std::vector<SpeakerTurn> normalize_turns(const std::vector<SpeakerTurn> &turns) {
  std::map<std::string, std::vector<SpeakerTurn>> by_recording;
  for (const auto &t : turns) by_recording[t.recording_id].push_back(t);
  std::vector<SpeakerTurn> out;
  for (const auto &[rec, list] : by_recording) {
    auto normalized = Hypothesis::from_turns(rec, list).turns();
    out.insert(out.end(), normalized.begin(), normalized.end());
  }
  return out;
}

namespace {

bool parse_seconds(std::string_view field, double *out) {
  const char *first = field.data();
  const char *last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last && std::isfinite(*out);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

std::map<std::string, Hypothesis> parse_rttm(std::string_view text) {
  std::map<std::string, std::vector<SpeakerTurn>> turns;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields[0].starts_with(";;")) continue;
    if (fields.size() < 9) {
      throw ParseError(line_no, "expected at least 9 fields, got " +
                                    std::to_string(fields.size()));
    }
    if (fields[0] != "SPEAKER") {
      throw ParseError(line_no, "unsupported record type '" +
                                    std::string(fields[0]) + "'");
    }
    double onset = 0.0;
    double duration = 0.0;
    if (!parse_seconds(fields[3], &onset)) {
      throw ParseError(line_no, "non-numeric onset '" + std::string(fields[3]) + "'");
    }
    if (!parse_seconds(fields[4], &duration)) {
      throw ParseError(line_no,
                       "non-numeric duration '" + std::string(fields[4]) + "'");
    }
    if (onset < 0.0) throw ParseError(line_no, "negative onset");
    if (duration <= 0.0) throw ParseError(line_no, "duration must be positive");

    Millis begin = seconds_to_millis(onset);
    Millis end = seconds_to_millis(onset + duration);
    std::string rec(fields[1]);
    // Sub-millisecond turns vanish at our resolution; the speaker is still
    // registered with no activity.
    turns[rec].push_back({rec, std::string(fields[7]), begin, end - begin});
  }

  std::map<std::string, Hypothesis> out;
  for (auto &[rec, list] : turns) {
    Hypothesis h(rec);
    for (const auto &t : list) {
      if (t.duration > 0) {
        h.add_turn(t.speaker, t.onset, t.duration);
      } else {
        h.add_activity(t.speaker, IntervalSet());
      }
    }
    out.emplace(rec, std::move(h));
  }
  return out;
}

std::map<std::string, Hypothesis> read_rttm_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_rttm(buf.str());
  } catch (const ParseError &e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

std::string write_rttm(const Hypothesis &hypothesis) {
  std::string out;
  char buf[64];
  for (const auto &t : hypothesis.turns()) {
    out += "SPEAKER ";
    out += t.recording_id;
    std::snprintf(buf, sizeof(buf), " 1 %.3f %.3f <NA> <NA> ",
                  millis_to_seconds(t.onset), millis_to_seconds(t.duration));
    out += buf;
    out += t.speaker;
    out += " <NA> <NA>\n";
  }
  return out;
}

std::string write_rttm(const std::map<std::string, Hypothesis> &recordings) {
  std::string out;
  for (const auto &[_, h] : recordings) out += write_rttm(h);
  return out;
}

void write_rttm_file(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write failed for '" + path + "'");
}

IntervalSet active_intervals(const Hypothesis &hypothesis, const std::string &speaker) {
  return hypothesis.activity(speaker);
}

}  // namespace diarmap
