// diarmap/include/diarmap/interval_set.h
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

#ifndef DIARMAP_INTERVAL_SET_H_
#define DIARMAP_INTERVAL_SET_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace diarmap {

// All times are integer milliseconds.
using Millis = std::int64_t;

Millis seconds_to_millis(double seconds);
double millis_to_seconds(Millis ms);

struct Interval {
  Millis begin = 0;
  Millis end = 0;  // exclusive

  Millis length() const { return end - begin; }
  friend bool operator==(const Interval &, const Interval &) = default;
};

// A sorted list of disjoint, non-empty, non-touching half-open intervals.
// Construction normalizes: empty pieces are dropped, overlapping or adjacent
// pieces are merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> pieces);
  explicit IntervalSet(std::vector<Interval> pieces);

  const std::vector<Interval> &intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }
  Millis total_duration() const;

  bool contains(Millis t) const;

  // Appends a piece. Cheap when `piece.begin` is at or after the current
  // last end (the common case while sweeping), otherwise renormalizes.
  void add(Interval piece);

  IntervalSet intersect(const IntervalSet &other) const;
  IntervalSet unite(const IntervalSet &other) const;
  IntervalSet subtract(const IntervalSet &other) const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet &, const IntervalSet &) = default;

 private:
  std::vector<Interval> intervals_;
};

// |a ∩ b| without materializing the intersection.
Millis overlap_duration(const IntervalSet &a, const IntervalSet &b);

}  // namespace diarmap

#endif  // DIARMAP_INTERVAL_SET_H_
