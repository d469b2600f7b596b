// diarmap/src/interval_set.cc
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

#include "diarmap/interval_set.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace diarmap {

Millis seconds_to_millis(double seconds) {
  return static_cast<Millis>(std::llround(seconds * 1000.0));
}

double millis_to_seconds(Millis ms) { return static_cast<double>(ms) / 1000.0; }

namespace {

std::vector<Interval> normalize(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval &p) { return p.end <= p.begin; });
  std::sort(pieces.begin(), pieces.end(), [](const Interval &a, const Interval &b) {
    return a.begin < b.begin || (a.begin == b.begin && a.end < b.end);
  });
  std::vector<Interval> out;
  out.reserve(pieces.size());
  for (const auto &p : pieces) {
    if (!out.empty() && p.begin <= out.back().end) {
      out.back().end = std::max(out.back().end, p.end);
    } else {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace

IntervalSet::IntervalSet(std::initializer_list<Interval> pieces)
    : intervals_(normalize(std::vector<Interval>(pieces))) {}

IntervalSet::IntervalSet(std::vector<Interval> pieces)
    : intervals_(normalize(std::move(pieces))) {}

Millis IntervalSet::total_duration() const {
  Millis total = 0;
  for (const auto &p : intervals_) total += p.length();
  return total;
}

bool IntervalSet::contains(Millis t) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), t,
      [](Millis value, const Interval &p) { return value < p.begin; });
  if (it == intervals_.begin()) return false;
  --it;
  return t < it->end;
}

void IntervalSet::add(Interval piece) {
  if (piece.end <= piece.begin) return;
  if (intervals_.empty() || piece.begin > intervals_.back().end) {
    intervals_.push_back(piece);
  } else if (piece.begin >= intervals_.back().begin) {
    intervals_.back().end = std::max(intervals_.back().end, piece.end);
  } else {
    intervals_.push_back(piece);
    intervals_ = normalize(std::move(intervals_));
  }
}

IntervalSet IntervalSet::intersect(const IntervalSet &other) const {
  IntervalSet out;
  const auto &a = intervals_;
  const auto &b = other.intervals_;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Millis lo = std::max(a[i].begin, b[j].begin);
    Millis hi = std::min(a[i].end, b[j].end);
    if (lo < hi) out.intervals_.push_back({lo, hi});
    if (a[i].end < b[j].end) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet &other) const {
  std::vector<Interval> merged;
  merged.reserve(intervals_.size() + other.intervals_.size());
  std::merge(intervals_.begin(), intervals_.end(), other.intervals_.begin(),
             other.intervals_.end(), std::back_inserter(merged),
             [](const Interval &x, const Interval &y) { return x.begin < y.begin; });
  IntervalSet out;
  for (const auto &p : merged) out.add(p);
  return out;
}

IntervalSet IntervalSet::subtract(const IntervalSet &other) const {
  IntervalSet out;
  const auto &b = other.intervals_;
  std::size_t j = 0;
  for (const auto &piece : intervals_) {
    Millis cursor = piece.begin;
    while (j < b.size() && b[j].end <= cursor) ++j;
    std::size_t k = j;
    while (k < b.size() && b[k].begin < piece.end) {
      if (b[k].begin > cursor) out.intervals_.push_back({cursor, b[k].begin});
      cursor = std::max(cursor, b[k].end);
      if (cursor >= piece.end) break;
      ++k;
    }
    if (cursor < piece.end) out.intervals_.push_back({cursor, piece.end});
  }
  return out;
}

std::string IntervalSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) os << ',';
    os << '[' << intervals_[i].begin << ',' << intervals_[i].end << ')';
  }
  os << '}';
  return os.str();
}

Millis overlap_duration(const IntervalSet &a, const IntervalSet &b) {
  const auto &x = a.intervals();
  const auto &y = b.intervals();
  Millis total = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    Millis lo = std::max(x[i].begin, y[j].begin);
    Millis hi = std::min(x[i].end, y[j].end);
    if (lo < hi) total += hi - lo;
    if (x[i].end < y[j].end) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

}  // namespace diarmap
