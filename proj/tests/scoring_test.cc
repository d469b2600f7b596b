// diarmap/tests/scoring_test.cc
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

#include <catch_amalgamated.hpp>

#include "diarmap/error.h"
#include "oracles.h"

using diarmap::Hypothesis;
using diarmap::IntervalSet;

namespace {

Hypothesis hyp(std::initializer_list<std::pair<const char *, IntervalSet>> speakers) {
  Hypothesis h("r");
  for (const auto &[name, set] : speakers) h.add_activity(name, set);
  return h;
}

Hypothesis relabel(const Hypothesis &h, diarmap::Rng &rng) {
  auto labels = h.speakers();
  std::vector<std::string> fresh;
  for (std::size_t i = 0; i < labels.size(); ++i) fresh.push_back("z" + std::to_string(i));
  diarmap::shuffle(std::span<std::string>(fresh), rng);
  Hypothesis out(h.recording_id());
  for (std::size_t i = 0; i < labels.size(); ++i) out.add_activity(fresh[i], h.activity(labels[i]));
  return out;
}

}  // namespace

TEST_CASE("perfect hypothesis", "[scoring]") {
  const auto ref = hyp({{"A", {{0, 10000}}}, {"B", {{5000, 12000}}}});
  const auto r = diarmap::compute_der(ref, ref);
  CHECK(r.missed_speech == 0.0);
  CHECK(r.false_alarm == 0.0);
  CHECK(r.speaker_error == 0.0);
  CHECK(r.der == 0.0);
  CHECK(r.total_reference_speech == 17.0);
}

TEST_CASE("silent hypothesis misses everything", "[scoring]") {
  const auto r = diarmap::compute_der(hyp({{"A", {{0, 10000}}}}), Hypothesis("r"));
  CHECK(r.missed_speech == 10.0);
  CHECK(r.der == 1.0);
  CHECK(r.missed_ratio() == 1.0);
}

TEST_CASE("half-covered speaker", "[scoring]") {
  const auto r = diarmap::compute_der(hyp({{"A", {{0, 10000}}}}), hyp({{"X", {{0, 5000}}}}));
  CHECK(r.missed_speech == 5.0);
  CHECK(r.false_alarm == 0.0);
  CHECK(r.speaker_error == 0.0);
  CHECK(r.der == 0.5);
  CHECK(diarmap::format_der_table(r) ==
        "      MS       FA       SE      DER\n"
        "   50.00     0.00     0.00    50.00\n");
}

TEST_CASE("speaker maps", "[scoring]") {
  const auto ref = hyp({{"A", {{0, 4000}}}, {"B", {{4000, 9000}}}});
  auto same = diarmap::optimal_speaker_map(ref, ref);
  CHECK(same == std::map<std::string, std::string>{{"A", "A"}, {"B", "B"}});

  const auto renamed = hyp({{"p", {{4000, 9000}}}, {"q", {{0, 4000}}}});
  CHECK(diarmap::optimal_speaker_map(ref, renamed) ==
        std::map<std::string, std::string>{{"p", "B"}, {"q", "A"}});

  const auto three = hyp({{"x", {{0, 4000}}}, {"y", {{4000, 8000}}}, {"w", {{8000, 9000}}}});
  const auto m = diarmap::optimal_speaker_map(ref, three);
  CHECK(m == std::map<std::string, std::string>{{"x", "A"}, {"y", "B"}});
  const auto r = diarmap::compute_der(ref, three);
  CHECK(r.speaker_error == 1.0);
  CHECK(r.missed_speech == 0.0);
  CHECK(r.false_alarm == 0.0);
}

TEST_CASE("overlapped reference speech", "[scoring]") {
  const auto ref = hyp({{"A", {{0, 10000}}}, {"B", {{5000, 10000}}}});
  const auto sys = hyp({{"X", {{0, 10000}}}});
  const auto r = diarmap::compute_der(ref, sys);
  CHECK(r.missed_speech == 5.0);
  CHECK(r.der == 5.0 / 15.0);
  diarmap::ScoringOptions no_overlap;
  no_overlap.score_overlaps = false;
  CHECK(diarmap::compute_der(ref, sys, no_overlap).der == 0.0);
}

TEST_CASE("collar ignores boundary slack", "[scoring]") {
  const auto ref = hyp({{"A", {{0, 10000}}}});
  const auto sys = hyp({{"X", {{200, 10000}}}});
  CHECK(diarmap::compute_der(ref, sys).missed_speech == Catch::Approx(0.2));
  diarmap::ScoringOptions collar;
  collar.collar = 250;
  const auto r = diarmap::compute_der(ref, sys, collar);
  CHECK(r.der == 0.0);
  CHECK(r.total_reference_speech == Catch::Approx(9.5));
}

TEST_CASE("scoring errors", "[scoring]") {
  CHECK_THROWS_AS(diarmap::compute_der(Hypothesis("r"), hyp({{"X", {{0, 1}}}})), diarmap::Error);
  Hypothesis other("s");
  other.add_turn("X", 0, 10);
  CHECK_THROWS_AS(diarmap::compute_der(hyp({{"A", {{0, 10}}}}), other), diarmap::Error);
}

TEST_CASE("DER matches frame counting", "[scoring][property]") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(71, i);
    const auto ref = diarmap::oracle::random_hypothesis(rng, "r", 1 + diarmap::uniform_index(rng, 3), 1500);
    const auto sys =
        diarmap::oracle::random_hypothesis(rng, "r", 1 + diarmap::uniform_index(rng, 4), 1500, "h");
    const auto expected = diarmap::oracle::der(ref, sys);
    const auto r = diarmap::compute_der(ref, sys);
    INFO("case " << i);
    REQUIRE(r.missed_speech == Catch::Approx(expected.missed / 1000.0).margin(1e-12));
    REQUIRE(r.false_alarm == Catch::Approx(expected.false_alarm / 1000.0).margin(1e-12));
    REQUIRE(r.speaker_error == Catch::Approx(expected.speaker_error / 1000.0).margin(1e-12));
    REQUIRE(r.total_reference_speech == Catch::Approx(expected.total / 1000.0).margin(1e-12));
  }
}

TEST_CASE("DER is invariant to relabeling", "[scoring][property]") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(72, i);
    const auto ref = diarmap::oracle::random_hypothesis(rng, "r", 1 + diarmap::uniform_index(rng, 4), 60000);
    const auto sys = diarmap::oracle::random_hypothesis(rng, "r", 1 + diarmap::uniform_index(rng, 4), 60000);
    const auto a = diarmap::compute_der(ref, sys);
    const auto b = diarmap::compute_der(ref, relabel(sys, rng));
    INFO("case " << i);
    REQUIRE(a.der == b.der);
    REQUIRE(a.speaker_error == b.speaker_error);
    REQUIRE(a.missed_speech >= 0.0);
    REQUIRE(a.false_alarm >= 0.0);
    REQUIRE(a.speaker_error >= 0.0);
    REQUIRE(a.missed_speech <= a.total_reference_speech);
    REQUIRE(a.der == Catch::Approx((a.missed_speech + a.false_alarm + a.speaker_error) /
                                   a.total_reference_speech));
  }
}

TEST_CASE("a spurious turn on silence is pure false alarm", "[scoring][property]") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(73, i);
    const auto ref = diarmap::oracle::random_hypothesis(rng, "r", 1 + diarmap::uniform_index(rng, 3), 60000);
    const auto sys = diarmap::oracle::random_hypothesis(rng, "r", 1 + diarmap::uniform_index(rng, 3), 60000);
    const auto base = diarmap::compute_der(ref, sys);
    const diarmap::Millis d = 1 + static_cast<diarmap::Millis>(diarmap::uniform_index(rng, 5000));
    Hypothesis noisy = sys;
    const auto label = sys.speakers()[diarmap::uniform_index(rng, sys.num_speakers())];
    noisy.add_turn(label, 100000, d);  // beyond every reference and system turn
    const auto r = diarmap::compute_der(ref, noisy);
    INFO("case " << i);
    REQUIRE(r.false_alarm == Catch::Approx(base.false_alarm + d / 1000.0).margin(1e-9));
    REQUIRE(r.missed_speech == base.missed_speech);
    REQUIRE(r.speaker_error == base.speaker_error);
  }
}
