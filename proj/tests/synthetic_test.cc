// diarmap/tests/synthetic_test.cc
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

#include <catch_amalgamated.hpp>

#include "diarmap/mapping.h"
#include "diarmap/pipeline.h"
#include "diarmap/scoring.h"
#include "oracles.h"

using diarmap::Hypothesis;
using diarmap::NoiseParams;

namespace {

// Equal up to a bijective renaming of speakers.
bool same_up_to_labels(const Hypothesis &a, const Hypothesis &b) {
  if (a.num_speakers() != b.num_speakers()) return false;
  std::vector<diarmap::IntervalSet> sa, sb;
  for (const auto &[_, s] : a.activities()) sa.push_back(s);
  for (const auto &[_, s] : b.activities()) sb.push_back(s);
  auto key = [](const diarmap::IntervalSet &x, const diarmap::IntervalSet &y) {
    return x.to_string() < y.to_string();
  };
  std::sort(sa.begin(), sa.end(), key);
  std::sort(sb.begin(), sb.end(), key);
  return sa == sb;
}

}  // namespace

TEST_CASE("reference has every speaker and some overlap", "[synthetic]") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto ref = diarmap::generate_reference(4, {}, seed);
    REQUIRE(ref.num_speakers() == 4);
    for (const auto &[_, s] : ref.activities()) REQUIRE_FALSE(s.empty());
    REQUIRE(ref.total_speaker_time() > ref.speech().total_duration());
  }
}

TEST_CASE("fixed seed gives identical files", "[synthetic]") {
  const auto a = diarmap::gen_synthetic(4, 3, NoiseParams::moderate(), 17);
  const auto b = diarmap::gen_synthetic(4, 3, NoiseParams::moderate(), 17);
  CHECK(diarmap::write_rttm(a.reference) == diarmap::write_rttm(b.reference));
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(diarmap::write_rttm(a.hypotheses[k]) == diarmap::write_rttm(b.hypotheses[k]));
  }
  const auto c = diarmap::gen_synthetic(4, 3, NoiseParams::moderate(), 18);
  CHECK(diarmap::write_rttm(a.hypotheses[0]) != diarmap::write_rttm(c.hypotheses[0]));
}

TEST_CASE("noise-free copies are relabeled references", "[synthetic]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto e = diarmap::gen_synthetic(3, 4, NoiseParams::none(), seed);
    for (const auto &h : e.hypotheses) REQUIRE(same_up_to_labels(h, e.reference));
    for (auto method : {diarmap::Method::kGreedy, diarmap::Method::kPairwise,
                        diarmap::Method::kRls}) {
      diarmap::CombineOptions options;
      options.method = method;
      options.rls_epochs = 20;
      const auto r = diarmap::combine_recording(e.hypotheses, options);
      REQUIRE(diarmap::compute_der(e.reference, r.combined).der == 0.0);
      const auto g = diarmap::build_graph(e.hypotheses);
      REQUIRE(r.weight == Catch::Approx(diarmap::brute_force_optimum(g).weight).margin(1e-9));
    }
  }
}

TEST_CASE("noisy copies keep every speaker", "[synthetic]") {
  const auto e = diarmap::gen_synthetic(5, 6, NoiseParams::moderate().scaled(3.0), 3);
  for (const auto &h : e.hypotheses) {
    REQUIRE(h.num_speakers() == 5);
    for (const auto &[_, s] : h.activities()) REQUIRE_FALSE(s.empty());
  }
  CHECK_THROWS(diarmap::gen_synthetic(3, 1, NoiseParams::none(), 0));
}

TEST_CASE("jitter-only ensembles beat their worst member", "[synthetic]") {
  NoiseParams jitter;
  jitter.jitter = 400;
  std::size_t wins = 0;
  constexpr std::size_t kSeeds = 100;
  diarmap::ReferenceParams params;
  params.duration = 60'000;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const auto e = diarmap::gen_synthetic(3, 3, jitter, seed, params);
    double worst = 0.0;
    for (const auto &h : e.hypotheses) {
      worst = std::max(worst, diarmap::compute_der(e.reference, h).der);
    }
    const auto r = diarmap::combine_recording(e.hypotheses);
    if (diarmap::compute_der(e.reference, r.combined).der <= worst) ++wins;
  }
  CHECK(wins >= 90);
}

TEST_CASE("random complete graphs", "[synthetic]") {
  diarmap::Rng rng = diarmap::derive_rng(5, 5);
  const auto g = diarmap::random_complete_graph(4, 3, rng);
  CHECK(g.is_complete());
  CHECK(g.num_vertices() == 12);
  for (const auto &e : diarmap::all_edges(g)) {
    CHECK(e.weight >= 0.0);
    CHECK(e.weight < 1.0);
  }
}
