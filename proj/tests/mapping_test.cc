// diarmap/tests/mapping_test.cc
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

#include "diarmap/mapping.h"

#include <catch_amalgamated.hpp>

#include <set>

#include "diarmap/error.h"
#include "diarmap/synthetic.h"
#include "oracles.h"

using diarmap::Hypothesis;
using diarmap::IntervalSet;
using diarmap::MappingGraph;
using diarmap::Partition;
using diarmap::VertexId;

namespace {

// a1-b1 0.6, a1-b2 0.5, a2-b1 0.5, a2-b2 0.
MappingGraph greedy_trap() {
  MappingGraph g(std::vector<std::size_t>{2, 2});
  g.set_weight({0, 0}, {1, 0}, 0.6);
  g.set_weight({0, 0}, {1, 1}, 0.5);
  g.set_weight({0, 1}, {1, 0}, 0.5);
  return g;
}

MappingGraph random_graph(diarmap::Rng &rng, std::size_t max_parts, std::size_t max_size) {
  std::vector<std::size_t> sizes(2 + diarmap::uniform_index(rng, max_parts - 1));
  for (auto &s : sizes) s = 1 + diarmap::uniform_index(rng, max_size);
  MappingGraph g(sizes);
  for (const auto &u : g.vertices()) {
    for (const auto &v : g.vertices()) {
      if (u.part < v.part) g.set_weight(u, v, diarmap::uniform01(rng));
    }
  }
  return g;
}

// Subsets of vertices that hold at most one vertex per part and cannot be
// extended, found by scanning every subset.
std::set<std::vector<VertexId>> maximal_cliques_by_subsets(const MappingGraph &g) {
  const auto vs = g.vertices();
  std::set<std::vector<VertexId>> out;
  auto is_clique = [&](std::uint64_t mask) {
    std::set<std::size_t> parts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if ((mask >> i & 1) && !parts.insert(vs[i].part).second) return false;
    }
    return true;
  };
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    if (!is_clique(mask)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < vs.size() && maximal; ++i) {
      if (!(mask >> i & 1) && is_clique(mask | std::uint64_t{1} << i)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<VertexId> c;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask >> i & 1) c.push_back(vs[i]);
    }
    out.insert(c);
  }
  return out;
}

std::set<std::vector<VertexId>> enumerated(const MappingGraph &g) {
  std::set<std::vector<VertexId>> out;
  diarmap::enumerate_maximal_cliques(g, [&](std::span<const VertexId> c) {
    out.insert(std::vector<VertexId>(c.begin(), c.end()));
  });
  return out;
}

Hypothesis hyp(std::initializer_list<std::pair<const char *, IntervalSet>> speakers) {
  Hypothesis h("r");
  for (const auto &[name, set] : speakers) h.add_activity(name, set);
  return h;
}

}  // namespace

TEST_CASE("maximal clique counts", "[mapping][cliques]") {
  const MappingGraph g3(std::vector<std::size_t>{2, 2, 2});
  const auto c3 = enumerated(g3);
  CHECK(c3.size() == 8);
  for (const auto &c : c3) CHECK(c.size() == 3);
  CHECK(diarmap::count_maximal_cliques(g3) == 8);

  const MappingGraph g1(std::vector<std::size_t>{1, 1});
  CHECK(enumerated(g1) == std::set<std::vector<VertexId>>{{{0, 0}, {1, 0}}});

  const MappingGraph g4(std::vector<std::size_t>{3, 3, 3, 3});
  const auto c4 = enumerated(g4);
  CHECK(c4.size() == 81);
  CHECK(c4 == maximal_cliques_by_subsets(g4));
}

TEST_CASE("clique enumeration matches subset scan on uneven graphs", "[mapping][cliques]") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(51, i);
    std::vector<std::size_t> sizes(2 + diarmap::uniform_index(rng, 3));
    for (auto &s : sizes) s = 1 + diarmap::uniform_index(rng, 3);
    const MappingGraph g(sizes);
    const auto got = enumerated(g);
    REQUIRE(got == maximal_cliques_by_subsets(g));
    REQUIRE(got.size() == diarmap::count_maximal_cliques(g));
  }
}

TEST_CASE("complete graphs have C^K maximal cliques", "[mapping][cliques]") {
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::size_t c = 1; c <= 4; ++c) {
      const MappingGraph g(std::vector<std::size_t>(k, c));
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < k; ++i) expected *= c;
      std::uint64_t seen = 0;
      diarmap::enumerate_maximal_cliques(g, [&](std::span<const VertexId> clique) {
        REQUIRE(clique.size() == k);
        ++seen;
      });
      REQUIRE(seen == expected);
    }
  }
}

TEST_CASE("enumeration refuses to exceed its cap", "[mapping][cliques]") {
  const MappingGraph g(std::vector<std::size_t>(5, 3));
  std::uint64_t visited = 0;
  CHECK_THROWS_AS(diarmap::enumerate_maximal_cliques(
                      g, [&](std::span<const VertexId>) { ++visited; }, 242),
                  diarmap::BudgetExceeded);
  CHECK(visited == 0);
  CHECK(diarmap::enumerate_maximal_cliques(g, [](std::span<const VertexId>) {}, 243) == 243);
}

TEST_CASE("greedy falls into the heavy-edge trap", "[mapping][greedy]") {
  const auto g = greedy_trap();
  const auto p = diarmap::map_labels_greedy(g);
  CHECK(p == Partition{{{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}});
  CHECK(diarmap::partition_weight(g, p) == Catch::Approx(0.6).margin(1e-12));
  CHECK(diarmap::oracle::optimum(g) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("greedy with equal weights", "[mapping][greedy]") {
  MappingGraph g(std::vector<std::size_t>{3, 3, 3, 3});
  for (const auto &u : g.vertices()) {
    for (const auto &v : g.vertices()) {
      if (u.part < v.part) g.set_weight(u, v, 0.25);
    }
  }
  const auto p = diarmap::map_labels_greedy(g);
  CHECK(p.cliques.size() == 3);
  for (const auto &c : p.cliques) CHECK(c.size() == 4);
  CHECK(diarmap::partition_weight(g, p) == Catch::Approx(3 * 6 * 0.25).margin(1e-12));
}

TEST_CASE("greedy matches a replay of the algorithm", "[mapping][greedy]") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(52, i);
    const std::size_t k = 2 + diarmap::uniform_index(rng, 3);
    const std::size_t c = 2 + diarmap::uniform_index(rng, 2);
    const auto g = diarmap::random_complete_graph(k, c, rng);
    const auto replay = diarmap::oracle::greedy_replay(g);
    const auto got = diarmap::map_labels_greedy(g);
    INFO("case " << i);
    REQUIRE(got == diarmap::canonical(replay));
    REQUIRE(diarmap::partition_weight(g, got) ==
            Catch::Approx(diarmap::oracle::summed_weight(g, replay)).margin(1e-12));
  }
}

TEST_CASE("greedy counts cliques across rounds", "[mapping][greedy]") {
  diarmap::Rng rng = diarmap::derive_rng(53, 0);
  const auto g = diarmap::random_complete_graph(3, 2, rng);
  std::uint64_t used = 0;
  diarmap::map_labels_greedy(g, {}, &used);
  CHECK(used == 8 + 1);
  CHECK_THROWS_AS(diarmap::map_labels_greedy(g, {8}), diarmap::BudgetExceeded);
  CHECK_NOTHROW(diarmap::map_labels_greedy(g, {9}));
}

TEST_CASE("greedy budget stops eleven four-speaker hypotheses", "[mapping][greedy]") {
  diarmap::Rng rng = diarmap::derive_rng(54, 0);
  const auto g10 = diarmap::random_complete_graph(10, 4, rng);
  std::uint64_t used = 0;
  CHECK_NOTHROW(diarmap::map_labels_greedy(g10, {}, &used));
  CHECK(used == 1048576 + 59049 + 1024 + 1);
  const auto g11 = diarmap::random_complete_graph(11, 4, rng);
  CHECK_THROWS_AS(diarmap::map_labels_greedy(g11), diarmap::BudgetExceeded);
}

TEST_CASE("pairwise at K=2 is the bipartite optimum", "[mapping][pairwise]") {
  const auto g = greedy_trap();
  const auto p = diarmap::map_labels_pairwise(g);
  CHECK(p == Partition{{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}}});
  CHECK(diarmap::partition_weight(g, p) == Catch::Approx(1.0).margin(1e-12));

  for (std::uint64_t i = 0; i < 300; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(55, i);
    const auto h = diarmap::random_complete_graph(2, 1 + diarmap::uniform_index(rng, 5), rng);
    REQUIRE(diarmap::partition_weight(h, diarmap::map_labels_pairwise(h)) ==
            Catch::Approx(diarmap::oracle::optimum(h)).margin(1e-9));
  }
}

TEST_CASE("pairwise keeps a third of the graph weight", "[mapping][pairwise][property]") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(56, i);
    const auto g = diarmap::random_complete_graph(3, 3, rng);
    const double w = diarmap::partition_weight(g, diarmap::map_labels_pairwise(g));
    INFO("case " << i);
    REQUIRE(w >= g.total_weight() / 3.0 - 1e-9);
    REQUIRE(w >= diarmap::oracle::optimum(g) / 3.0 - 1e-9);
  }
}

TEST_CASE("pairwise on hypotheses", "[mapping][pairwise]") {
  const auto a = hyp({{"a1", {{0, 1100}}}, {"a2", {{2000, 2500}}}});
  const auto b = hyp({{"b1", {{0, 600}, {2000, 2500}}}, {"b2", {{600, 1100}}}});
  const diarmap::PairwiseOptions absolute{diarmap::WeightMode::kAbsolute, false};
  const auto p = diarmap::map_labels_pairwise({a, b}, absolute);
  const auto g = diarmap::build_graph({a, b}, diarmap::WeightMode::kAbsolute);
  CHECK(diarmap::partition_weight(g, p) == Catch::Approx(1.0).margin(1e-12));
  CHECK(diarmap::partition_weight(g, diarmap::map_labels_greedy(g)) ==
        Catch::Approx(0.6).margin(1e-12));
}

TEST_CASE("identical hypotheses map onto themselves", "[mapping][pairwise]") {
  diarmap::Rng rng = diarmap::derive_rng(57, 0);
  for (int i = 0; i < 50; ++i) {
    // Speakers live in disjoint windows so only copies of a speaker overlap.
    Hypothesis h("r");
    for (int s = 0; s < 3; ++s) {
      IntervalSet set = diarmap::oracle::random_set(rng, 20000, 4);
      if (set.empty()) set = IntervalSet{{0, 100}};
      std::vector<diarmap::Interval> shifted;
      for (const auto &p : set.intervals()) shifted.push_back({p.begin + s * 20000, p.end + s * 20000});
      h.add_activity("s" + std::to_string(s), IntervalSet(shifted));
    }
    const std::vector<Hypothesis> hyps(4, h);
    const auto g = diarmap::build_graph(hyps);
    for (bool sort : {false, true}) {
      const auto p = diarmap::map_labels_pairwise(hyps, {diarmap::WeightMode::kRelative, sort});
      REQUIRE(diarmap::partition_weight(g, p) ==
              Catch::Approx(g.total_weight()).margin(1e-9));
    }
  }
}

TEST_CASE("unmatched speakers open new cliques", "[mapping][pairwise]") {
  const auto a = hyp({{"A", {{0, 1000}}}});
  const auto b = hyp({{"X", {{0, 1000}}}, {"Y", {{5000, 6000}}}});
  const auto p = diarmap::map_labels_pairwise({a, b});
  CHECK(p == Partition{{{{0, 0}, {1, 0}}, {{1, 1}}}});
}

TEST_CASE("merging hypotheses", "[mapping][merge]") {
  const auto h1 = hyp({{"A", {{0, 5000}}}});
  const auto h2 = hyp({{"X", {{3000, 8000}}}});
  const auto merged = diarmap::merge_hypotheses(h1, h2, {{}, {{"X", "A"}}});
  CHECK(merged.speakers() == std::vector<std::string>{"A"});
  CHECK(merged.activity("A") == IntervalSet{{0, 8000}});

  CHECK(diarmap::merge_hypotheses(h1, Hypothesis("r"), {}) == h1);
  CHECK(diarmap::merge_hypotheses(h1, h2, {}).num_speakers() == 2);

  const auto two = hyp({{"A", {{0, 10}}}, {"B", {{20, 30}}}});
  CHECK_THROWS_AS(diarmap::merge_hypotheses(two, h2, {{{"A", "Z"}, {"B", "Z"}}, {}}),
                  diarmap::Error);
}

TEST_CASE("sorting by mean DER", "[mapping][sort]") {
  const auto h = hyp({{"A", {{0, 5000}}}, {"B", {{5000, 9000}}}});
  CHECK(diarmap::sort_by_avg_der({h, h, h}) == std::vector<std::size_t>{0, 1, 2});

  const auto far = hyp({{"Q", {{20000, 30000}}}});
  CHECK(diarmap::sort_by_avg_der({far, h, h}) == std::vector<std::size_t>{1, 2, 0});

  // h1 covers 10 s, h2 covers 5 s of it: scoring h2 against h1 misses 5 s
  // (DER 0.5); scoring h1 against h2 adds 5 s false alarm (DER 1.0).
  const auto h1 = hyp({{"A", {{0, 10000}}}});
  const auto h2 = hyp({{"X", {{0, 5000}}}});
  CHECK(diarmap::sort_by_avg_der({h1, h2}) == std::vector<std::size_t>{1, 0});
  CHECK(diarmap::sort_by_avg_der({h2, h1}) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("RLS escapes the greedy trap", "[mapping][rls]") {
  const auto g = greedy_trap();
  diarmap::RlsConfig config;
  config.epochs = 100;
  const auto r = diarmap::run_rls(g, config);
  CHECK(r.weight == Catch::Approx(1.0).margin(1e-12));
  CHECK(r.partition == diarmap::brute_force_optimum(g).partition);
  CHECK(config.iterations_for(g) == 16);
}

TEST_CASE("RLS on an all-zero graph stops after one epoch", "[mapping][rls]") {
  const MappingGraph g(std::vector<std::size_t>{3, 3, 3});
  const auto r = diarmap::run_rls(g);
  CHECK(r.weight == 0.0);
  CHECK(r.epochs_run == 1);
  CHECK_NOTHROW(diarmap::validate_partition(g, r.partition));
}

TEST_CASE("RLS configuration is validated", "[mapping][rls]") {
  const auto g = greedy_trap();
  diarmap::RlsConfig config;
  config.epochs = 0;
  CHECK_THROWS_AS(diarmap::run_rls(g, config), diarmap::Error);
  config = {};
  config.patience = 0;
  CHECK_THROWS_AS(diarmap::run_rls(g, config), diarmap::Error);
  config = {};
  config.iterations = 0;
  CHECK_THROWS_AS(diarmap::run_rls(g, config), diarmap::Error);
}

TEST_CASE("RLS best weight dominates every epoch", "[mapping][rls]") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(58, i);
    const auto g = random_graph(rng, 5, 4);
    diarmap::RlsConfig config;
    config.epochs = 20;
    config.seed = i;
    const auto r = diarmap::run_rls(g, config);
    REQUIRE(r.epoch_weights.size() == r.epochs_run);
    for (double w : r.epoch_weights) REQUIRE(r.weight >= w);
    REQUIRE(r.weight == Catch::Approx(diarmap::partition_weight(g, r.partition)).margin(0));
  }
}

TEST_CASE("RLS is deterministic for a seed", "[mapping][rls][property]") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(59, i);
    const auto g = random_graph(rng, 4, 3);
    diarmap::RlsConfig config;
    config.epochs = 3;
    config.seed = diarmap::splitmix64(i);
    const auto a = diarmap::run_rls(g, config);
    const auto b = diarmap::run_rls(g, config);
    REQUIRE(a.partition == b.partition);
    REQUIRE(a.epoch_weights == b.epoch_weights);
  }
}

TEST_CASE("RLS best weight is non-decreasing in the epoch count", "[mapping][rls]") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(60, i);
    const auto g = diarmap::random_complete_graph(4, 3, rng);
    diarmap::RlsConfig config;
    config.seed = i;
    config.patience = 1000;
    config.iterations = 3;
    double previous = -1.0;
    std::vector<double> previous_epochs;
    for (std::size_t n = 1; n <= 25; ++n) {
      config.epochs = n;
      const auto r = diarmap::run_rls(g, config);
      REQUIRE(r.weight >= previous);
      REQUIRE(std::equal(previous_epochs.begin(), previous_epochs.end(),
                         r.epoch_weights.begin()));
      previous = r.weight;
      previous_epochs = r.epoch_weights;
    }
  }
}

TEST_CASE("brute force oracle", "[mapping][oracle]") {
  const auto g = greedy_trap();
  const auto best = diarmap::brute_force_optimum(g);
  CHECK(best.weight == Catch::Approx(1.0).margin(1e-12));
  CHECK(best.partition == Partition{{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}}});

  const MappingGraph zeros(std::vector<std::size_t>{2, 2, 2});
  CHECK(diarmap::brute_force_optimum(zeros).weight == 0.0);
  CHECK(diarmap::count_partitions(zeros) == 4);

  const MappingGraph big(std::vector<std::size_t>{4, 4, 4, 4, 4, 4});
  CHECK(diarmap::count_partitions(big) == 7962624);
  CHECK_THROWS_AS(diarmap::brute_force_optimum(big), diarmap::TooLarge);
}

TEST_CASE("brute force agrees with hand enumeration", "[mapping][oracle]") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(61, i);
    const std::size_t k = 2 + diarmap::uniform_index(rng, 3);
    const std::size_t c = 1 + diarmap::uniform_index(rng, 3);
    const auto g = diarmap::random_complete_graph(k, c, rng);
    const auto best = diarmap::brute_force_optimum(g);
    REQUIRE(best.weight == Catch::Approx(diarmap::oracle::optimum(g)).margin(1e-9));
    REQUIRE(diarmap::partition_weight(g, best.partition) == best.weight);
  }
}

TEST_CASE("every mapper returns a covering orthogonal partition", "[mapping][property]") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    diarmap::Rng rng = diarmap::derive_rng(62, i);
    const auto g = random_graph(rng, 4, 4);
    diarmap::RlsConfig config;
    config.epochs = 2;
    config.seed = i;
    INFO("case " << i);
    REQUIRE_NOTHROW(diarmap::validate_partition(g, diarmap::map_labels_greedy(g)));
    REQUIRE_NOTHROW(diarmap::validate_partition(g, diarmap::map_labels_pairwise(g)));
    REQUIRE_NOTHROW(diarmap::validate_partition(g, diarmap::map_labels_rls(g, config)));
    REQUIRE_NOTHROW(diarmap::validate_partition(g, diarmap::brute_force_optimum(g).partition));
  }
}

TEST_CASE("label maps round trip through partitions", "[mapping]") {
  diarmap::Rng rng = diarmap::derive_rng(63, 0);
  const auto g = diarmap::random_complete_graph(3, 3, rng);
  const auto p = diarmap::map_labels_greedy(g);
  CHECK(diarmap::to_label_map(g, p).to_partition() == p);
}
