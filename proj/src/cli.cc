// diarmap/src/cli.cc
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

#include "diarmap/cli.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "diarmap/error.h"
#include "diarmap/experiments.h"
#include "diarmap/pipeline.h"
#include "diarmap/rttm.h"
#include "diarmap/scoring.h"
#include "diarmap/synthetic.h"

namespace diarmap {

namespace {

constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

std::string fixed(double v, int decimals = 6) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

struct CombineArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::string method = "pairwise";
  bool sort_by_der = true;
  std::string weight = "relative";
  std::uint64_t seed = 0;
  std::size_t rls_epochs = 1000;
  std::size_t rls_iters = 0;
  std::size_t patience = 100;
  std::uint64_t clique_budget = kDefaultCliqueBudget;
  bool rank_weighting = false;
};

int cmd_combine(const CombineArgs &args, std::ostream &err) {
  CombineOptions options;
  options.method = parse_method(args.method);
  options.sort_by_der = args.sort_by_der;
  options.weight_mode =
      args.weight == "absolute" ? WeightMode::kAbsolute : WeightMode::kRelative;
  options.seed = args.seed;
  options.rls_epochs = args.rls_epochs;
  if (args.rls_iters > 0) options.rls_iterations = args.rls_iters;
  options.patience = args.patience;
  options.clique_budget = args.clique_budget;
  options.rank_weighting = args.rank_weighting;

  std::vector<std::map<std::string, Hypothesis>> files;
  for (const auto &path : args.inputs) files.push_back(read_rttm_file(path));

  std::set<std::string> recordings;
  for (const auto &[rec, _] : files.front()) recordings.insert(rec);
  for (std::size_t f = 1; f < files.size(); ++f) {
    std::set<std::string> other;
    for (const auto &[rec, _] : files[f]) other.insert(rec);
    if (other != recordings) {
      throw Error("'" + args.inputs[f] + "' covers different recordings than '" +
                  args.inputs.front() + "'");
    }
  }

  std::map<std::string, Hypothesis> combined;
  for (const auto &rec : recordings) {
    std::vector<Hypothesis> hyps;
    for (const auto &file : files) hyps.push_back(file.at(rec));
    CombineResult result;
    try {
      result = combine_recording(hyps, options);
    } catch (const BudgetExceeded &e) {
      err << "error: " << rec << ": " << e.what()
          << "; rerun with --method pairwise (or raise --clique-budget)\n";
      return kExitBudget;
    }
    err << rec << " method=" << to_string(options.method)
        << " w(Phi)=" << fixed(result.weight) << " w(G)=" << fixed(result.graph_weight)
        << " time_ms=" << fixed(result.mapping_ms, 3) << '\n';
    combined.emplace(rec, std::move(result.combined));
  }
  write_rttm_file(args.output, write_rttm(combined));
  return 0;
}

int cmd_score(const std::string &ref_path, const std::string &sys_path, double collar,
              std::ostream &out) {
  const auto refs = read_rttm_file(ref_path);
  const auto systems = read_rttm_file(sys_path);
  ScoringOptions options;
  options.collar = seconds_to_millis(collar);

  DerReport total;
  for (const auto &[rec, ref] : refs) {
    auto it = systems.find(rec);
    const Hypothesis hyp = it == systems.end() ? Hypothesis(rec) : it->second;
    const auto r = compute_der(ref, hyp, options);
    total.missed_speech += r.missed_speech;
    total.false_alarm += r.false_alarm;
    total.speaker_error += r.speaker_error;
    total.total_reference_speech += r.total_reference_speech;
  }
  for (const auto &[rec, hyp] : systems) {
    if (!refs.contains(rec)) {
      total.false_alarm += millis_to_seconds(hyp.total_speaker_time());
    }
  }
  if (total.total_reference_speech <= 0.0) throw Error("reference holds no speech");
  total.der = (total.missed_speech + total.false_alarm + total.speaker_error) /
              total.total_reference_speech;
  out << format_der_table(total);
  return 0;
}

struct BenchArgs {
  std::string mode;
  std::size_t speakers = 4;
  std::size_t min_k = 2;
  std::size_t max_k = 8;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::uint64_t clique_budget = kDefaultCliqueBudget;
  std::string dump_graph;
};

int cmd_bench(const BenchArgs &args, std::ostream &out, std::ostream &err) {
  if (!args.dump_graph.empty()) {
    Rng rng = derive_rng(args.seed, args.max_k);
    write_rttm_file(args.dump_graph,
                    write_edge_list(random_complete_graph(args.max_k, args.speakers, rng)));
  }
  if (args.mode == "timing") {
    out << "k,method,median_ms\n";
    for (const auto &p : timing_study(args.speakers, args.min_k, args.max_k, args.trials,
                                      args.seed, args.clique_budget)) {
      if (p.skipped) {
        err << "warning: greedy skipped at K=" << p.k << " (clique budget)\n";
      } else if (p.method == "greedy") {
        err << "K=" << p.k << " greedy enumerated " << p.cliques << " cliques\n";
      }
      out << p.k << ',' << p.method << ',' << fixed(p.median_ms, 4) << '\n';
    }
  } else if (args.mode == "approx") {
    out << "trial,w_pairwise,w_rls,w_greedy,w_opt,w_G\n";
    double worst = 1.0;
    for (const auto &r : approx_study(args.speakers, args.max_k, args.trials, args.seed, &err)) {
      out << r.trial << ',' << fixed(r.w_pairwise) << ',' << fixed(r.w_rls) << ','
          << fixed(r.w_greedy) << ',' << fixed(r.w_opt) << ',' << fixed(r.w_graph) << '\n';
      if (r.w_opt > 0.0) worst = std::min(worst, r.w_pairwise / r.w_opt);
    }
    err << "min w_pairwise/w_opt = " << fixed(worst) << " (bound 1/C = "
        << fixed(1.0 / static_cast<double>(args.speakers)) << ")\n";
  } else if (args.mode == "weight_vs_der") {
    out << "trial,weight,der\n";
    std::vector<double> w, d;
    for (const auto &r : weight_vs_der_study(args.speakers, args.max_k, args.trials, args.seed)) {
      out << r.trial << ',' << fixed(r.weight) << ',' << fixed(r.der) << '\n';
      w.push_back(r.weight);
      d.push_back(r.der);
    }
    out << "# spearman," << fixed(spearman(w, d)) << '\n';
  } else {
    throw Error("unknown bench mode '" + args.mode + "'");
  }
  return 0;
}

struct SynthArgs {
  std::size_t speakers = 4;
  std::size_t hyps = 3;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string noise = "moderate";
  double level = 1.0;
  double duration = 300.0;
};

int cmd_synth(const SynthArgs &args, std::ostream &out) {
  NoiseParams noise;
  if (args.noise == "moderate") {
    noise = NoiseParams::moderate().scaled(args.level);
  } else if (args.noise != "none") {
    throw Error("unknown noise preset '" + args.noise + "'");
  }
  ReferenceParams params;
  params.duration = seconds_to_millis(args.duration);
  const auto ensemble = gen_synthetic(args.speakers, args.hyps, noise, args.seed, params);
  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  const auto ref_path = (dir / "ref.rttm").string();
  write_rttm_file(ref_path, write_rttm(ensemble.reference));
  out << ref_path << '\n';
  for (std::size_t k = 0; k < ensemble.hypotheses.size(); ++k) {
    const auto path = (dir / ("hyp" + std::to_string(k + 1) + ".rttm")).string();
    write_rttm_file(path, write_rttm(ensemble.hypotheses[k]));
    out << path << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Combine overlap-aware speaker diarization hypotheses"};
  app.require_subcommand(1);

  CombineArgs combine_args;
  auto *combine_cmd = app.add_subcommand("combine", "Combine RTTM hypotheses");
  combine_cmd->add_option("-i,--input", combine_args.inputs, "Input RTTM files")
      ->required()
      ->expected(2, -1);
  combine_cmd->add_option("-o,--output", combine_args.output, "Output RTTM")->required();
  combine_cmd->add_option("--method", combine_args.method, "Label mapping method")
      ->check(CLI::IsMember({"greedy", "pairwise", "rls"}));
  combine_cmd->add_flag("--sort-by-der,!--no-sort-by-der", combine_args.sort_by_der,
                        "Order hypotheses by mean DER before pairwise mapping");
  combine_cmd->add_option("--weight", combine_args.weight, "Edge weight mode")
      ->check(CLI::IsMember({"relative", "absolute"}));
  combine_cmd->add_option("--seed", combine_args.seed, "RLS seed");
  combine_cmd->add_option("--rls-epochs", combine_args.rls_epochs, "RLS epochs (N)")
      ->check(CLI::PositiveNumber);
  combine_cmd->add_option("--rls-iters", combine_args.rls_iters,
                          "RLS iterations per epoch (M, default 4*C*K)")
      ->check(CLI::PositiveNumber);
  combine_cmd->add_option("--patience", combine_args.patience,
                          "RLS epochs without improvement before stopping")
      ->check(CLI::PositiveNumber);
  combine_cmd->add_option("--clique-budget", combine_args.clique_budget,
                          "Greedy maximal clique budget");
  combine_cmd->add_flag("--rank-weighting", combine_args.rank_weighting,
                        "Weight votes by 1/rank instead of uniformly");

  std::string ref_path, sys_path;
  double collar = 0.0;
  auto *score_cmd = app.add_subcommand("score", "Diarization error rate");
  score_cmd->add_option("-r,--reference", ref_path, "Reference RTTM")->required();
  score_cmd->add_option("-s,--system", sys_path, "System RTTM")->required();
  score_cmd->add_option("--collar", collar, "No-score collar in seconds")
      ->check(CLI::NonNegativeNumber);

  BenchArgs bench_args;
  auto *bench_cmd = app.add_subcommand("bench", "Label mapping studies (CSV output)");
  bench_cmd->add_option("--mode", bench_args.mode, "Study")
      ->required()
      ->check(CLI::IsMember({"timing", "weight_vs_der", "approx"}));
  bench_cmd->add_option("--speakers", bench_args.speakers, "Speakers per hypothesis (C)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--min-k", bench_args.min_k, "Smallest K (timing)");
  bench_cmd->add_option("--max-k", bench_args.max_k, "Largest K (timing), K otherwise")
      ->check(CLI::Range(2, 64));
  bench_cmd->add_option("--trials", bench_args.trials,
                        "Trials (approx, weight_vs_der) or repetitions (timing)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_args.seed, "Seed");
  bench_cmd->add_option("--clique-budget", bench_args.clique_budget,
                        "Greedy maximal clique budget");
  bench_cmd->add_option("--dump-graph", bench_args.dump_graph,
                        "Write the K=max-k graph as an edge list");

  SynthArgs synth_args;
  auto *synth_cmd = app.add_subcommand("synth", "Generate a synthetic ensemble");
  synth_cmd->add_option("--speakers", synth_args.speakers, "Reference speakers (C)")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--hyps", synth_args.hyps, "Hypotheses (K)")
      ->check(CLI::Range(2, 1000));
  synth_cmd->add_option("--seed", synth_args.seed, "Seed");
  synth_cmd->add_option("--out-dir", synth_args.out_dir, "Output directory");
  synth_cmd->add_option("--noise", synth_args.noise, "Noise preset")
      ->check(CLI::IsMember({"none", "moderate"}));
  synth_cmd->add_option("--level", synth_args.level, "Noise scale factor")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--duration", synth_args.duration, "Recording length (s)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    if (*combine_cmd) return cmd_combine(combine_args, err);
    if (*score_cmd) return cmd_score(ref_path, sys_path, collar, out);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
    if (*synth_cmd) return cmd_synth(synth_args, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

}  // namespace diarmap
