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
//
// Copyright 2026 The readctl Authors.

// Acceptance criteria runner. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "pipeline.h"
#include "readctl/error.h"
#include "readctl/eval.h"
#include "readctl/reward.h"
#include "readctl/source_mixture_model.h"

namespace readctl {
namespace {

// Tolerances.
constexpr double kFormulaTol = 1e-9;
constexpr double kWorkedFreTol = 2.0;
constexpr double kWorkedGfiTol = 0.5;
constexpr double kWorkedCliTol = 0.5;
constexpr double kRewardTol = 1e-12;
constexpr double kOracleGTol = 1e-9;
constexpr double kPearsonTol = 1e-12;
constexpr double kRougeTol = 1e-12;

// Reference desk setup.
constexpr double kSourceWeight = 0.5;
constexpr double kFilterBelow = 50.0;
constexpr double kTargets[] = {30, 50, 70, 90};
constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct DeskRun {
  EvalReport report;
  // First three n-best candidates per (document, target), plus the target.
  std::vector<std::pair<double, std::vector<GenerationResult>>> candidates;
  double seconds = 0.0;
};

DeskRun desk_run(double w, int n) {
  const auto start = std::chrono::steady_clock::now();
  const SourceMixtureModel model(testing::toy_summary_model(), kSourceWeight);
  DecoderConfig config;
  config.lookahead_w = w;
  config.lookahead_n = n;
  config.seed = kSeed;
  LookaheadDecoder decoder(model, config);
  DeskRun run;
  std::vector<RunRecord> records;
  for (const auto& e : filter_test_set(testing::toy_corpus(), kFilterBelow)) {
    for (double t : kTargets) {
      const auto target = ReadabilityTarget::score(t);
      auto n_best = decoder.decode_n_best(e.document, target);
      RunRecord r;
      r.example_id = e.id;
      r.target = target;
      r.generated = n_best.front();
      r.reference_summary = e.summary;
      r.source = e.document;
      records.push_back(std::move(r));
      if (n_best.size() > 3) n_best.resize(3);
      run.candidates.emplace_back(t, std::move(n_best));
    }
  }
  run.report = build_report(records);
  run.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return run;
}

Outcome formula_fidelity() {
  std::ifstream in(testing::test_data_dir() / "formula_oracle.tsv");
  std::string line;
  int rows = 0;
  double worst = 0.0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, '\t');) f.push_back(cell);
    TextStats s;
    s.total_words = std::stoul(f[0]);
    s.total_sentences = std::stoul(f[1]);
    s.total_syllables = std::stoul(f[2]);
    s.total_letters = std::stoul(f[3]);
    s.long_words = std::stoul(f[4]);
    s.complex_words = std::stoul(f[5]);
    s.difficult_words = std::stoul(f[6]);
    const double got[] = {fre(s).value, gfi(s, GfiVariant::kPaper).value,
                          gfi(s, GfiVariant::kStandard).value, ari(s).value,
                          dcr(s).value, cli_index(s).value};
    for (int k = 0; k < 6; ++k) {
      worst = std::max(worst, std::abs(got[k] - std::stod(f[7 + k])));
    }
    ++rows;
  }
  return {rows == 20 && worst <= kFormulaTol,
          fmt("%d texts, max |error| %.3g (tol %.0e)", rows, worst, kFormulaTol)};
}

// Reference texts with their published (FRE, standard GFI, CLI) triples.
Outcome worked_example() {
  std::ifstream in(testing::test_data_dir() / "worked_example.tsv");
  bool ok = true;
  int rows = 0;
  std::string detail, line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> c;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, '\t');) c.push_back(cell);
    const double want_fre = std::stod(c[1]), want_gfi = std::stod(c[2]),
                 want_cli = std::stod(c[3]);
    const TextStats s = compute_stats(c[4]);
    const double f = fre(s).value;
    const double g = gfi(s, GfiVariant::kStandard).value;
    const double l = cli_index(s).value;
    const bool row_ok = std::abs(f - want_fre) <= kWorkedFreTol &&
                        std::abs(g - want_gfi) <= kWorkedGfiTol &&
                        std::abs(l - want_cli) <= kWorkedCliTol;
    ok = ok && row_ok;
    ++rows;
    detail += fmt("%s%s (%.1f,%.1f,%.1f) vs (%.1f,%.1f,%.1f)%s",
                  detail.empty() ? "" : "; ", c[0].c_str(), f, g, l, want_fre,
                  want_gfi, want_cli, row_ok ? "" : " out of tolerance");
  }
  return {ok && rows == 5, detail};
}

Outcome reward_properties() {
  bool ok = gaussian_reward(70, 70, 10) == 1.0;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> target(-50, 130), dist(0.01, 60);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const double t = target(rng), d = dist(rng);
    const bool good =
        gaussian_reward(t, t, 10) == 1.0 &&
        std::abs(gaussian_reward(t + 10, t, 10) - std::exp(-0.5)) <= kRewardTol &&
        std::abs(gaussian_reward(t - 10, t, 10) - std::exp(-0.5)) <= kRewardTol &&
        std::abs(gaussian_reward(t + d, t, 10) - gaussian_reward(t - d, t, 10)) <= kRewardTol &&
        gaussian_reward(t + d * 1.01, t, 10) < gaussian_reward(t + d, t, 10) &&
        gaussian_reward(t + d, t, 10) < 1.0;
    if (!good) ++violations;
  }
  ok = ok && violations == 0;
  return {ok, fmt("1000 random (target, d), %d violations", violations)};
}

Outcome decoder_reduction() {
  const SourceMixtureModel model(testing::toy_summary_model(), kSourceWeight);
  DecoderConfig config;
  config.lookahead_w = 0.0;
  config.candidate_fanout = config.beam_width;
  const auto& corpus = testing::toy_corpus();
  int same = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto& doc = corpus[i * 5].document;
    const auto got = decode(model, doc, ReadabilityTarget::score(50), config);
    if (got.tokens == testing::plain_beam_search(model, doc, config)) ++same;
  }
  return {same == 10, fmt("%d/10 inputs token-identical to plain beam search", same)};
}

Outcome decoder_oracle() {
  const std::vector<std::string> words = {"a", "cat", "elephant", "."};
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> target(20, 120), weight(0.5, 40);
  int optimal = 0;
  std::size_t enumerated = 0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_micro_model(words, 500 + trial);
    DecoderConfig c;
    c.beam_width = 1000;
    c.candidate_fanout = 1000;
    c.max_len = 4;
    c.min_len = static_cast<int>(trial % 3);
    c.lookahead_w = weight(rng);
    c.lookahead_n = 1 + static_cast<int>(trial % 4);
    c.h_scale = trial % 2 ? HScale::kRaw : HScale::kNormalized;
    const double r = target(rng);
    const auto oracle = testing::brute_force_best(m, "", r, c);
    enumerated += oracle.sequences;
    try {
      const auto got = decode(m, "", ReadabilityTarget::score(r), c);
      if (std::abs(got.score - oracle.g) <= kOracleGTol && got.tokens == oracle.tokens) {
        ++optimal;
      }
    } catch (const EmptyGeneration&) {
    }
  }
  return {optimal == 20,
          fmt("%d/20 micro models at the brute-force argmax (%zu sequences enumerated)",
              optimal, enumerated)};
}

Outcome best_of_k(const DeskRun& baseline) {
  int never_worse = 0, strictly_better = 0, sets = 0;
  for (const auto& [target, cands] : baseline.candidates) {
    ++sets;
    const auto& chosen = select_best_of_k(cands, target);
    const double first = std::abs(cands.front().observed_fre - target);
    const double best = std::abs(chosen.observed_fre - target);
    if (best <= first) ++never_worse;
    if (cands.size() == 3 && best < first) ++strictly_better;
  }
  const bool ok = sets == 100 && never_worse == sets && 2 * strictly_better >= sets;
  return {ok, fmt("%d sets (w=0 n-best, k=3): never worse %d, strictly better %d",
                  sets, never_worse, strictly_better)};
}

Outcome statistics_oracles() {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> len(2, 60);
  std::normal_distribution<double> noise(0, 1);
  double worst_pearson = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int n = len(rng);
    std::vector<double> x(n), y(n);
    const double slope = noise(rng);
    for (int i = 0; i < n; ++i) {
      x[i] = 50 + 20 * noise(rng);
      y[i] = slope * x[i] + 10 * noise(rng);
    }
    worst_pearson = std::max(
        worst_pearson, std::abs(pearson(x, y) - testing::definitional_pearson(x, y)));
  }
  double worst_rouge = 0.0;
  int pairs = 0;
  for (const auto& c : testing::rouge_hand_cases()) {
    worst_rouge = std::max(worst_rouge, std::abs(rouge_l_f1(c.candidate, c.reference) - c.f1));
    ++pairs;
  }
  return {worst_pearson <= kPearsonTol && worst_rouge <= kRougeTol && pairs == 10,
          fmt("pearson max |error| %.3g on 50 vectors; rouge-l max |error| %.3g on %d pairs",
              worst_pearson, worst_rouge, pairs)};
}

Outcome determinism() {
  const auto checks = testing::pipeline_replay(testing::scratch_dir("acceptance"));
  int identical = 0;
  std::string failures;
  for (const auto& c : checks) {
    if (c.identical) {
      ++identical;
    } else {
      failures += " " + c.command + " (" + c.detail + ")";
    }
  }
  return {identical == static_cast<int>(checks.size()) && !checks.empty(),
          fmt("%d/%zu manifests replayed byte-identically", identical, checks.size()) +
              failures};
}

int run() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "formula fidelity", formula_fidelity);
  report(2, "worked example", worked_example);
  report(3, "reward properties", reward_properties);
  report(4, "decoder reduction", decoder_reduction);
  report(5, "decoder oracle optimality", decoder_oracle);

  const DeskRun baseline = desk_run(0.0, 20);
  const DeskRun lookahead = desk_run(25.0, 20);
  const DeskRun short_horizon = desk_run(25.0, 3);
  const auto rho = [](const std::optional<double>& r) { return r.value_or(NAN); };

  report(6, "control efficacy", [&] {
    const auto& b = baseline.report;
    const auto& l = lookahead.report;
    const bool ok = l.fre_delta < b.fre_delta && l.fre_rho && b.fre_rho &&
                    *l.fre_rho > *b.fre_rho;
    return Outcome{ok, fmt("delta %.2f (w=25,n=20) vs %.2f (w=0); rho %.3f vs %.3f; %zu records",
                           l.fre_delta, b.fre_delta, rho(l.fre_rho), rho(b.fre_rho),
                           l.num_records)};
  });
  report(7, "horizon trend", [&] {
    const double d20 = lookahead.report.fre_delta, d3 = short_horizon.report.fre_delta;
    return Outcome{d20 <= d3, fmt("delta(n=20) %.2f vs delta(n=3) %.2f", d20, d3)};
  });
  report(8, "best-of-k", [&] { return best_of_k(baseline); });
  report(9, "sign conventions", [&] {
    const auto& l = lookahead.report;
    const bool ok = l.gfi_rho && l.cli_rho && *l.gfi_rho < 0 && *l.cli_rho < 0;
    return Outcome{ok, fmt("rho(target, GFI) %.3f, rho(target, CLI) %.3f",
                           rho(l.gfi_rho), rho(l.cli_rho))};
  });
  report(10, "statistics oracles", statistics_oracles);
  report(11, "determinism", determinism);

  std::printf("desk runs: w=0 %.1fs, n=20 %.1fs, n=3 %.1fs\n", baseline.seconds,
              lookahead.seconds, short_horizon.seconds);
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace readctl

int main() { return readctl::run(); }
