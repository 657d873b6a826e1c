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
#include "readctl/eval.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "readctl/error.h"
#include "readctl/text_analysis.h"
#include "utf8.h"

namespace readctl {
namespace {

std::vector<std::string> lowered_words(std::string_view text) {
  auto words = tokenize_words(text);
  for (auto& w : words) w = utf8::to_lower(w);
  return words;
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double mean(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

std::optional<double> try_pearson(std::span<const double> xs,
                                  std::span<const double> ys,
                                  std::string_view label,
                                  std::vector<std::string>& warnings) {
  try {
    return pearson(xs, ys);
  } catch (const DegenerateVariance& e) {
    warnings.push_back(std::string(label) + " undefined: " + e.what());
    return std::nullopt;
  }
}

}  // namespace

double fre_delta(std::span<const double> targets,
                 std::span<const double> observed) {
  if (targets.size() != observed.size()) {
    throw InvalidArgument("fre_delta: series lengths differ");
  }
  if (targets.empty()) throw EmptyRun("fre_delta over an empty run");
  double total = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    total += std::abs(targets[i] - observed[i]);
  }
  return total / static_cast<double>(targets.size());
}

double fre_delta(const std::vector<RunRecord>& records) {
  std::vector<double> t, o;
  for (const auto& r : records) {
    t.push_back(r.target.resolve());
    o.push_back(r.generated.observed_fre);
  }
  return fre_delta(t, o);
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw InvalidArgument("pearson: series lengths differ");
  }
  if (xs.size() < 2) {
    throw DegenerateVariance("pearson needs at least two points");
  }
  const double mx = mean(xs), my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateVariance("pearson over a constant series");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::size_t best_of_k_index(std::span<const GenerationResult> candidates,
                            double target) {
  if (candidates.empty()) throw InvalidArgument("best-of-k needs a candidate");
  std::size_t best = 0;
  double best_gap = std::abs(candidates[0].observed_fre - target);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double gap = std::abs(candidates[i].observed_fre - target);
    if (gap < best_gap) {
      best = i;
      best_gap = gap;
    }
  }
  return best;
}

const GenerationResult& select_best_of_k(
    std::span<const GenerationResult> candidates, double target) {
  return candidates[best_of_k_index(candidates, target)];
}

double rouge_l_f1(std::string_view candidate, std::string_view reference) {
  const auto c = lowered_words(candidate);
  const auto r = lowered_words(reference);
  if (c.empty() || r.empty()) {
    throw DegenerateText("ROUGE-L needs tokens on both sides");
  }
  const double lcs = static_cast<double>(lcs_length(c, r));
  if (lcs == 0.0) return 0.0;
  const double p = lcs / static_cast<double>(c.size());
  const double rec = lcs / static_cast<double>(r.size());
  return 2.0 * p * rec / (p + rec);
}

LengthStats length_stats(std::span<const std::string> texts,
                         std::vector<std::string>* warnings) {
  LengthStats out;
  std::size_t sentences = 0, sentence_words = 0, summary_words = 0;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    std::size_t words = 0;
    std::vector<std::size_t> lengths;
    for (const auto& s : segment_sentences(texts[i])) {
      const std::size_t n = tokenize_words(s).size();
      if (n == 0) continue;
      lengths.push_back(n);
      words += n;
    }
    if (words == 0) {
      if (warnings) {
        warnings->push_back("text " + std::to_string(i) +
                            " has no words; excluded from length stats");
      }
      continue;
    }
    ++out.texts;
    for (std::size_t n : lengths) ++out.sentence_words[n];
    ++out.summary_words[words];
    sentences += lengths.size();
    sentence_words += words;
    summary_words += words;
  }
  if (out.texts > 0) {
    out.mean_sentence_words =
        static_cast<double>(sentence_words) / static_cast<double>(sentences);
    out.mean_summary_words =
        static_cast<double>(summary_words) / static_cast<double>(out.texts);
  }
  return out;
}

LengthStats length_stats(const std::vector<RunRecord>& records,
                         std::vector<std::string>* warnings) {
  std::vector<std::string> texts;
  texts.reserve(records.size());
  for (const auto& r : records) texts.push_back(r.generated.text);
  return length_stats(texts, warnings);
}

double overlap_abstractiveness(std::string_view summary,
                               std::string_view source) {
  const auto s = lowered_words(summary);
  if (s.empty()) return 1.0;
  const auto a = lowered_words(source);
  std::unordered_map<std::string, std::vector<std::size_t>> positions;
  for (std::size_t j = 0; j < a.size(); ++j) positions[a[j]].push_back(j);

  std::size_t covered = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t longest = 0;
    auto it = positions.find(s[i]);
    if (it != positions.end()) {
      for (std::size_t j : it->second) {
        std::size_t k = 0;
        while (i + k < s.size() && j + k < a.size() && s[i + k] == a[j + k]) {
          ++k;
        }
        longest = std::max(longest, k);
      }
    }
    if (longest > 0) {
      covered += longest;
      i += longest;
    } else {
      ++i;
    }
  }
  return 1.0 - static_cast<double>(covered) / static_cast<double>(s.size());
}

EvalReport build_report(const std::vector<RunRecord>& records,
                        const ReportOptions& options) {
  if (records.empty()) throw EmptyRun("no records to report on");
  EvalReport report;
  report.num_records = records.size();
  report.gfi_variant = options.gfi_variant;
  report.metadata = options.metadata;

  std::vector<double> targets, fres, gfis, clis;
  std::map<double, std::vector<std::size_t>> by_level;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const TextStats stats = compute_stats(r.generated.text);
    RecordRow row;
    row.example_id = r.example_id;
    row.target = r.target.resolve();
    row.observed_fre = r.generated.observed_fre;
    if (stats.total_words > 0) {
      row.gfi = gfi(stats, options.gfi_variant).value;
      row.cli = cli_index(stats).value;
    } else {
      report.warnings.push_back(r.example_id + ": generated text has no words");
    }
    row.length = stats.total_words;
    targets.push_back(row.target);
    fres.push_back(row.observed_fre);
    gfis.push_back(row.gfi);
    clis.push_back(row.cli);
    by_level[row.target].push_back(i);
    report.records.push_back(std::move(row));
  }

  report.fre_delta = fre_delta(targets, fres);
  report.fre_rho = try_pearson(targets, fres, "FRE rho", report.warnings);
  report.gfi_rho = try_pearson(targets, gfis, "GFI rho", report.warnings);
  report.cli_rho = try_pearson(targets, clis, "CLI rho", report.warnings);
  report.length = length_stats(records, &report.warnings);

  for (const auto& [level, members] : by_level) {
    LevelRow row;
    row.target = level;
    row.count = members.size();
    double rouge_sum = 0.0;
    std::size_t rouge_n = 0;
    std::vector<std::string> texts;
    for (std::size_t i : members) {
      const auto& rec = report.records[i];
      row.mean_fre += rec.observed_fre;
      row.mean_gfi += rec.gfi;
      row.mean_cli += rec.cli;
      row.fre_delta += std::abs(rec.target - rec.observed_fre);
      const auto& r = records[i];
      row.abstractiveness += overlap_abstractiveness(r.generated.text, r.source);
      if (r.reference_summary && rec.length > 0 &&
          !tokenize_words(*r.reference_summary).empty()) {
        rouge_sum += rouge_l_f1(r.generated.text, *r.reference_summary);
        ++rouge_n;
      }
      texts.push_back(r.generated.text);
    }
    const double n = static_cast<double>(members.size());
    row.mean_fre /= n;
    row.mean_gfi /= n;
    row.mean_cli /= n;
    row.fre_delta /= n;
    row.abstractiveness /= n;
    if (rouge_n > 0) row.rouge_l = rouge_sum / static_cast<double>(rouge_n);
    row.length = length_stats(texts);
    report.levels.push_back(std::move(row));
  }
  return report;
}

}  // namespace readctl
