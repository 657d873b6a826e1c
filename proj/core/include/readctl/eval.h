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
#ifndef READCTL_EVAL_H_
#define READCTL_EVAL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "readctl/lookahead_decoder.h"
#include "readctl/readability.h"

namespace readctl {

struct RunRecord {
  std::string example_id;
  ReadabilityTarget target = ReadabilityTarget::score(0.0);
  GenerationResult generated;
  std::optional<std::string> reference_summary;
  std::string source;
};

// Mean |target - observed| over the pairs. Throws EmptyRun when empty and
// InvalidArgument on a length mismatch.
double fre_delta(std::span<const double> targets,
                 std::span<const double> observed);
double fre_delta(const std::vector<RunRecord>& records);

// Product-moment correlation. Throws DegenerateVariance when either series
// is constant or shorter than 2, InvalidArgument on a length mismatch.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Index of the candidate whose observed FRE is closest to `target`; ties go
// to the lowest index. Throws InvalidArgument when empty.
std::size_t best_of_k_index(std::span<const GenerationResult> candidates,
                            double target);
const GenerationResult& select_best_of_k(
    std::span<const GenerationResult> candidates, double target);

// ROUGE-L F1 over lowercased word tokens. Throws DegenerateText when
// either side has no tokens.
double rouge_l_f1(std::string_view candidate, std::string_view reference);

struct LengthStats {
  std::size_t texts = 0;
  double mean_sentence_words = 0.0;
  double mean_summary_words = 0.0;
  std::map<std::size_t, std::size_t> sentence_words;  // length -> count
  std::map<std::size_t, std::size_t> summary_words;
};

// Texts without words are excluded; one warning is appended per exclusion.
LengthStats length_stats(std::span<const std::string> texts,
                         std::vector<std::string>* warnings = nullptr);
LengthStats length_stats(const std::vector<RunRecord>& records,
                         std::vector<std::string>* warnings = nullptr);

// 1 - (share of summary tokens covered by greedy maximal fragments shared
// with the source). 1 for a summary without tokens.
double overlap_abstractiveness(std::string_view summary,
                               std::string_view source);

struct LevelRow {
  double target = 0.0;
  std::size_t count = 0;
  double mean_fre = 0.0;
  double mean_gfi = 0.0;
  double mean_cli = 0.0;
  double fre_delta = 0.0;
  std::optional<double> rouge_l;  // absent without references
  double abstractiveness = 0.0;
  LengthStats length;
};

struct RecordRow {
  std::string example_id;
  double target = 0.0;
  double observed_fre = 0.0;
  double gfi = 0.0;
  double cli = 0.0;
  std::size_t length = 0;  // words
};

struct EvalReport {
  std::size_t num_records = 0;
  double fre_delta = 0.0;
  std::optional<double> fre_rho;  // rho(target, FRE)
  std::optional<double> gfi_rho;  // rho(target, GFI)
  std::optional<double> cli_rho;  // rho(target, CLI)
  GfiVariant gfi_variant = GfiVariant::kPaper;
  std::vector<LevelRow> levels;  // ascending target
  std::vector<RecordRow> records;
  LengthStats length;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> warnings;
};

struct ReportOptions {
  GfiVariant gfi_variant = GfiVariant::kPaper;
  std::vector<std::pair<std::string, std::string>> metadata;
};

// Correlations are pooled over all records. A correlation that is
// undefined (fewer than two records or a constant series) is left absent
// and noted in `warnings`. Throws EmptyRun when there are no records.
EvalReport build_report(const std::vector<RunRecord>& records,
                        const ReportOptions& options = {});

// One row per setting of an ablation sweep.
struct SweepRow {
  std::string parameter;
  double value = 0.0;
  EvalReport report;
};

// Serializations. JSON output is stable across runs for equal input.
std::string report_to_json(const EvalReport& report);
std::string report_to_csv(const EvalReport& report);
std::string report_to_table(const EvalReport& report);
std::string records_to_csv(const EvalReport& report);
std::string sweep_to_json(const std::vector<SweepRow>& rows,
                          const std::vector<std::pair<std::string, std::string>>&
                              metadata = {});
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_table(const std::vector<SweepRow>& rows);

}  // namespace readctl

#endif  // READCTL_EVAL_H_
