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
#include "readctl/instruction.h"

#include <algorithm>
#include <cmath>

#include "readctl/error.h"

namespace readctl {

std::string_view scheme_name(InstructionScheme scheme) {
  return scheme == InstructionScheme::kCategory ? "category" : "score";
}

std::optional<InstructionScheme> parse_scheme(std::string_view name) {
  if (name == "category") return InstructionScheme::kCategory;
  if (name == "score") return InstructionScheme::kScore;
  return std::nullopt;
}

std::string category_instruction(ReadabilityCategory category) {
  switch (category) {
    case ReadabilityCategory::kElevenYearOld:
      return "Summarize this for a 11-year-old student: ";
    case ReadabilityCategory::kMiddleSchool:
      return "Summarize this for a middle school student: ";
    case ReadabilityCategory::kHighSchool:
      return "Summarize this for a high school student: ";
    case ReadabilityCategory::kCollege:
      return "Summarize this for a college student: ";
  }
  return {};
}

std::string build_category_instruction(double reference_fre) {
  return category_instruction(map_category(reference_fre));
}

std::string build_score_instruction(double fre_value) {
  if (!std::isfinite(fre_value)) {
    throw InvalidArgument("readability level must be finite");
  }
  // std::round sends halves away from zero: 61.5 -> 62, -0.5 -> -1.
  const long long level = std::llround(fre_value);
  return "Summarize this with a readability level of " + std::to_string(level) +
         ": ";
}

PrepareResult prepare_dataset(const std::vector<CorpusExample>& corpus,
                              InstructionScheme scheme,
                              const WordList& wordlist) {
  PrepareResult out;
  for (const auto& ex : corpus) {
    if (!ex.summary) {
      out.warnings.push_back(ex.id + ": no reference summary, skipped");
      continue;
    }
    const TextStats stats = compute_stats(*ex.summary, wordlist);
    if (stats.total_words == 0) {
      out.warnings.push_back(ex.id + ": summary has no words, skipped");
      continue;
    }
    InstructionExample item;
    item.id = ex.id;
    item.reference_summary = *ex.summary;
    item.reference_fre = fre(stats).value;
    if (scheme == InstructionScheme::kCategory) {
      const auto category = map_category(item.reference_fre);
      item.instruction = category_instruction(category);
      item.target_readability = ReadabilityTarget::category(category);
    } else {
      item.instruction = build_score_instruction(item.reference_fre);
      item.target_readability = ReadabilityTarget::score(
          std::clamp(item.reference_fre, ReadabilityTarget::kMinScore,
                     ReadabilityTarget::kMaxScore));
    }
    item.input = item.instruction + ex.document;
    out.examples.push_back(std::move(item));
  }
  return out;
}

std::vector<CorpusExample> filter_test_set(
    const std::vector<CorpusExample>& corpus, double threshold,
    const WordList& wordlist) {
  std::vector<CorpusExample> kept;
  for (const auto& ex : corpus) {
    const TextStats stats = compute_stats(ex.document, wordlist);
    if (stats.total_words == 0) continue;
    if (fre(stats).value < threshold) kept.push_back(ex);
  }
  return kept;
}

}  // namespace readctl
