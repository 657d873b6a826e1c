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
#ifndef READCTL_READABILITY_H_
#define READCTL_READABILITY_H_

#include <optional>
#include <string>
#include <string_view>

#include "readctl/text_analysis.h"

namespace readctl {

enum class Metric { kFre, kGfi, kAri, kDcr, kCli };

std::string_view metric_name(Metric metric);

// A score always carries the metric it was computed with, so grade-style
// and ease-style scales are never mixed.
struct ReadabilityScore {
  Metric metric;
  double value;
};

// kPaper:    0.4 * (W/S + 100 * longWords / S)
// kStandard: 0.4 * (W/S + 100 * complexWords / W)
enum class GfiVariant { kPaper, kStandard };

std::optional<GfiVariant> parse_gfi_variant(std::string_view name);

// All formulas throw DegenerateText when the stats hold no words or no
// sentences.
ReadabilityScore fre(const TextStats& stats);
ReadabilityScore gfi(const TextStats& stats,
                     GfiVariant variant = GfiVariant::kPaper);
ReadabilityScore ari(const TextStats& stats);
ReadabilityScore dcr(const TextStats& stats);
// Coleman-Liau with L = letters per 100 words, S = sentences per 100 words.
ReadabilityScore cli_index(const TextStats& stats);

enum class ReadabilityCategory {
  kElevenYearOld,  // FRE >= 80
  kMiddleSchool,   // 60 <= FRE < 80
  kHighSchool,     // 40 <= FRE < 60
  kCollege,        // FRE < 40
};

inline constexpr ReadabilityCategory kAllCategories[] = {
    ReadabilityCategory::kElevenYearOld, ReadabilityCategory::kMiddleSchool,
    ReadabilityCategory::kHighSchool, ReadabilityCategory::kCollege};

ReadabilityCategory map_category(double fre_score);

// Representative FRE for a category: 90, 70, 50, 30.
double category_center(ReadabilityCategory category);

// "eleven_year_old", "middle_school", "high_school", "college".
std::string_view category_name(ReadabilityCategory category);
std::optional<ReadabilityCategory> parse_category(std::string_view name);

// Requested readability: either an FRE score or a category.
class ReadabilityTarget {
 public:
  enum class Kind { kScore, kCategory };

  static constexpr double kMinScore = -50.0;
  static constexpr double kMaxScore = 130.0;

  // Throws InvalidArgument outside [kMinScore, kMaxScore] or non-finite.
  static ReadabilityTarget score(double fre_value);
  static ReadabilityTarget category(ReadabilityCategory category);

  // Accepts "70", "score:61.5", "college", "category:high_school".
  static ReadabilityTarget parse(std::string_view text);

  Kind kind() const { return kind_; }
  double score_value() const;            // requires kind() == kScore
  ReadabilityCategory category_value() const;  // requires kind() == kCategory

  // The numeric FRE the decoder aims for: the score itself or the
  // category center.
  double resolve() const;

  std::string to_string() const;

  friend bool operator==(const ReadabilityTarget&,
                         const ReadabilityTarget&) = default;

 private:
  ReadabilityTarget(Kind kind, double score, ReadabilityCategory category)
      : kind_(kind), score_(score), category_(category) {}

  Kind kind_;
  double score_;
  ReadabilityCategory category_;
};

// Convenience: FRE of raw text. Throws DegenerateText on empty text.
double fre_of(std::string_view text,
              const WordList& wordlist = WordList::dale_chall());

}  // namespace readctl

#endif  // READCTL_READABILITY_H_
