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
#include "readctl/readability.h"

#include <charconv>
#include <cmath>
#include <string>

#include "readctl/error.h"

namespace readctl {
namespace {

void require_text(const TextStats& stats, Metric metric) {
  if (stats.total_words == 0 || stats.total_sentences == 0) {
    throw DegenerateText(std::string(metric_name(metric)) +
                         " is undefined on text without words or sentences");
  }
}

double words_per_sentence(const TextStats& s) {
  return static_cast<double>(s.total_words) /
         static_cast<double>(s.total_sentences);
}

std::optional<double> parse_double(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kFre: return "FRE";
    case Metric::kGfi: return "GFI";
    case Metric::kAri: return "ARI";
    case Metric::kDcr: return "DCR";
    case Metric::kCli: return "CLI";
  }
  return "?";
}

std::optional<GfiVariant> parse_gfi_variant(std::string_view name) {
  if (name == "paper") return GfiVariant::kPaper;
  if (name == "standard") return GfiVariant::kStandard;
  return std::nullopt;
}

ReadabilityScore fre(const TextStats& stats) {
  require_text(stats, Metric::kFre);
  const double syllables_per_word = static_cast<double>(stats.total_syllables) /
                                    static_cast<double>(stats.total_words);
  return {Metric::kFre,
          206.835 - 1.015 * words_per_sentence(stats) - 84.6 * syllables_per_word};
}

ReadabilityScore gfi(const TextStats& stats, GfiVariant variant) {
  require_text(stats, Metric::kGfi);
  const double hard =
      variant == GfiVariant::kPaper
          ? 100.0 * static_cast<double>(stats.long_words) /
                static_cast<double>(stats.total_sentences)
          : 100.0 * static_cast<double>(stats.complex_words) /
                static_cast<double>(stats.total_words);
  return {Metric::kGfi, 0.4 * (words_per_sentence(stats) + hard)};
}

ReadabilityScore ari(const TextStats& stats) {
  require_text(stats, Metric::kAri);
  const double letters_per_word = static_cast<double>(stats.total_letters) /
                                  static_cast<double>(stats.total_words);
  return {Metric::kAri,
          4.71 * letters_per_word + 0.5 * words_per_sentence(stats) - 21.43};
}

ReadabilityScore dcr(const TextStats& stats) {
  require_text(stats, Metric::kDcr);
  const double difficult_pct = static_cast<double>(stats.difficult_words) /
                               static_cast<double>(stats.total_words) * 100.0;
  return {Metric::kDcr,
          0.1579 * difficult_pct + 0.0496 * words_per_sentence(stats)};
}

ReadabilityScore cli_index(const TextStats& stats) {
  require_text(stats, Metric::kCli);
  const double per_100 = 100.0 / static_cast<double>(stats.total_words);
  const double letters = static_cast<double>(stats.total_letters) * per_100;
  const double sentences = static_cast<double>(stats.total_sentences) * per_100;
  return {Metric::kCli, 0.0588 * letters - 0.296 * sentences - 15.8};
}

ReadabilityCategory map_category(double fre_score) {
  if (fre_score >= 80.0) return ReadabilityCategory::kElevenYearOld;
  if (fre_score >= 60.0) return ReadabilityCategory::kMiddleSchool;
  if (fre_score >= 40.0) return ReadabilityCategory::kHighSchool;
  return ReadabilityCategory::kCollege;
}

double category_center(ReadabilityCategory category) {
  switch (category) {
    case ReadabilityCategory::kElevenYearOld: return 90.0;
    case ReadabilityCategory::kMiddleSchool: return 70.0;
    case ReadabilityCategory::kHighSchool: return 50.0;
    case ReadabilityCategory::kCollege: return 30.0;
  }
  return 0.0;
}

std::string_view category_name(ReadabilityCategory category) {
  switch (category) {
    case ReadabilityCategory::kElevenYearOld: return "eleven_year_old";
    case ReadabilityCategory::kMiddleSchool: return "middle_school";
    case ReadabilityCategory::kHighSchool: return "high_school";
    case ReadabilityCategory::kCollege: return "college";
  }
  return "?";
}

std::optional<ReadabilityCategory> parse_category(std::string_view name) {
  for (auto c : kAllCategories) {
    if (category_name(c) == name) return c;
  }
  return std::nullopt;
}

ReadabilityTarget ReadabilityTarget::score(double fre_value) {
  if (!std::isfinite(fre_value) || fre_value < kMinScore ||
      fre_value > kMaxScore) {
    throw InvalidArgument("target FRE " + std::to_string(fre_value) +
                          " outside [-50, 130]");
  }
  return ReadabilityTarget(Kind::kScore, fre_value,
                           ReadabilityCategory::kElevenYearOld);
}

ReadabilityTarget ReadabilityTarget::category(ReadabilityCategory category) {
  return ReadabilityTarget(Kind::kCategory, 0.0, category);
}

ReadabilityTarget ReadabilityTarget::parse(std::string_view text) {
  if (text.starts_with("score:")) text.remove_prefix(6);
  if (text.starts_with("category:")) text.remove_prefix(9);
  if (auto c = parse_category(text)) return category(*c);
  if (auto v = parse_double(text)) return score(*v);
  throw InvalidArgument("unrecognised readability target '" +
                        std::string(text) + "'");
}

double ReadabilityTarget::score_value() const {
  if (kind_ != Kind::kScore) throw InvalidArgument("target is a category");
  return score_;
}

ReadabilityCategory ReadabilityTarget::category_value() const {
  if (kind_ != Kind::kCategory) throw InvalidArgument("target is a score");
  return category_;
}

double ReadabilityTarget::resolve() const {
  return kind_ == Kind::kScore ? score_ : category_center(category_);
}

std::string ReadabilityTarget::to_string() const {
  if (kind_ == Kind::kCategory) return std::string(category_name(category_));
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, score_);
  return std::string(buf, ptr);
}

double fre_of(std::string_view text, const WordList& wordlist) {
  return fre(compute_stats(text, wordlist)).value;
}

}  // namespace readctl
