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
#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "oracles.h"
#include "readctl/instruction.h"

namespace readctl {
namespace {

TEST(Instruction, Category) {
  EXPECT_EQ(build_category_instruction(85), "Summarize this for a 11-year-old student: ");
  EXPECT_EQ(build_category_instruction(65), "Summarize this for a middle school student: ");
  EXPECT_EQ(build_category_instruction(45), "Summarize this for a high school student: ");
  EXPECT_EQ(build_category_instruction(39), "Summarize this for a college student: ");
  EXPECT_EQ(category_instruction(ReadabilityCategory::kCollege),
            build_category_instruction(10));
}

TEST(Instruction, Score) {
  EXPECT_EQ(build_score_instruction(62.0), "Summarize this with a readability level of 62: ");
  EXPECT_EQ(build_score_instruction(61.5), "Summarize this with a readability level of 62: ");
  EXPECT_EQ(build_score_instruction(90), "Summarize this with a readability level of 90: ");
  EXPECT_EQ(build_score_instruction(-3.4), "Summarize this with a readability level of -3: ");
}

TEST(Instruction, SchemeNames) {
  EXPECT_EQ(parse_scheme("category"), InstructionScheme::kCategory);
  EXPECT_EQ(parse_scheme(scheme_name(InstructionScheme::kScore)), InstructionScheme::kScore);
  EXPECT_FALSE(parse_scheme("other").has_value());
}

const std::string kEasy = "The cat sat. It was warm. We had fun.";
const std::string kHard =
    "Legislators deliberated regarding infrastructure appropriations throughout the session.";

TEST(PrepareDataset, CategoryFromMeasuredSummaries) {
  ASSERT_GE(fre_of(kEasy), 80);
  ASSERT_LT(fre_of(kHard), 40);
  const std::vector<CorpusExample> corpus = {{"e", "Doc one.", kEasy},
                                             {"h", "Doc two.", kHard}};
  const auto cat = prepare_dataset(corpus, InstructionScheme::kCategory);
  ASSERT_EQ(cat.examples.size(), 2u);
  EXPECT_EQ(cat.examples[0].instruction, "Summarize this for a 11-year-old student: ");
  EXPECT_EQ(cat.examples[0].input, cat.examples[0].instruction + "Doc one.");
  EXPECT_EQ(cat.examples[0].target_readability,
            ReadabilityTarget::category(ReadabilityCategory::kElevenYearOld));
  EXPECT_EQ(cat.examples[1].instruction, "Summarize this for a college student: ");
  EXPECT_EQ(cat.examples[1].reference_summary, kHard);

  const auto score = prepare_dataset(corpus, InstructionScheme::kScore);
  ASSERT_EQ(score.examples.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(score.examples[i].reference_fre, cat.examples[i].reference_fre);
  }
  EXPECT_EQ(score.examples[1].target_readability,
            ReadabilityTarget::score(std::max(cat.examples[1].reference_fre,
                                              ReadabilityTarget::kMinScore)));
}

TEST(PrepareDataset, EmptyAndSkipped) {
  EXPECT_TRUE(prepare_dataset({}, InstructionScheme::kCategory).examples.empty());
  const std::vector<CorpusExample> corpus = {
      {"a", "Doc.", std::nullopt}, {"b", "Doc.", "..."}, {"c", "Doc.", kEasy}};
  const auto r = prepare_dataset(corpus, InstructionScheme::kScore);
  ASSERT_EQ(r.examples.size(), 1u);
  EXPECT_EQ(r.examples[0].id, "c");
  EXPECT_EQ(r.warnings.size(), 2u);
}

TEST(PrepareDataset, ScoreTargetsClampToRange) {
  const std::vector<CorpusExample> corpus = {
      {"x", "Doc.", "Incomprehensibility characterizes institutionalization."}};
  const auto r = prepare_dataset(corpus, InstructionScheme::kScore);
  ASSERT_EQ(r.examples.size(), 1u);
  EXPECT_LT(r.examples[0].reference_fre, ReadabilityTarget::kMinScore);
  EXPECT_EQ(r.examples[0].target_readability.score_value(), ReadabilityTarget::kMinScore);
}

TEST(FilterTestSet, KeepsHardDocuments) {
  const std::vector<CorpusExample> corpus = {
      {"hard", kHard, std::nullopt}, {"easy", kEasy, std::nullopt}, {"blank", "", std::nullopt}};
  const auto kept = filter_test_set(corpus, 50);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].id, "hard");
  EXPECT_EQ(filter_test_set(corpus, std::numeric_limits<double>::infinity()).size(), 2u);
  EXPECT_TRUE(filter_test_set({}, 50).empty());
}

TEST(ToyCorpus, SpansAllCategoriesAndHasHardDocuments) {
  const auto& corpus = testing::toy_corpus();
  EXPECT_EQ(corpus.size(), 50u);
  std::map<ReadabilityCategory, int> bins;
  for (const auto& e : corpus) bins[map_category(fre_of(*e.summary))]++;
  for (auto c : kAllCategories) EXPECT_GE(bins[c], 10) << category_name(c);
  EXPECT_GE(filter_test_set(corpus, 50).size(), 20u);
}

}  // namespace
}  // namespace readctl
