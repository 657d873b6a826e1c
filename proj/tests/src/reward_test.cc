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

#include <cmath>
#include <random>

#include "readctl/error.h"
#include "readctl/reward.h"

namespace readctl {
namespace {

TEST(GaussianReward, Examples) {
  EXPECT_EQ(gaussian_reward(70, 70, 10), 1.0);
  EXPECT_NEAR(gaussian_reward(80, 70, 10), 0.60653, 1e-5);
  EXPECT_NEAR(gaussian_reward(50, 70, 10), 0.13534, 1e-5);
  EXPECT_THROW(gaussian_reward(1, 2, 0), InvalidSigma);
  EXPECT_THROW(gaussian_reward(1, 2, -3), InvalidSigma);
}

TEST(GaussianReward, RandomProperties) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> target(-50, 130), dist(0.01, 60);
  for (int i = 0; i < 1000; ++i) {
    const double t = target(rng), d = dist(rng);
    EXPECT_EQ(gaussian_reward(t, t, 10), 1.0);
    EXPECT_NEAR(gaussian_reward(t + 10, t, 10), std::exp(-0.5), 1e-12);
    EXPECT_NEAR(gaussian_reward(t - 10, t, 10), std::exp(-0.5), 1e-12);
    EXPECT_NEAR(gaussian_reward(t + d, t, 10), gaussian_reward(t - d, t, 10), 1e-12);
    EXPECT_LT(gaussian_reward(t + d * 1.01, t, 10), gaussian_reward(t + d, t, 10));
    EXPECT_LT(gaussian_reward(t + d, t, 10), 1.0);
    EXPECT_GT(gaussian_reward(t + d, t, 10), 0.0);
  }
}

TEST(LexicalFaithfulness, Examples) {
  EXPECT_EQ(lexical_faithfulness("the cat sat", "The cat sat on the mat."), 1.0);
  EXPECT_EQ(lexical_faithfulness("dogs bark", "The cat sat."), 0.0);
  EXPECT_NEAR(lexical_faithfulness("barca won decisively",
                                   "Barca won the basketball game."),
              2.0 / 3.0, 1e-12);
  EXPECT_EQ(lexical_faithfulness("", "anything"), 0.0);
  EXPECT_NEAR(lexical_faithfulness("the the", "the cat"), 0.5, 1e-12);
}

class FixedScorer : public FaithfulnessScorer {
 public:
  explicit FixedScorer(double v) : v_(v) {}
  double score(std::string_view, std::string_view) const override { return v_; }

 private:
  double v_;
};

TEST(CombinedReward, Mixing) {
  const std::string summary = "The cat sat on the mat.";
  const double f = fre_of(summary);
  const FixedScorer scorer(0.8);
  RewardConfig only_read;
  EXPECT_EQ(combined_reward(summary, "", f + 10, only_read, scorer),
            gaussian_reward(f, f + 10, 10));
  RewardConfig only_faith{10.0, 0.0, 1.0};
  EXPECT_EQ(combined_reward(summary, "", 30, only_faith, scorer), 0.8);
  RewardConfig mixed{10.0, 0.65, 0.35};
  EXPECT_NEAR(combined_reward(summary, "", f + 10, mixed, scorer),
              0.65 * 0.60653 + 0.35 * 0.8, 1e-5);
  EXPECT_NEAR(0.65 * 0.6065 + 0.35 * 0.8, 0.6742, 1e-4);
}

TEST(CombinedReward, Validation) {
  const FixedScorer scorer(1.0);
  EXPECT_THROW(combined_reward("Text here.", "", 50, {0.0, 1.0, 0.0}, scorer),
               InvalidSigma);
  EXPECT_THROW(combined_reward("Text here.", "", 50, {10.0, 0.5, 0.6}, scorer),
               InvalidArgument);
  EXPECT_THROW(combined_reward("Text here.", "", 50, {10.0, 1.5, -0.5}, scorer),
               InvalidArgument);
  EXPECT_THROW(combined_reward("", "", 50, {}, scorer), DegenerateText);
}

}  // namespace
}  // namespace readctl
