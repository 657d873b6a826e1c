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
#include "readctl/reward.h"

#include <cmath>
#include <string>
#include <unordered_map>

#include "readctl/error.h"
#include "utf8.h"

namespace readctl {

void RewardConfig::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidSigma("reward sigma must be positive, got " +
                       std::to_string(sigma));
  }
  if (w_read < 0.0 || w_read > 1.0 || w_faith < 0.0 || w_faith > 1.0 ||
      std::abs(w_read + w_faith - 1.0) > 1e-9) {
    throw InvalidArgument("reward weights must lie in [0, 1] and sum to 1");
  }
}

double gaussian_reward(double observed, double target, double sigma) {
  if (!(sigma > 0.0)) {
    throw InvalidSigma("reward sigma must be positive, got " +
                       std::to_string(sigma));
  }
  const double d = observed - target;
  return std::exp(-(d * d) / (2.0 * sigma * sigma));
}

double lexical_faithfulness(std::string_view summary, std::string_view source) {
  const auto summary_tokens = tokenize_words(summary);
  if (summary_tokens.empty()) return 0.0;
  std::unordered_map<std::string, int> available;
  for (const auto& t : tokenize_words(source)) ++available[utf8::to_lower(t)];
  std::size_t matched = 0;
  for (const auto& t : summary_tokens) {
    auto it = available.find(utf8::to_lower(t));
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++matched;
    }
  }
  return static_cast<double>(matched) /
         static_cast<double>(summary_tokens.size());
}

double combined_reward(std::string_view summary, std::string_view source,
                       double target, const RewardConfig& config,
                       const FaithfulnessScorer& scorer,
                       const WordList& wordlist) {
  config.validate();
  const double observed = fre(compute_stats(summary, wordlist)).value;
  double reward = 0.0;
  if (config.w_read > 0.0) {
    reward += config.w_read * gaussian_reward(observed, target, config.sigma);
  }
  if (config.w_faith > 0.0) {
    reward += config.w_faith * scorer.score(summary, source);
  }
  return reward;
}

}  // namespace readctl
