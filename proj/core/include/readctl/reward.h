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
#ifndef READCTL_REWARD_H_
#define READCTL_REWARD_H_

#include <string_view>

#include "readctl/readability.h"
#include "readctl/text_analysis.h"

namespace readctl {

// Gaussian width in FRE points plus the mixing weights used by
// combined_reward. Each readability category spans 20 FRE points; the
// default sigma is half of that.
struct RewardConfig {
  double sigma = 10.0;
  double w_read = 1.0;
  double w_faith = 0.0;

  // Throws InvalidSigma for sigma <= 0 and InvalidArgument when the
  // weights leave [0, 1] or do not sum to 1 (within 1e-9).
  void validate() const;
};

// Scores how well a summary is supported by its source, in [0, 1].
// Implementations must be deterministic and safe for concurrent calls.
class FaithfulnessScorer {
 public:
  virtual ~FaithfulnessScorer() = default;
  virtual double score(std::string_view summary,
                       std::string_view source) const = 0;
};

// Lexical precision: the fraction of summary word tokens (lowercased) that
// can be matched against the source token multiset, each source token
// used at most once. Returns 0 for a summary without tokens.
double lexical_faithfulness(std::string_view summary, std::string_view source);

class LexicalFaithfulness final : public FaithfulnessScorer {
 public:
  double score(std::string_view summary,
               std::string_view source) const override {
    return lexical_faithfulness(summary, source);
  }
};

// exp(-(observed - target)^2 / (2 sigma^2)): the Gaussian density ratio
// f(observed) / f(target). Throws InvalidSigma when sigma <= 0.
double gaussian_reward(double observed, double target, double sigma);

// w_read * gaussian_reward(FRE(summary), target, sigma)
//   + w_faith * scorer(summary, source).
// Throws DegenerateText when the summary has no words.
double combined_reward(std::string_view summary, std::string_view source,
                       double target, const RewardConfig& config,
                       const FaithfulnessScorer& scorer,
                       const WordList& wordlist = WordList::dale_chall());

}  // namespace readctl

#endif  // READCTL_REWARD_H_
