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
#ifndef READCTL_SOURCE_MIXTURE_MODEL_H_
#define READCTL_SOURCE_MIXTURE_MODEL_H_

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "readctl/language_model.h"

namespace readctl {

// Conditions an unconditional model on the source document by linear
// interpolation with a bigram model of the source itself:
//
//   p(w | ctx, src) = (1 - lambda) p_base(w | ctx) + lambda p_src(w | prev)
//
// p_src(w | prev) is the MLE bigram estimate over adjacent in-vocabulary
// source tokens; with an empty context the source unigram is used.
// When `prev` never occurs in the source (or there is no source) the base
// distribution is returned unchanged.
class SourceMixtureModel final : public LanguageModel {
 public:
  // Throws InvalidArgument unless 0 <= source_weight <= 1.
  SourceMixtureModel(const LanguageModel& base, double source_weight);

  const Vocabulary& vocabulary() const override { return base_.vocabulary(); }
  std::vector<double> next_distribution(
      std::span<const TokenId> context,
      const Conditioning& conditioning = {}) const override;
  std::size_t context_window() const override;

  double source_weight() const { return weight_; }

 private:
  struct Profile {
    std::vector<double> unigram;
    // prev -> (next, probability), sorted by next.
    std::unordered_map<TokenId, std::vector<std::pair<TokenId, double>>>
        bigram;
  };

  std::shared_ptr<const Profile> profile_for(std::string_view source) const;

  const LanguageModel& base_;
  double weight_;

  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const Profile>>
      profiles_;
};

}  // namespace readctl

#endif  // READCTL_SOURCE_MIXTURE_MODEL_H_
