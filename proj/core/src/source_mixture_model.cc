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
#include "readctl/source_mixture_model.h"

#include <algorithm>
#include <map>

#include "readctl/error.h"

namespace readctl {

SourceMixtureModel::SourceMixtureModel(const LanguageModel& base,
                                       double source_weight)
    : base_(base), weight_(source_weight) {
  if (!(source_weight >= 0.0 && source_weight <= 1.0)) {
    throw InvalidArgument("source weight must lie in [0, 1]");
  }
}

std::size_t SourceMixtureModel::context_window() const {
  const std::size_t w = base_.context_window();
  return w == 0 ? 0 : std::max<std::size_t>(w, 1);
}

std::shared_ptr<const SourceMixtureModel::Profile>
SourceMixtureModel::profile_for(std::string_view source) const {
  std::string key(source);
  {
    std::lock_guard lock(mu_);
    auto it = profiles_.find(key);
    if (it != profiles_.end()) return it->second;
  }
  const Vocabulary& vocab = base_.vocabulary();
  // Out-of-vocabulary tokens become kUnk so no bigram spans across them.
  std::vector<TokenId> ids;
  for (const auto& token : lm_tokenize(source)) {
    auto id = vocab.find(token);
    ids.push_back(id && !Vocabulary::is_reserved(*id) ? *id : Vocabulary::kUnk);
  }
  std::shared_ptr<const Profile> result;
  const auto known = static_cast<std::size_t>(
      std::count_if(ids.begin(), ids.end(),
                    [](TokenId id) { return id != Vocabulary::kUnk; }));
  if (known > 0) {
    auto profile = std::make_shared<Profile>();
    profile->unigram.assign(vocab.size(), 0.0);
    for (TokenId id : ids) {
      if (id != Vocabulary::kUnk) profile->unigram[id] += 1.0;
    }
    for (double& p : profile->unigram) p /= static_cast<double>(known);

    std::map<TokenId, std::map<TokenId, double>> counts;
    for (std::size_t i = 1; i < ids.size(); ++i) {
      if (ids[i - 1] == Vocabulary::kUnk || ids[i] == Vocabulary::kUnk) continue;
      counts[ids[i - 1]][ids[i]] += 1;
    }
    for (const auto& [prev, nexts] : counts) {
      double total = 0.0;
      for (const auto& [_, c] : nexts) total += c;
      auto& row = profile->bigram[prev];
      for (const auto& [next, c] : nexts) row.emplace_back(next, c / total);
    }
    result = std::move(profile);
  }
  std::lock_guard lock(mu_);
  return profiles_.emplace(std::move(key), std::move(result)).first->second;
}

std::vector<double> SourceMixtureModel::next_distribution(
    std::span<const TokenId> context, const Conditioning& conditioning) const {
  std::vector<double> probs = base_.next_distribution(context, conditioning);
  if (weight_ == 0.0 || conditioning.source.empty()) return probs;
  const auto profile = profile_for(conditioning.source);
  if (!profile) return probs;
  if (context.empty()) {
    for (std::size_t i = 0; i < probs.size(); ++i) {
      probs[i] = (1.0 - weight_) * probs[i] + weight_ * profile->unigram[i];
    }
    return probs;
  }
  auto it = profile->bigram.find(context.back());
  if (it == profile->bigram.end()) return probs;
  for (double& p : probs) p *= 1.0 - weight_;
  for (const auto& [next, p] : it->second) probs[next] += weight_ * p;
  return probs;
}

}  // namespace readctl
