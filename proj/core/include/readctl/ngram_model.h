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
#ifndef READCTL_NGRAM_MODEL_H_
#define READCTL_NGRAM_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "readctl/language_model.h"

namespace readctl {

// Word-level n-gram model with add-k smoothing and backoff to the longest
// observed history.
//
// Each training text is padded with order-1 BOS tokens and terminated with
// EOS; every history of length 0..order-1 preceding each token is counted.
// For a query the longest suffix of the (padded) context that was seen in
// training is used:
//
//   p(w | h) = (c(h, w) + k) / (c(h) + k * (|V| - 1))
//
// BOS always receives probability 0, so |V| - 1 entries share the mass.
// Conditioning is ignored: the model is unconditional.
class NGramModel final : public LanguageModel {
 public:
  // Throws EmptyCorpus when the corpus holds no tokens and InvalidArgument
  // when order < 1 or smoothing < 0.
  static NGramModel train(std::span<const std::string> corpus, int order = 3,
                          double smoothing = 0.01);
  static NGramModel train_tokenized(
      std::span<const std::vector<std::string>> corpus, int order = 3,
      double smoothing = 0.01);

  const Vocabulary& vocabulary() const override { return vocab_; }
  std::vector<double> next_distribution(
      std::span<const TokenId> context,
      const Conditioning& conditioning = {}) const override;
  std::size_t context_window() const override {
    return static_cast<std::size_t>(order_ - 1);
  }

  int order() const { return order_; }
  double smoothing() const { return smoothing_; }

  // Raw counts; `history` excludes the predicted token and may contain BOS.
  std::uint64_t count(std::span<const TokenId> history, TokenId next) const;
  std::uint64_t history_count(std::span<const TokenId> history) const;
  std::size_t num_histories() const { return histories_.size(); }

  // Sum of natural-log probabilities of the text's tokens plus EOS.
  double log_probability(std::string_view text) const;
  // exp(-log_probability / (tokens + 1)).
  double perplexity(std::string_view text) const;

  // Line-oriented dump:
  //   #readctl-ngram v1
  //   order<TAB>3
  //   smoothing<TAB>0.01
  //   vocab<TAB><token>            one line per id, in id order
  //   <context><TAB><token><TAB><count>
  // The context field holds space-separated tokens (empty for unigrams).
  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  // Throws FormatError on malformed input.
  static NGramModel load(std::istream& in);
  static NGramModel load(const std::filesystem::path& path);

  friend bool operator==(const NGramModel& a, const NGramModel& b);

 private:
  struct History {
    std::uint64_t total = 0;
    std::map<TokenId, std::uint64_t> followers;

    friend bool operator==(const History&, const History&) = default;
  };

  struct KeyHash {
    std::size_t operator()(const std::vector<TokenId>& key) const noexcept;
  };

  NGramModel(int order, double smoothing);
  void validate_options() const;
  void observe(const std::vector<TokenId>& padded);
  const History* find_history(std::span<const TokenId> history) const;

  int order_;
  double smoothing_;
  Vocabulary vocab_;
  std::unordered_map<std::vector<TokenId>, History, KeyHash> histories_;
};

}  // namespace readctl

#endif  // READCTL_NGRAM_MODEL_H_
