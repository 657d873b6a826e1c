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
#ifndef READCTL_TESTS_ORACLES_H_
#define READCTL_TESTS_ORACLES_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "readctl/instruction.h"
#include "readctl/language_model.h"
#include "readctl/lookahead_decoder.h"
#include "readctl/ngram_model.h"

namespace readctl::testing {

std::filesystem::path data_dir();       // <repo>/data
std::filesystem::path test_data_dir();  // <repo>/tests/data

const std::vector<CorpusExample>& toy_corpus();

// Trigram over the toy corpus summaries, k = 0.01 (the reference desk
// model behind `readctl train-lm` defaults).
const NGramModel& toy_summary_model();

// Bigram model given by an explicit table: probs[prev][next], with
// prev = kBos standing for the empty context.
class TableModel final : public LanguageModel {
 public:
  TableModel(Vocabulary vocab, std::vector<std::vector<double>> probs);
  const Vocabulary& vocabulary() const override { return vocab_; }
  std::vector<double> next_distribution(
      std::span<const TokenId> context,
      const Conditioning& conditioning = {}) const override;
  std::size_t context_window() const override { return 1; }

 private:
  Vocabulary vocab_;
  std::vector<std::vector<double>> probs_;
};

// Random micro model over `words` (at most 5 generatable symbols counting
// EOS). Roughly a fifth of the transitions are zero.
TableModel random_micro_model(const std::vector<std::string>& words,
                              std::uint64_t seed);

// Beam search on cumulative log-probability alone. Written without the
// decoder's caching or lookahead paths; shares only its documented rules
// (fanout, EOS masking before min_len, finished pool, tie-breaking).
std::vector<TokenId> plain_beam_search(const LanguageModel& model,
                                       std::string_view source,
                                       const DecoderConfig& config);

struct BruteForceBest {
  std::vector<TokenId> tokens;  // without EOS
  double g = 0.0;
  std::size_t sequences = 0;  // complete sequences enumerated
};

// Enumerates every complete sequence (EOS-terminated or of length
// max_len) with positive probability, and returns the one with the
// highest g = log p + w * h(text). Eligibility follows the decoder's
// result rule: at least min_len tokens and at least one word.
BruteForceBest brute_force_best(const LanguageModel& model,
                                std::string_view source, double target,
                                const DecoderConfig& config);

// Product-moment correlation from its definition, accumulated in long
// double.
double definitional_pearson(const std::vector<double>& x,
                            const std::vector<double>& y);

struct RougeCase {
  const char* candidate;
  const char* reference;
  double f1;
};

// Ten ROUGE-L pairs whose LCS was worked out by hand.
std::span<const RougeCase> rouge_hand_cases();

}  // namespace readctl::testing

#endif  // READCTL_TESTS_ORACLES_H_
