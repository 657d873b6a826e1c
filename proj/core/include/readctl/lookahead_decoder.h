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
#ifndef READCTL_LOOKAHEAD_DECODER_H_
#define READCTL_LOOKAHEAD_DECODER_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "readctl/language_model.h"
#include "readctl/readability.h"

namespace readctl {

// kRaw:        h = 1 - |fre - target|
// kNormalized: h = 1 - |fre - target| / 100
enum class HScale { kRaw, kNormalized };
enum class RolloutStrategy { kGreedy, kSampled };

std::string_view h_scale_name(HScale scale);
std::optional<HScale> parse_h_scale(std::string_view name);
std::string_view rollout_name(RolloutStrategy strategy);
std::optional<RolloutStrategy> parse_rollout(std::string_view name);

struct DecoderConfig {
  int beam_width = 3;
  // Tokens expanded per hypothesis and step; 0 selects 2 * beam_width.
  int candidate_fanout = 0;
  int lookahead_n = 20;
  double lookahead_w = 25.0;
  HScale h_scale = HScale::kNormalized;
  RolloutStrategy rollout = RolloutStrategy::kGreedy;
  int rollout_count = 1;  // continuations per candidate when sampling
  std::uint64_t seed = 0;
  // Lengths count generated tokens, EOS excluded.
  int max_len = 64;
  int min_len = 8;
  // h for text with fewer than 3 words.
  double h_floor = -1e6;
  // h = (1 - a) * h_read + a * lexical_faithfulness(text, source).
  double h_faith_weight = 0.0;

  int effective_fanout() const {
    return candidate_fanout > 0 ? candidate_fanout : 2 * beam_width;
  }
  bool lookahead_enabled() const {
    return lookahead_n > 0 && lookahead_w != 0.0;
  }
  // Throws InvalidArgument on inconsistent settings.
  void validate() const;
};

struct Hypothesis {
  std::vector<TokenId> tokens;  // EOS included when finished by it
  double logprob = 0.0;         // cumulative
  double score = 0.0;           // g
  bool finished = false;
};

struct GenerationResult {
  std::string text;
  std::vector<TokenId> tokens;  // without EOS
  double logprob = 0.0;
  double score = 0.0;
  double observed_fre = 0.0;
  ReadabilityTarget target = ReadabilityTarget::score(0.0);
};

// Readability heuristic of a (possibly unfinished) text against target FRE.
// Text with fewer than 3 words yields `floor`.
double h_eval(std::string_view text, double target, HScale scale,
              double floor = -1e6);

// g = logprob + w * max_j h_j. `continuation_h` must be non-empty.
double score_candidate(double logprob, std::span<const double> continuation_h,
                       double w);

// Beam search in which every expanded token is ranked by
//   g = log p(y_1..i) + w * max over rollouts L of h(prefix + L)
// rather than by log-probability alone. With w = 0 or n = 0 this is plain
// beam search. One instance serves one decode call at a time; it owns the
// per-call RNG and distribution cache.
class LookaheadDecoder {
 public:
  LookaheadDecoder(const LanguageModel& model, DecoderConfig config);

  // Highest-g finished hypothesis. Throws EmptyGeneration when none exists.
  GenerationResult decode(std::string_view source,
                          const ReadabilityTarget& target);
  // Every finished hypothesis, best first.
  std::vector<GenerationResult> decode_n_best(std::string_view source,
                                              const ReadabilityTarget& target);

  // Continuations of `prefix` by up to n tokens (fewer when EOS is drawn;
  // EOS itself is not included). Greedy yields one continuation, sampling
  // yields rollout_count. n = 0 yields one empty continuation.
  std::vector<std::vector<TokenId>> rollout(std::span<const TokenId> prefix,
                                            int n);

  // Resets the RNG and cache for a new source.
  void begin(std::string_view source);

  const DecoderConfig& config() const { return config_; }

 private:
  const std::vector<double>& distribution(std::span<const TokenId> context);
  bool eos_allowed(std::size_t generated) const;
  double h_of(std::span<const TokenId> tokens, double target) const;
  double score_of(std::span<const TokenId> prefix, double logprob,
                  bool finished, double target);
  GenerationResult to_result(const Hypothesis& hyp,
                             const ReadabilityTarget& target) const;

  struct KeyHash {
    std::size_t operator()(const std::vector<TokenId>& key) const noexcept;
  };

  const LanguageModel& model_;
  DecoderConfig config_;
  std::string source_;
  std::mt19937_64 rng_;
  std::unordered_map<std::vector<TokenId>, std::vector<double>, KeyHash>
      cache_;
};

// Free-function form of LookaheadDecoder::decode.
GenerationResult decode(const LanguageModel& model, std::string_view source,
                        const ReadabilityTarget& target,
                        const DecoderConfig& config);

}  // namespace readctl

#endif  // READCTL_LOOKAHEAD_DECODER_H_
