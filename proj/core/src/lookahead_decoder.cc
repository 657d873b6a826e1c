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
#include "readctl/lookahead_decoder.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "readctl/error.h"
#include "readctl/reward.h"
#include "readctl/text_analysis.h"

namespace readctl {
namespace {

// Distribution vectors are large; bound the per-call cache.
constexpr std::size_t kMaxCachedContexts = 8192;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool better(const Hypothesis& a, const Hypothesis& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.logprob != b.logprob) return a.logprob > b.logprob;
  return a.tokens < b.tokens;
}

}  // namespace

std::string_view h_scale_name(HScale scale) {
  return scale == HScale::kRaw ? "raw" : "normalized";
}

std::optional<HScale> parse_h_scale(std::string_view name) {
  if (name == "raw") return HScale::kRaw;
  if (name == "normalized") return HScale::kNormalized;
  return std::nullopt;
}

std::string_view rollout_name(RolloutStrategy strategy) {
  return strategy == RolloutStrategy::kGreedy ? "greedy" : "sampled";
}

std::optional<RolloutStrategy> parse_rollout(std::string_view name) {
  if (name == "greedy") return RolloutStrategy::kGreedy;
  if (name == "sampled") return RolloutStrategy::kSampled;
  return std::nullopt;
}

void DecoderConfig::validate() const {
  if (beam_width < 1) throw InvalidArgument("beam width must be >= 1");
  if (effective_fanout() < beam_width) {
    throw InvalidArgument("candidate fanout must be >= beam width");
  }
  if (lookahead_n < 0) throw InvalidArgument("lookahead n must be >= 0");
  if (!(lookahead_w >= 0.0) || !std::isfinite(lookahead_w)) {
    throw InvalidArgument("lookahead w must be a finite value >= 0");
  }
  if (rollout_count < 1) throw InvalidArgument("rollout count must be >= 1");
  if (max_len < 1) throw InvalidArgument("max_len must be >= 1");
  if (min_len < 0 || min_len > max_len) {
    throw InvalidArgument("min_len must lie in [0, max_len]");
  }
  if (!(h_faith_weight >= 0.0 && h_faith_weight <= 1.0)) {
    throw InvalidArgument("faithfulness weight must lie in [0, 1]");
  }
  if (!std::isfinite(h_floor)) throw InvalidArgument("h floor must be finite");
}

double h_eval(std::string_view text, double target, HScale scale,
              double floor) {
  const TextStats stats = compute_stats(text);
  if (stats.total_words < 3 || stats.total_sentences == 0) return floor;
  const double deviation = std::abs(fre(stats).value - target);
  return scale == HScale::kRaw ? 1.0 - deviation : 1.0 - deviation / 100.0;
}

double score_candidate(double logprob, std::span<const double> continuation_h,
                       double w) {
  if (continuation_h.empty()) {
    throw InvalidArgument("score_candidate needs at least one continuation");
  }
  if (w == 0.0) return logprob;
  return logprob +
         w * *std::max_element(continuation_h.begin(), continuation_h.end());
}

std::size_t LookaheadDecoder::KeyHash::operator()(
    const std::vector<TokenId>& key) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (TokenId t : key) {
    h ^= t;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

LookaheadDecoder::LookaheadDecoder(const LanguageModel& model,
                                   DecoderConfig config)
    : model_(model), config_(config) {
  config_.validate();
}

void LookaheadDecoder::begin(std::string_view source) {
  source_.assign(source);
  rng_.seed(config_.seed);
  cache_.clear();
}

const std::vector<double>& LookaheadDecoder::distribution(
    std::span<const TokenId> context) {
  const std::size_t window = model_.context_window();
  if (window > 0 && context.size() > window) {
    context = context.subspan(context.size() - window);
  }
  std::vector<TokenId> key(context.begin(), context.end());
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (cache_.size() >= kMaxCachedContexts) cache_.clear();
  Conditioning conditioning;
  conditioning.source = source_;
  auto probs = model_.next_distribution(context, conditioning);
  return cache_.emplace(std::move(key), std::move(probs)).first->second;
}

bool LookaheadDecoder::eos_allowed(std::size_t generated) const {
  return generated >= static_cast<std::size_t>(config_.min_len);
}

std::vector<std::vector<TokenId>> LookaheadDecoder::rollout(
    std::span<const TokenId> prefix, int n) {
  const bool greedy = config_.rollout == RolloutStrategy::kGreedy;
  const int count = greedy ? 1 : config_.rollout_count;
  std::vector<std::vector<TokenId>> out;
  out.reserve(static_cast<std::size_t>(count));
  const std::size_t max_len = static_cast<std::size_t>(config_.max_len);

  for (int c = 0; c < count; ++c) {
    std::vector<TokenId> seq(prefix.begin(), prefix.end());
    for (int step = 0; step < n && seq.size() < max_len; ++step) {
      const auto& probs = distribution(seq);
      const bool eos_ok = eos_allowed(seq.size());
      auto weight = [&](std::size_t id) {
        if (id == Vocabulary::kBos) return 0.0;
        if (id == Vocabulary::kEos && !eos_ok) return 0.0;
        return probs[id];
      };
      std::size_t chosen = probs.size();
      if (greedy) {
        double best = 0.0;
        for (std::size_t id = 0; id < probs.size(); ++id) {
          if (weight(id) > best) {
            best = weight(id);
            chosen = id;
          }
        }
      } else {
        double total = 0.0;
        for (std::size_t id = 0; id < probs.size(); ++id) total += weight(id);
        if (total > 0.0) {
          const double u = uniform01(rng_) * total;
          double acc = 0.0;
          for (std::size_t id = 0; id < probs.size(); ++id) {
            const double p = weight(id);
            if (p <= 0.0) continue;
            acc += p;
            chosen = id;
            if (u < acc) break;
          }
        }
      }
      if (chosen == probs.size() || chosen == Vocabulary::kEos) break;
      seq.push_back(static_cast<TokenId>(chosen));
    }
    out.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                     seq.end());
  }
  return out;
}

double LookaheadDecoder::h_of(std::span<const TokenId> tokens,
                              double target) const {
  const std::string text = detokenize(model_.vocabulary(), tokens);
  const double h_read =
      h_eval(text, target, config_.h_scale, config_.h_floor);
  if (config_.h_faith_weight == 0.0 || h_read == config_.h_floor) {
    return h_read;
  }
  const double a = config_.h_faith_weight;
  return (1.0 - a) * h_read + a * lexical_faithfulness(text, source_);
}

double LookaheadDecoder::score_of(std::span<const TokenId> prefix,
                                  double logprob, bool finished,
                                  double target) {
  if (!config_.lookahead_enabled()) return logprob;
  if (finished) {
    const double h = h_of(prefix, target);
    return score_candidate(logprob, std::span<const double>(&h, 1),
                           config_.lookahead_w);
  }
  std::vector<double> hs;
  std::vector<TokenId> full;
  for (const auto& cont : rollout(prefix, config_.lookahead_n)) {
    full.assign(prefix.begin(), prefix.end());
    full.insert(full.end(), cont.begin(), cont.end());
    hs.push_back(h_of(full, target));
  }
  return score_candidate(logprob, hs, config_.lookahead_w);
}

GenerationResult LookaheadDecoder::to_result(
    const Hypothesis& hyp, const ReadabilityTarget& target) const {
  GenerationResult result;
  result.tokens = hyp.tokens;
  if (!result.tokens.empty() && result.tokens.back() == Vocabulary::kEos) {
    result.tokens.pop_back();
  }
  result.text = detokenize(model_.vocabulary(), result.tokens);
  result.logprob = hyp.logprob;
  result.score = hyp.score;
  result.observed_fre = fre(compute_stats(result.text)).value;
  result.target = target;
  return result;
}

std::vector<GenerationResult> LookaheadDecoder::decode_n_best(
    std::string_view source, const ReadabilityTarget& target) {
  begin(source);
  const double r = target.resolve();
  const std::size_t beam = static_cast<std::size_t>(config_.beam_width);
  const std::size_t fanout = static_cast<std::size_t>(config_.effective_fanout());
  const std::size_t max_len = static_cast<std::size_t>(config_.max_len);

  std::vector<Hypothesis> active(1);
  std::vector<Hypothesis> finished;
  std::vector<std::pair<double, TokenId>> options;
  std::vector<Hypothesis> candidates;

  while (!active.empty()) {
    candidates.clear();
    for (const auto& hyp : active) {
      options.clear();
      {
        const auto& probs = distribution(hyp.tokens);
        const bool eos_ok = eos_allowed(hyp.tokens.size());
        for (std::size_t id = 0; id < probs.size(); ++id) {
          if (id == Vocabulary::kBos || probs[id] <= 0.0) continue;
          if (id == Vocabulary::kEos && !eos_ok) continue;
          options.emplace_back(probs[id], static_cast<TokenId>(id));
        }
      }
      const std::size_t keep = std::min(fanout, options.size());
      std::partial_sort(options.begin(), options.begin() + keep, options.end(),
                        [](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first > b.first;
                          return a.second < b.second;
                        });
      options.resize(keep);
      for (const auto& [p, id] : options) {
        Hypothesis next;
        next.tokens = hyp.tokens;
        next.tokens.push_back(id);
        next.logprob = hyp.logprob + std::log(p);
        const bool ended_by_eos = id == Vocabulary::kEos;
        next.finished = ended_by_eos || next.tokens.size() >= max_len;
        std::span<const TokenId> text_tokens(next.tokens);
        if (ended_by_eos) text_tokens = text_tokens.first(text_tokens.size() - 1);
        next.score = score_of(text_tokens, next.logprob, next.finished, r);
        candidates.push_back(std::move(next));
      }
    }
    std::sort(candidates.begin(), candidates.end(), better);
    std::vector<Hypothesis> next_active;
    for (std::size_t rank = 0; rank < candidates.size(); ++rank) {
      if (next_active.size() >= beam) break;
      auto& c = candidates[rank];
      if (c.finished) {
        if (rank < beam) finished.push_back(std::move(c));
      } else {
        next_active.push_back(std::move(c));
      }
    }
    active = std::move(next_active);
  }

  std::stable_sort(finished.begin(), finished.end(), better);
  std::vector<GenerationResult> results;
  results.reserve(finished.size());
  for (const auto& hyp : finished) {
    const std::size_t generated =
        hyp.tokens.size() -
        (hyp.tokens.back() == Vocabulary::kEos ? 1 : 0);
    if (generated < static_cast<std::size_t>(config_.min_len)) continue;
    std::span<const TokenId> body(hyp.tokens.data(), generated);
    if (compute_stats(detokenize(model_.vocabulary(), body)).total_words == 0) {
      continue;
    }
    results.push_back(to_result(hyp, target));
  }
  if (results.empty()) {
    throw EmptyGeneration("no hypothesis reached min_len with readable text");
  }
  return results;
}

GenerationResult LookaheadDecoder::decode(std::string_view source,
                                          const ReadabilityTarget& target) {
  return decode_n_best(source, target).front();
}

GenerationResult decode(const LanguageModel& model, std::string_view source,
                        const ReadabilityTarget& target,
                        const DecoderConfig& config) {
  LookaheadDecoder decoder(model, config);
  return decoder.decode(source, target);
}

}  // namespace readctl
