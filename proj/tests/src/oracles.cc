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
#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "readctl/corpus_io.h"
#include "readctl/text_analysis.h"

namespace readctl::testing {

std::filesystem::path data_dir() { return READCTL_SOURCE_DIR "/data"; }

std::filesystem::path test_data_dir() {
  return READCTL_SOURCE_DIR "/tests/data";
}

const std::vector<CorpusExample>& toy_corpus() {
  static const auto corpus = read_corpus(data_dir() / "toy_corpus.jsonl");
  return corpus;
}

const NGramModel& toy_summary_model() {
  static const NGramModel model = [] {
    std::vector<std::string> texts;
    for (const auto& e : toy_corpus()) texts.push_back(*e.summary);
    return NGramModel::train(texts, 3, 0.01);
  }();
  return model;
}

TableModel::TableModel(Vocabulary vocab, std::vector<std::vector<double>> probs)
    : vocab_(std::move(vocab)), probs_(std::move(probs)) {}

std::vector<double> TableModel::next_distribution(
    std::span<const TokenId> context, const Conditioning&) const {
  const TokenId prev = context.empty() ? Vocabulary::kBos : context.back();
  return probs_.at(prev);
}

TableModel random_micro_model(const std::vector<std::string>& words,
                              std::uint64_t seed) {
  Vocabulary vocab;
  for (const auto& w : words) vocab.add(w);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::bernoulli_distribution zero(0.2);
  const std::size_t v = vocab.size();
  std::vector<std::vector<double>> probs(v, std::vector<double>(v, 0.0));
  for (std::size_t prev = 0; prev < v; ++prev) {
    double total = 0.0;
    for (std::size_t next = Vocabulary::kEos; next < v; ++next) {
      if (next == Vocabulary::kUnk) continue;
      probs[prev][next] = zero(rng) ? 0.0 : weight(rng);
      total += probs[prev][next];
    }
    if (total == 0.0) {
      probs[prev][Vocabulary::kEos] = 1.0;
      total = 1.0;
    }
    for (double& p : probs[prev]) p /= total;
  }
  return TableModel(std::move(vocab), std::move(probs));
}

namespace {

struct Beam {
  std::vector<TokenId> tokens;
  double logprob;
  bool done;
};

bool eligible(const LanguageModel& model, const std::vector<TokenId>& tokens,
              int min_len) {
  if (tokens.size() < static_cast<std::size_t>(min_len)) return false;
  return compute_stats(detokenize(model.vocabulary(), tokens)).total_words > 0;
}

}  // namespace

std::vector<TokenId> plain_beam_search(const LanguageModel& model,
                                       std::string_view source,
                                       const DecoderConfig& config) {
  Conditioning cond;
  cond.source = source;
  const std::size_t beam = static_cast<std::size_t>(config.beam_width);
  const std::size_t fanout = static_cast<std::size_t>(config.effective_fanout());
  std::vector<Beam> active = {Beam{{}, 0.0, false}};
  std::vector<Beam> done;
  while (!active.empty()) {
    std::vector<Beam> pool;
    for (const auto& b : active) {
      const auto probs = model.next_distribution(b.tokens, cond);
      std::vector<TokenId> ids;
      for (TokenId id = 0; id < probs.size(); ++id) {
        if (id == Vocabulary::kBos || !(probs[id] > 0.0)) continue;
        if (id == Vocabulary::kEos &&
            b.tokens.size() < static_cast<std::size_t>(config.min_len)) {
          continue;
        }
        ids.push_back(id);
      }
      std::stable_sort(ids.begin(), ids.end(), [&](TokenId x, TokenId y) {
        return probs[x] > probs[y];
      });
      if (ids.size() > fanout) ids.resize(fanout);
      for (TokenId id : ids) {
        Beam next{b.tokens, b.logprob + std::log(probs[id]), false};
        next.tokens.push_back(id);
        next.done = id == Vocabulary::kEos ||
                    next.tokens.size() >= static_cast<std::size_t>(config.max_len);
        pool.push_back(std::move(next));
      }
    }
    std::sort(pool.begin(), pool.end(), [](const Beam& x, const Beam& y) {
      if (x.logprob != y.logprob) return x.logprob > y.logprob;
      return x.tokens < y.tokens;
    });
    active.clear();
    for (std::size_t rank = 0; rank < pool.size() && active.size() < beam;
         ++rank) {
      if (!pool[rank].done) {
        active.push_back(pool[rank]);
      } else if (rank < beam) {
        done.push_back(pool[rank]);
      }
    }
  }
  const Beam* best = nullptr;
  for (auto& b : done) {
    if (!b.tokens.empty() && b.tokens.back() == Vocabulary::kEos) {
      b.tokens.pop_back();
    }
    if (!eligible(model, b.tokens, config.min_len)) continue;
    if (best == nullptr || b.logprob > best->logprob ||
        (b.logprob == best->logprob && b.tokens < best->tokens)) {
      best = &b;
    }
  }
  if (best == nullptr) return {};
  return best->tokens;
}

BruteForceBest brute_force_best(const LanguageModel& model,
                                std::string_view source, double target,
                                const DecoderConfig& config) {
  Conditioning cond;
  cond.source = source;
  BruteForceBest best;
  bool found = false;
  const double w = config.lookahead_enabled() ? config.lookahead_w : 0.0;

  auto consider = [&](const std::vector<TokenId>& tokens, double logprob) {
    ++best.sequences;
    if (!eligible(model, tokens, config.min_len)) return;
    const std::string text = detokenize(model.vocabulary(), tokens);
    const double h = h_eval(text, target, config.h_scale, config.h_floor);
    const double g = w == 0.0 ? logprob : logprob + w * h;
    if (!found || g > best.g) {
      best.tokens = tokens;
      best.g = g;
      found = true;
    }
  };

  std::vector<TokenId> prefix;
  std::function<void(double)> extend = [&](double logprob) {
    const auto probs = model.next_distribution(prefix, cond);
    for (TokenId id = 0; id < probs.size(); ++id) {
      if (id == Vocabulary::kBos || !(probs[id] > 0.0)) continue;
      const double lp = logprob + std::log(probs[id]);
      if (id == Vocabulary::kEos) {
        if (prefix.size() >= static_cast<std::size_t>(config.min_len)) {
          consider(prefix, lp);
        }
        continue;
      }
      prefix.push_back(id);
      if (prefix.size() >= static_cast<std::size_t>(config.max_len)) {
        consider(prefix, lp);
      } else {
        extend(lp);
      }
      prefix.pop_back();
    }
  };
  extend(0.0);
  return best;
}

double definitional_pearson(const std::vector<double>& x,
                            const std::vector<double>& y) {
  const long double n = static_cast<long double>(x.size());
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

namespace {

// LCS length in the trailing comment.
constexpr RougeCase kRougeCases[] = {
    {"the cat", "the cat sat", 0.8},                         // 2; P 1, R 2/3
    {"a b c", "a b c", 1.0},                                 // 3
    {"dog barks", "the cat", 0.0},                           // 0
    {"a b c d", "a c b d", 0.75},                            // 3
    {"police arrested the man", "the man was arrested by police", 0.4},  // 2
    {"The Cat SAT", "the cat sat", 1.0},                     // 3
    {"a a a", "a", 0.5},                                     // 1; P 1/3, R 1
    {"x y z", "z y x", 1.0 / 3.0},                           // 1
    {"one two three four five", "one three five", 0.75},     // 3
    {"it rained, then it snowed.", "it snowed then it rained", 0.6},  // 3
};

}  // namespace

std::span<const RougeCase> rouge_hand_cases() { return kRougeCases; }

}  // namespace readctl::testing
