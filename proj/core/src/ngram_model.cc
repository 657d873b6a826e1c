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
#include "readctl/ngram_model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "readctl/error.h"

namespace readctl {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto at = line.find(sep, pos);
    fields.push_back(line.substr(pos, at - pos));
    if (at == std::string_view::npos) break;
    pos = at + 1;
  }
  return fields;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::size_t NGramModel::KeyHash::operator()(
    const std::vector<TokenId>& key) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (TokenId t : key) {
    h ^= t + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

NGramModel::NGramModel(int order, double smoothing)
    : order_(order), smoothing_(smoothing) {
  validate_options();
}

void NGramModel::validate_options() const {
  if (order_ < 1) throw InvalidArgument("n-gram order must be >= 1");
  if (!(smoothing_ >= 0.0) || !std::isfinite(smoothing_)) {
    throw InvalidArgument("smoothing constant must be >= 0");
  }
}

NGramModel NGramModel::train(std::span<const std::string> corpus, int order,
                             double smoothing) {
  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(corpus.size());
  for (const auto& text : corpus) tokenized.push_back(lm_tokenize(text));
  return train_tokenized(tokenized, order, smoothing);
}

NGramModel NGramModel::train_tokenized(
    std::span<const std::vector<std::string>> corpus, int order,
    double smoothing) {
  NGramModel model(order, smoothing);
  bool any_token = false;
  for (const auto& doc : corpus) {
    if (!doc.empty()) any_token = true;
  }
  if (!any_token) throw EmptyCorpus("training corpus holds no tokens");

  for (const auto& doc : corpus) {
    std::vector<TokenId> padded(static_cast<std::size_t>(order - 1),
                                Vocabulary::kBos);
    for (const auto& token : doc) padded.push_back(model.vocab_.add(token));
    padded.push_back(Vocabulary::kEos);
    model.observe(padded);
  }
  return model;
}

void NGramModel::observe(const std::vector<TokenId>& padded) {
  const std::size_t pad = static_cast<std::size_t>(order_ - 1);
  for (std::size_t p = pad; p < padded.size(); ++p) {
    for (std::size_t h = 0; h <= pad; ++h) {
      std::vector<TokenId> key(padded.begin() + static_cast<std::ptrdiff_t>(p - h),
                               padded.begin() + static_cast<std::ptrdiff_t>(p));
      auto& entry = histories_[std::move(key)];
      ++entry.total;
      ++entry.followers[padded[p]];
    }
  }
}

const NGramModel::History* NGramModel::find_history(
    std::span<const TokenId> history) const {
  const std::vector<TokenId> key(history.begin(), history.end());
  auto it = histories_.find(key);
  return it == histories_.end() ? nullptr : &it->second;
}

std::uint64_t NGramModel::count(std::span<const TokenId> history,
                                TokenId next) const {
  const History* h = find_history(history);
  if (h == nullptr) return 0;
  auto it = h->followers.find(next);
  return it == h->followers.end() ? 0 : it->second;
}

std::uint64_t NGramModel::history_count(std::span<const TokenId> history) const {
  const History* h = find_history(history);
  return h == nullptr ? 0 : h->total;
}

std::vector<double> NGramModel::next_distribution(
    std::span<const TokenId> context, const Conditioning& /*conditioning*/) const {
  const std::size_t pad = static_cast<std::size_t>(order_ - 1);
  std::vector<TokenId> padded(pad, Vocabulary::kBos);
  const std::size_t take = std::min(pad, context.size());
  padded.insert(padded.end(), context.end() - static_cast<std::ptrdiff_t>(take),
                context.end());
  std::span<const TokenId> full(padded);
  full = full.subspan(full.size() - pad);

  const History* history = nullptr;
  for (std::size_t h = pad + 1; h-- > 0;) {
    history = find_history(full.subspan(pad - h));
    if (history != nullptr && history->total > 0) break;
    history = nullptr;
  }

  const std::size_t v = vocab_.size();
  std::vector<double> probs(v, 0.0);
  // The empty history always exists after training.
  const double support = static_cast<double>(v - 1);
  const double denom = static_cast<double>(history->total) + smoothing_ * support;
  const double floor = smoothing_ / denom;
  for (std::size_t i = 1; i < v; ++i) probs[i] = floor;
  for (const auto& [token, c] : history->followers) {
    probs[token] += static_cast<double>(c) / denom;
  }
  probs[Vocabulary::kBos] = 0.0;
  return probs;
}

double NGramModel::log_probability(std::string_view text) const {
  std::vector<TokenId> ids;
  for (const auto& t : lm_tokenize(text)) ids.push_back(vocab_.lookup(t));
  double total = 0.0;
  std::vector<TokenId> context;
  ids.push_back(Vocabulary::kEos);
  for (TokenId id : ids) {
    const auto probs = next_distribution(context);
    total += std::log(probs[id]);
    context.push_back(id);
  }
  return total;
}

double NGramModel::perplexity(std::string_view text) const {
  const auto n = lm_tokenize(text).size() + 1;
  return std::exp(-log_probability(text) / static_cast<double>(n));
}

void NGramModel::save(std::ostream& out) const {
  out << "#readctl-ngram v1\n";
  out << "order\t" << order_ << '\n';
  out << "smoothing\t" << format_double(smoothing_) << '\n';
  for (const auto& token : vocab_.tokens()) out << "vocab\t" << token << '\n';

  std::vector<const std::vector<TokenId>*> keys;
  keys.reserve(histories_.size());
  for (const auto& [key, _] : histories_) keys.push_back(&key);
  std::sort(keys.begin(), keys.end(),
            [](const auto* a, const auto* b) {
              if (a->size() != b->size()) return a->size() < b->size();
              return *a < *b;
            });
  for (const auto* key : keys) {
    std::string context;
    for (std::size_t i = 0; i < key->size(); ++i) {
      if (i > 0) context.push_back(' ');
      context += vocab_.token((*key)[i]);
    }
    for (const auto& [token, c] : histories_.at(*key).followers) {
      out << context << '\t' << vocab_.token(token) << '\t' << c << '\n';
    }
  }
}

void NGramModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write model: " + path.string());
  save(out);
  if (!out) throw FormatError("failed writing model: " + path.string());
}

NGramModel NGramModel::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "#readctl-ngram v1") {
    throw FormatError("not a readctl n-gram dump (missing header)");
  }
  int order = 0;
  double smoothing = -1.0;
  std::vector<std::string> vocab_tokens;
  std::vector<std::tuple<std::string, std::string, std::uint64_t>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    auto bad = [&](const std::string& why) {
      return FormatError("model line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() == 2) {
      if (fields[0] == "order") {
        const auto [p, ec] = std::from_chars(
            fields[1].data(), fields[1].data() + fields[1].size(), order);
        if (ec != std::errc()) throw bad("bad order");
      } else if (fields[0] == "smoothing") {
        const auto [p, ec] = std::from_chars(
            fields[1].data(), fields[1].data() + fields[1].size(), smoothing);
        if (ec != std::errc()) throw bad("bad smoothing");
      } else if (fields[0] == "vocab") {
        vocab_tokens.emplace_back(fields[1]);
      } else {
        throw bad("unknown key '" + std::string(fields[0]) + "'");
      }
    } else if (fields.size() == 3) {
      std::uint64_t c = 0;
      const auto [p, ec] = std::from_chars(
          fields[2].data(), fields[2].data() + fields[2].size(), c);
      if (ec != std::errc() || p != fields[2].data() + fields[2].size()) {
        throw bad("bad count");
      }
      rows.emplace_back(std::string(fields[0]), std::string(fields[1]), c);
    } else {
      throw bad("expected 2 or 3 tab-separated fields");
    }
  }
  if (order < 1 || smoothing < 0.0) throw FormatError("missing order/smoothing");
  if (vocab_tokens.size() < 3 || vocab_tokens[0] != Vocabulary::kBosToken ||
      vocab_tokens[1] != Vocabulary::kEosToken ||
      vocab_tokens[2] != Vocabulary::kUnkToken) {
    throw FormatError("vocabulary must start with <s> </s> <unk>");
  }

  NGramModel model(order, smoothing);
  for (std::size_t i = 3; i < vocab_tokens.size(); ++i) {
    if (model.vocab_.find(vocab_tokens[i])) {
      throw FormatError("duplicate vocabulary entry " + vocab_tokens[i]);
    }
    model.vocab_.add(vocab_tokens[i]);
  }
  for (const auto& [context, token, c] : rows) {
    std::vector<TokenId> key;
    if (!context.empty()) {
      for (auto t : split(context, ' ')) {
        auto id = model.vocab_.find(t);
        if (!id) throw FormatError("unknown context token " + std::string(t));
        key.push_back(*id);
      }
    }
    if (key.size() >= static_cast<std::size_t>(order)) {
      throw FormatError("context longer than order - 1");
    }
    auto id = model.vocab_.find(token);
    if (!id) throw FormatError("unknown token " + token);
    auto& entry = model.histories_[std::move(key)];
    entry.total += c;
    entry.followers[*id] += c;
  }
  if (model.find_history({}) == nullptr) {
    throw FormatError("model has no unigram counts");
  }
  return model;
}

NGramModel NGramModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read model: " + path.string());
  return load(in);
}

bool operator==(const NGramModel& a, const NGramModel& b) {
  return a.order_ == b.order_ && a.smoothing_ == b.smoothing_ &&
         a.vocab_ == b.vocab_ && a.histories_ == b.histories_;
}

}  // namespace readctl
