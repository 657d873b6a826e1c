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
#ifndef READCTL_LANGUAGE_MODEL_H_
#define READCTL_LANGUAGE_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace readctl {

using TokenId = std::uint32_t;

// Dense token index with the reserved BOS, EOS and UNK entries at 0, 1, 2.
class Vocabulary {
 public:
  static constexpr TokenId kBos = 0;
  static constexpr TokenId kEos = 1;
  static constexpr TokenId kUnk = 2;
  static constexpr std::string_view kBosToken = "<s>";
  static constexpr std::string_view kEosToken = "</s>";
  static constexpr std::string_view kUnkToken = "<unk>";

  Vocabulary();

  // Returns the existing id or appends the token.
  TokenId add(std::string_view token);
  std::optional<TokenId> find(std::string_view token) const;
  TokenId lookup(std::string_view token) const;  // kUnk when absent

  const std::string& token(TokenId id) const { return tokens_.at(id); }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  static bool is_reserved(TokenId id) { return id <= kUnk; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> index_;
};

// What a conditional model may look at besides the generated prefix.
struct Conditioning {
  std::string_view source;
  std::optional<double> target_fre;
};

// Auto-regressive model p(y_i | y_1..y_{i-1}, source, target).
//
// next_distribution returns one probability per vocabulary entry; the
// entries are non-negative and sum to 1 within 1e-9. The context holds the
// generated tokens only (no BOS). Implementations must be deterministic and
// safe for concurrent callers.
class LanguageModel {
 public:
  virtual ~LanguageModel() = default;

  virtual const Vocabulary& vocabulary() const = 0;

  virtual std::vector<double> next_distribution(
      std::span<const TokenId> context,
      const Conditioning& conditioning = {}) const = 0;

  // How many trailing context tokens the distribution depends on, for a
  // fixed conditioning. Zero means the whole prefix matters.
  virtual std::size_t context_window() const { return 0; }
};

// Lowercased word tokens plus the punctuation tokens . ! ? , ; :
// Runs of terminators collapse to one token ("..." -> ".").
std::vector<std::string> lm_tokenize(std::string_view text);

// Joins tokens with single spaces, attaches punctuation to the preceding
// word and capitalises the first letter of every sentence. Reserved tokens
// are skipped.
std::string detokenize(std::span<const std::string> tokens);
std::string detokenize(const Vocabulary& vocab, std::span<const TokenId> ids);

bool is_punctuation_token(std::string_view token);

}  // namespace readctl

#endif  // READCTL_LANGUAGE_MODEL_H_
