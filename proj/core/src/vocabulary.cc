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
#include <string>

#include "readctl/language_model.h"
#include "readctl/text_analysis.h"
#include "utf8.h"

namespace readctl {

Vocabulary::Vocabulary() {
  add(kBosToken);
  add(kEosToken);
  add(kUnkToken);
}

TokenId Vocabulary::add(std::string_view token) {
  if (auto id = find(token)) return *id;
  const auto id = static_cast<TokenId>(tokens_.size());
  tokens_.emplace_back(token);
  index_.emplace(tokens_.back(), id);
  return id;
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocabulary::lookup(std::string_view token) const {
  return find(token).value_or(kUnk);
}

bool is_punctuation_token(std::string_view token) {
  return token == "." || token == "!" || token == "?" || token == "," ||
         token == ";" || token == ":";
}

namespace {

bool is_sentence_end(std::string_view token) {
  return token == "." || token == "!" || token == "?";
}

bool is_alnum(char32_t c) { return utf8::is_alpha(c) || utf8::is_digit(c); }

}  // namespace

std::vector<std::string> lm_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  std::size_t word_begin = std::string_view::npos;

  auto flush_word = [&](std::size_t end) {
    if (word_begin == std::string_view::npos) return;
    for (auto& w : tokenize_words(text.substr(word_begin, end - word_begin))) {
      tokens.push_back(utf8::to_lower(w));
    }
    word_begin = std::string_view::npos;
  };

  while (pos < text.size()) {
    const auto cp = utf8::decode(text, pos);
    const char32_t c = cp.value;
    const bool prev_alnum = word_begin != std::string_view::npos;
    bool joiner = false;
    if (prev_alnum && pos + cp.length < text.size()) {
      const auto next = utf8::decode(text, pos + cp.length);
      if (is_alnum(next.value) &&
          (utf8::is_apostrophe(c) || utf8::is_hyphen(c) ||
           ((c == '.' || c == ',') && utf8::is_digit(next.value) &&
            pos > 0 && utf8::is_digit(static_cast<unsigned char>(text[pos - 1]))))) {
        joiner = true;
      }
    }
    if (is_alnum(c) || joiner) {
      if (word_begin == std::string_view::npos) word_begin = pos;
      pos += cp.length;
      continue;
    }
    flush_word(pos);
    std::string punct;
    if (c == '.' || c == '!' || c == '?' || c == 0x2026) {
      punct = c == 0x2026 ? "." : std::string(1, static_cast<char>(c));
    } else if (c == ',' || c == ';' || c == ':') {
      punct = std::string(1, static_cast<char>(c));
    }
    if (!punct.empty()) {
      // Collapse "..." and "?!" into a single terminator.
      const bool collapses = is_sentence_end(punct) && !tokens.empty() &&
                             is_sentence_end(tokens.back());
      if (!collapses) tokens.push_back(std::move(punct));
    }
    pos += cp.length;
  }
  flush_word(text.size());
  return tokens;
}

std::string detokenize(std::span<const std::string> tokens) {
  std::string out;
  bool capitalise = true;
  for (const auto& token : tokens) {
    if (token == Vocabulary::kBosToken || token == Vocabulary::kEosToken ||
        token == Vocabulary::kUnkToken || token.empty()) {
      continue;
    }
    if (is_punctuation_token(token)) {
      out += token;
      if (is_sentence_end(token)) capitalise = true;
      continue;
    }
    if (!out.empty()) out.push_back(' ');
    if (capitalise && token[0] >= 'a' && token[0] <= 'z') {
      out.push_back(static_cast<char>(token[0] - 'a' + 'A'));
      out.append(token, 1);
    } else {
      out += token;
    }
    capitalise = false;
  }
  return out;
}

std::string detokenize(const Vocabulary& vocab, std::span<const TokenId> ids) {
  std::vector<std::string> tokens;
  tokens.reserve(ids.size());
  for (TokenId id : ids) tokens.push_back(vocab.token(id));
  return detokenize(tokens);
}

}  // namespace readctl
