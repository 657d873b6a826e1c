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
#include "readctl/text_analysis.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <string>

#include "readctl/error.h"
#include "utf8.h"

namespace readctl {

namespace internal {
extern const std::string_view kDaleChallWords;
}  // namespace internal

namespace utf8 {

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto cp = decode(text, pos);
    char32_t c = cp.value;
    if (c >= 'A' && c <= 'Z') {
      c += 'a' - 'A';
    } else if (c >= 0xC0 && c <= 0xDE && c != 0xD7) {
      c += 0x20;
    } else if (c >= 0x100 && c <= 0x17F && c % 2 == 0 && c != 0x130) {
      c += 1;
    } else if (c >= 0x391 && c <= 0x3AB && c != 0x3A2) {
      c += 0x20;
    } else if (c >= 0x410 && c <= 0x42F) {
      c += 0x20;
    }
    if (cp.value == 0xFFFD && cp.length == 1) {
      out.push_back(text[pos]);
    } else {
      append(out, c);
    }
    pos += cp.length;
  }
  return out;
}

}  // namespace utf8

TextStats& TextStats::operator+=(const TextStats& other) {
  total_words += other.total_words;
  total_sentences += other.total_sentences;
  total_syllables += other.total_syllables;
  total_letters += other.total_letters;
  long_words += other.long_words;
  complex_words += other.complex_words;
  difficult_words += other.difficult_words;
  return *this;
}

// ---------------------------------------------------------------- WordList

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

std::vector<std::string> parse_word_lines(std::string_view content) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    const auto line = trim(content.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') words.emplace_back(line);
    pos = end + 1;
  }
  return words;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

WordList WordList::from_words(const std::vector<std::string>& words,
                              std::filesystem::path source_path) {
  WordList list;
  list.source_path_ = std::move(source_path);
  for (const auto& raw : words) {
    const auto word = trim(raw);
    if (word.empty()) continue;
    if (has_whitespace(word)) {
      throw InvalidArgument("word list entry contains whitespace: '" +
                            std::string(word) + "'");
    }
    list.entries_.insert(utf8::to_lower(word));
  }
  if (list.entries_.empty()) throw InvalidArgument("word list is empty");
  return list;
}

WordList WordList::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read word list: " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  try {
    return from_words(parse_word_lines(content), path);
  } catch (const InvalidArgument& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

const WordList& WordList::dale_chall() {
  static const WordList* list = new WordList(from_words(
      parse_word_lines(internal::kDaleChallWords), "data/dale_chall_3000.txt"));
  return *list;
}

bool WordList::contains(std::string_view lowercase_word) const {
  return entries_.find(std::string(lowercase_word)) != entries_.end();
}

bool WordList::is_familiar(std::string_view word) const {
  std::string w = utf8::to_lower(word);
  // Typographic apostrophes match the ASCII entries ("don't").
  for (std::size_t at; (at = w.find("\xE2\x80\x99")) != std::string::npos;) {
    w.replace(at, 3, "'");
  }
  if (contains(w)) return true;
  if (ends_with(w, "'s")) {
    w.resize(w.size() - 2);
    if (contains(w)) return true;
  }

  auto stem_matches = [this](const std::string& stem) {
    if (stem.empty()) return false;
    if (contains(stem) || contains(stem + "e")) return true;
    // Doubled final consonant: "running" -> "run", "stopped" -> "stop".
    const auto n = stem.size();
    return n >= 2 && stem[n - 1] == stem[n - 2] &&
           contains(stem.substr(0, n - 1));
  };
  auto strip = [&w](std::size_t k) { return w.substr(0, w.size() - k); };

  if ((ends_with(w, "ies") || ends_with(w, "ied")) && w.size() > 3 &&
      contains(strip(3) + "y")) {
    return true;
  }
  if (ends_with(w, "es") && contains(strip(2))) return true;
  if (ends_with(w, "s") && contains(strip(1))) return true;
  if (ends_with(w, "ing") && stem_matches(strip(3))) return true;
  if (ends_with(w, "ed") && stem_matches(strip(2))) return true;
  return false;
}

// ------------------------------------------------------------ segmentation

namespace {

struct Char {
  char32_t cp;
  std::size_t begin;
  std::size_t end;
};

std::vector<Char> decode_all(std::string_view text) {
  std::vector<Char> chars;
  chars.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto cp = utf8::decode(text, pos);
    chars.push_back({cp.value, pos, pos + cp.length});
    pos += cp.length;
  }
  return chars;
}

bool is_terminator(char32_t c) {
  return c == '.' || c == '!' || c == '?' || c == 0x2026;
}

bool is_closer(char32_t c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}' ||
         c == 0x201D || c == 0x2019 || c == 0xBB;
}

bool is_upper_start(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 0xC0 && c <= 0xDE && c != 0xD7) ||
         (c >= 0x391 && c <= 0x3AB) || (c >= 0x410 && c <= 0x42F) ||
         c == '"' || c == 0x201C || c == '(' || utf8::is_digit(c);
}

bool is_abbreviation(std::string_view lower) {
  static constexpr std::array<std::string_view, 52> kAbbreviations = {
      "mr",    "mrs",  "ms",   "dr",   "prof", "sr",   "jr",    "st",
      "mt",    "vs",   "e.g",  "i.e",  "u.s",  "u.k",  "u.n",   "u.s.a",
      "inc",   "ltd",  "co",   "corp", "jan",  "feb",  "apr",   "aug",
      "sep",   "sept", "oct",  "nov",  "dec",  "gen",  "gov",   "sen",
      "rep",   "col",  "lt",   "capt", "sgt",  "fig",  "approx", "dept",
      "univ",  "ave",  "blvd", "a.m",  "p.m",  "no",   "cf",    "al",
      "ph.d",  "d.c",  "mass", "rev"};
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
         kAbbreviations.end();
}

// The dotted word ending right before chars[dot] ("Mr", "U.S", "e.g").
std::string word_before(std::string_view text, const std::vector<Char>& chars,
                        std::size_t dot) {
  std::size_t i = dot;
  while (i > 0 && (utf8::is_alpha(chars[i - 1].cp) || chars[i - 1].cp == '.')) {
    --i;
  }
  if (i == dot) return {};
  return utf8::to_lower(
      text.substr(chars[i].begin, chars[dot].begin - chars[i].begin));
}

}  // namespace

std::vector<std::string> segment_sentences(std::string_view text) {
  const auto chars = decode_all(text);
  std::vector<std::string> sentences;
  std::size_t start = 0;  // index into chars

  auto emit = [&](std::size_t end_char) {
    while (start < end_char && utf8::is_space(chars[start].cp)) ++start;
    std::size_t last = end_char;
    while (last > start && utf8::is_space(chars[last - 1].cp)) --last;
    if (last > start) {
      sentences.emplace_back(
          text.substr(chars[start].begin, chars[last - 1].end - chars[start].begin));
    }
    start = end_char;
  };

  std::size_t i = 0;
  while (i < chars.size()) {
    const char32_t c = chars[i].cp;

    // Blank line.
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < chars.size() && utf8::is_space(chars[j].cp) &&
             chars[j].cp != '\n') {
        ++j;
      }
      if (j < chars.size() && chars[j].cp == '\n') {
        emit(i);
        i = j + 1;
        continue;
      }
      ++i;
      continue;
    }

    if (!is_terminator(c)) {
      ++i;
      continue;
    }

    const std::size_t run_begin = i;
    std::size_t j = i;
    std::size_t periods = 0;
    bool strong = false;  // '!' '?' or ellipsis character
    while (j < chars.size() && is_terminator(chars[j].cp)) {
      if (chars[j].cp == '.') {
        ++periods;
      } else {
        strong = true;
      }
      ++j;
    }
    while (j < chars.size() && is_closer(chars[j].cp)) ++j;

    const bool at_end = j == chars.size();
    if (!at_end && !utf8::is_space(chars[j].cp)) {
      // "3.5", "U.S.A", "example.com": not a boundary.
      i = j;
      continue;
    }
    std::size_t next = j;
    while (next < chars.size() && utf8::is_space(chars[next].cp)) ++next;
    const bool next_upper = next == chars.size() || is_upper_start(chars[next].cp);

    bool boundary = true;
    if (!strong && periods == 1) {
      const std::string before = word_before(text, chars, run_begin);
      const bool initial = before.size() == 1 && run_begin > 0 &&
                           is_upper_start(chars[run_begin - 1].cp);
      if (!at_end && (is_abbreviation(before) || initial)) boundary = false;
    } else if (periods > 1 && !strong) {
      // Ellipsis ends a sentence only before a capitalised word.
      boundary = next_upper;
    }

    if (boundary) {
      emit(j);
      i = j;
    } else {
      i = j;
    }
  }
  emit(chars.size());
  return sentences;
}

std::vector<std::string> tokenize_words(std::string_view sentence) {
  const auto chars = decode_all(sentence);
  std::vector<std::string> words;
  auto is_alnum = [](char32_t c) { return utf8::is_alpha(c) || utf8::is_digit(c); };

  std::size_t i = 0;
  while (i < chars.size()) {
    if (!is_alnum(chars[i].cp)) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    std::size_t j = i + 1;
    while (j < chars.size()) {
      const char32_t c = chars[j].cp;
      if (is_alnum(c)) {
        ++j;
        continue;
      }
      if (j + 1 < chars.size() && is_alnum(chars[j + 1].cp) &&
          is_alnum(chars[j - 1].cp)) {
        if (utf8::is_apostrophe(c) || utf8::is_hyphen(c)) {
          j += 2;
          continue;
        }
        if ((c == '.' || c == ',') && utf8::is_digit(chars[j - 1].cp) &&
            utf8::is_digit(chars[j + 1].cp)) {
          j += 2;
          continue;
        }
      }
      break;
    }
    words.emplace_back(
        sentence.substr(chars[begin].begin, chars[j - 1].end - chars[begin].begin));
    i = j;
  }
  return words;
}

std::size_t count_letters(std::string_view word) {
  std::size_t letters = 0;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const auto cp = utf8::decode(word, pos);
    if (utf8::is_alpha(cp.value)) ++letters;
    pos += cp.length;
  }
  return letters;
}

TextStats compute_stats(std::string_view text, const WordList& wordlist) {
  TextStats stats;
  for (const auto& sentence : segment_sentences(text)) {
    const auto words = tokenize_words(sentence);
    if (words.empty()) continue;
    ++stats.total_sentences;
    for (const auto& word : words) {
      const std::size_t letters = count_letters(word);
      const std::size_t syllables = count_syllables(word);
      ++stats.total_words;
      stats.total_letters += letters;
      stats.total_syllables += syllables;
      if (letters > 7) ++stats.long_words;
      if (syllables >= 3) ++stats.complex_words;
      if (letters > 0 && !wordlist.is_familiar(word)) ++stats.difficult_words;
    }
  }
  return stats;
}

}  // namespace readctl
