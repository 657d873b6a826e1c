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
#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <unordered_map>

#include "readctl/text_analysis.h"
#include "utf8.h"

namespace readctl {
namespace {

// Words whose spelling defeats the vowel-group rules.
const std::unordered_map<std::string_view, std::size_t>& irregular_words() {
  static const auto* table = new std::unordered_map<std::string_view,
                                                    std::size_t>{
      {"are", 1},     {"one", 1},      {"use", 1},      {"age", 1},
      {"ice", 1},     {"mr", 2},       {"mrs", 2},      {"ms", 1},
      {"ok", 2},      {"people", 2},   {"business", 2}, {"hundred", 2},
      {"every", 2},   {"area", 3},     {"idea", 3},     {"video", 3},
      {"create", 2},  {"science", 2},  {"being", 2},    {"maybe", 2},
      {"league", 1},  {"tongue", 1},   {"vague", 1},    {"plague", 1},
      {"centre", 2},  {"theatre", 3},  {"hour", 1},     {"our", 1},
      {"tired", 2},   {"real", 1},     {"reality", 4},  {"poem", 2},
      {"quiet", 2},   {"lion", 2},     {"usual", 3},    {"actual", 3},
      {"via", 2},     {"anyone", 3},   {"someone", 2},  {"everyone", 3},
      {"unique", 2},  {"museum", 3},   {"nuclear", 3},  {"cruel", 2},
      {"fuel", 2},    {"diet", 2},     {"client", 2},   {"orient", 3},
      {"naive", 2},   {"ion", 2},
  };
  return *table;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool is_vowel_y(char c) { return is_vowel(c) || c == 'y'; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::size_t vowel_groups(std::string_view s) {
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : s) {
    const bool v = is_vowel_y(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Accented Latin vowels fold onto their base letter; any other letter
// outside a-z becomes a neutral consonant.
char fold_letter(char32_t cp) {
  if (cp < 0x80) {
    const char c = static_cast<char>(cp);
    if (c >= 'A' && c <= 'Z') return static_cast<char>(c - 'A' + 'a');
    return c;
  }
  if ((cp >= 0xE0 && cp <= 0xE5) || (cp >= 0xC0 && cp <= 0xC5)) return 'a';
  if ((cp >= 0xE8 && cp <= 0xEB) || (cp >= 0xC8 && cp <= 0xCB)) return 'e';
  if ((cp >= 0xEC && cp <= 0xEF) || (cp >= 0xCC && cp <= 0xCF)) return 'i';
  if ((cp >= 0xF2 && cp <= 0xF6) || (cp >= 0xD2 && cp <= 0xD6)) return 'o';
  if ((cp >= 0xF9 && cp <= 0xFC) || (cp >= 0xD9 && cp <= 0xDC)) return 'u';
  if (cp == 0xFD || cp == 0xFF || cp == 0xDD) return 'y';
  return 'x';
}

// Lowercase letters only, with a trailing possessive removed.
std::string fold_word(std::string_view word) {
  std::string lowered;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const auto cp = utf8::decode(word, pos);
    pos += cp.length;
    if (utf8::is_apostrophe(cp.value)) {
      lowered.push_back('\'');
    } else if (utf8::is_alpha(cp.value)) {
      lowered.push_back(fold_letter(cp.value));
    }
  }
  if (ends_with(lowered, "'s")) lowered.resize(lowered.size() - 2);
  std::erase(lowered, '\'');
  return lowered;
}

std::size_t count_folded(const std::string& w);

std::size_t count_rules(const std::string& w) {
  if (w.size() <= 3) {
    std::string_view s = w;
    if (!s.empty() && s.front() == 'y') s.remove_prefix(1);
    return std::max<std::size_t>(1, vowel_groups(s));
  }

  static constexpr std::array<std::string_view, 4> kCompoundHeads = {
      "some", "every", "any", "no"};
  static constexpr std::array<std::string_view, 8> kCompoundTails = {
      "thing", "where", "body", "one", "times", "time", "how", "way"};
  for (auto head : kCompoundHeads) {
    if (!starts_with(w, head)) continue;
    const std::string_view rest = std::string_view(w).substr(head.size());
    for (auto tail : kCompoundTails) {
      if (rest == tail) {
        return count_folded(std::string(head)) +
               count_folded(std::string(tail));
      }
    }
  }

  // Silent e before a consonant suffix: "likely", "movement", "careful".
  static constexpr std::array<std::string_view, 5> kSuffixes = {
      "ment", "ness", "less", "ful", "ly"};
  for (auto suffix : kSuffixes) {
    if (!ends_with(w, suffix)) continue;
    const std::string stem = w.substr(0, w.size() - suffix.size());
    if (stem.size() >= 3 && stem.back() == 'e' &&
        !is_vowel_y(stem[stem.size() - 2]) && !ends_with(stem, "le")) {
      return count_folded(stem) + 1;
    }
  }

  std::string base;
  base.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    base.push_back(w[i]);
    if (w[i] == 'q' && i + 1 < w.size() && w[i + 1] == 'u') ++i;
  }

  const std::size_t n = base.size();
  if (n >= 3 && ends_with(base, "ed") && !is_vowel(base[n - 3]) &&
      base[n - 3] != 't' && base[n - 3] != 'd') {
    base.resize(n - 2);
  } else if (n >= 3 && ends_with(base, "es") && !is_vowel(base[n - 3])) {
    const bool sibilant = ends_with(base, "ses") || ends_with(base, "xes") ||
                          ends_with(base, "zes") || ends_with(base, "ches") ||
                          ends_with(base, "shes") || ends_with(base, "ces") ||
                          ends_with(base, "ges");
    if (!sibilant) {
      const bool syllabic_le =
          ends_with(base, "les") && !(n >= 4 && is_vowel_y(base[n - 4]));
      base.resize(syllabic_le ? n - 1 : n - 2);
    }
  } else if (base.back() == 'e' && !ends_with(base, "ee") && n > 2 &&
             !(ends_with(base, "le") && n >= 3 && !is_vowel_y(base[n - 3]))) {
    base.pop_back();
  }
  if (!base.empty() && base.front() == 'y') base.erase(0, 1);

  std::size_t count = vowel_groups(base);

  // Hiatus: "radio", "piano", but not "-tion", "-sion", "-cial", "million".
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    if (base[i] != 'i' || (base[i + 1] != 'a' && base[i + 1] != 'o')) continue;
    const char prev = i > 0 ? base[i - 1] : '\0';
    if (prev == 't' || prev == 's' || prev == 'c' || prev == 'x' ||
        prev == 'g') {
      continue;
    }
    if (i >= 2 && base[i - 1] == 'l' && base[i - 2] == 'l') continue;
    ++count;
    ++i;
  }

  // Vowel followed by "ing" ("going", "doing") and "-ying" after a
  // consonant ("flying").
  for (std::size_t i = 0; i + 3 < base.size(); ++i) {
    if (base.compare(i + 1, 3, "ing") == 0 && is_vowel(base[i])) {
      ++count;
      i += 3;
    }
  }
  for (std::size_t i = 0; i + 4 < base.size(); ++i) {
    if (base.compare(i + 1, 4, "ying") == 0 && !is_vowel(base[i])) {
      ++count;
      i += 4;
    }
  }
  // Consonantal y between vowels: "player", "royal".
  for (std::size_t i = 0; i + 2 < base.size(); ++i) {
    if (is_vowel(base[i]) && base[i + 1] == 'y' && is_vowel(base[i + 2])) {
      ++count;
      i += 2;
    }
  }
  // Remaining vowel pairs pronounced apart: "actual", "duo", "video",
  // "happier", "easiest".
  for (std::size_t i = 0; i < base.size();) {
    const std::string_view rest = std::string_view(base).substr(i);
    if (i + 2 < base.size() && !is_vowel(base[i]) &&
        rest.substr(1, 2) == "ua") {
      ++count;
      i += 3;
    } else if (starts_with(rest, "uo")) {
      ++count;
      i += 2;
    } else if (starts_with(rest, "eo") &&
               !(rest.size() > 2 && rest[2] == 'u')) {
      ++count;
      i += 2;
    } else if (rest == "ier") {
      ++count;
      i += 3;
    } else if (rest == "iest") {
      ++count;
      i += 4;
    } else {
      ++i;
    }
  }

  // "fire", "desire": the r-final stem hides a second vowel.
  if (base.size() >= 2 && base.back() == 'r' &&
      is_vowel(base[base.size() - 2]) &&
      (ends_with(w, "ire") || ends_with(w, "ired") || ends_with(w, "ires"))) {
    ++count;
  }
  return std::max<std::size_t>(1, count);
}

std::size_t count_folded(const std::string& w) {
  if (w.empty()) return 1;
  const auto& irregular = irregular_words();
  if (auto it = irregular.find(w); it != irregular.end()) return it->second;
  return count_rules(w);
}

}  // namespace

std::size_t count_syllables(std::string_view word) {
  const std::string folded = fold_word(word);
  if (folded.empty()) return 1;
  return std::clamp<std::size_t>(count_folded(folded), 1, folded.size());
}

}  // namespace readctl
