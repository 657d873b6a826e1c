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
#ifndef READCTL_TEXT_ANALYSIS_H_
#define READCTL_TEXT_ANALYSIS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace readctl {

// Count vector consumed by every readability formula.
//
// long_words counts words with more than 7 letters, complex_words counts
// words with three or more syllables, and difficult_words counts words not
// found in the familiar-word list (see WordList::is_familiar).
struct TextStats {
  std::size_t total_words = 0;
  std::size_t total_sentences = 0;
  std::size_t total_syllables = 0;
  std::size_t total_letters = 0;
  std::size_t long_words = 0;
  std::size_t complex_words = 0;
  std::size_t difficult_words = 0;

  TextStats& operator+=(const TextStats& other);
  friend TextStats operator+(TextStats a, const TextStats& b) { return a += b; }
  friend bool operator==(const TextStats&, const TextStats&) = default;
};

// Immutable set of lowercase familiar words (Dale-Chall style).
class WordList {
 public:
  // Loads a UTF-8 file with one word per line. Blank lines and lines
  // starting with '#' are skipped; entries are lowercased and trimmed.
  // Throws FormatError if the file is unreadable or yields no entries.
  static WordList load(const std::filesystem::path& path);

  // Throws InvalidArgument on an empty list or entries containing whitespace.
  static WordList from_words(const std::vector<std::string>& words,
                             std::filesystem::path source_path = {});

  // The bundled Dale-Chall list (data/dale_chall_3000.txt), compiled in.
  static const WordList& dale_chall();

  bool contains(std::string_view lowercase_word) const;

  // Lowercases the word and looks it up. On a miss, retries after stripping
  // a possessive "'s" and then one of the suffixes -s, -es, -ies, -ing, -ed,
  // -ied (also trying the stem with a restored final "e" or "y").
  bool is_familiar(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  const std::filesystem::path& source_path() const { return source_path_; }

 private:
  WordList() = default;

  std::unordered_set<std::string> entries_;
  std::filesystem::path source_path_;
};

// Splits text into sentences on '.', '!' and '?' (and on blank lines).
// Terminators followed by closing quotes or brackets keep those characters.
// Known abbreviations, single-letter initials and periods inside numbers do
// not end a sentence. Trailing unterminated text forms a final sentence.
std::vector<std::string> segment_sentences(std::string_view text);

// Maximal runs of letters and digits, joined across a single internal
// apostrophe or hyphen (and '.' or ',' between digits). Everything else is
// discarded.
std::vector<std::string> tokenize_words(std::string_view sentence);

// Number of alphabetic code points in a UTF-8 word.
std::size_t count_letters(std::string_view word);

// Heuristic syllable count: vowel groups with silent-e, -ed/-es, hiatus
// and suffix corrections plus a table of irregular words. Tokens without
// letters (numbers) count one syllable. Always >= 1.
std::size_t count_syllables(std::string_view word);

// Composes the three operations above. Empty text yields all-zero stats.
TextStats compute_stats(std::string_view text,
                        const WordList& wordlist = WordList::dale_chall());

}  // namespace readctl

#endif  // READCTL_TEXT_ANALYSIS_H_
