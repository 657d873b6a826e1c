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
#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.h"
#include "readctl/error.h"
#include "readctl/text_analysis.h"

namespace readctl {
namespace {

using Strings = std::vector<std::string>;

TEST(SegmentSentences, SplitsTerminatedClauses) {
  EXPECT_EQ(segment_sentences("The cat sat. It slept."),
            (Strings{"The cat sat.", "It slept."}));
}

TEST(SegmentSentences, EmptyInput) {
  EXPECT_TRUE(segment_sentences("").empty());
  EXPECT_TRUE(segment_sentences("  \n\t ").empty());
}

TEST(SegmentSentences, ScoreLineIsTwoSentences) {
  EXPECT_EQ(segment_sentences("Barca won 85-80 on Thursday night. Real remain top.")
                .size(),
            2u);
}

TEST(SegmentSentences, AbbreviationsInitialsAndNumbers) {
  EXPECT_EQ(segment_sentences("Dr. Smith met J. R. Jones at 9.30 today. Then he left.")
                .size(),
            2u);
  EXPECT_EQ(segment_sentences("The U.S. economy grew. Officials were pleased.")
                .size(),
            2u);
}

TEST(SegmentSentences, ClosingQuotesStayAttached) {
  EXPECT_EQ(segment_sentences("\"Stop!\" she said. (It worked.) Fine"),
            (Strings{"\"Stop!\"", "she said.", "(It worked.)", "Fine"}));
}

TEST(SegmentSentences, BlankLineEndsSentence) {
  EXPECT_EQ(segment_sentences("A heading\n\nBody text here."),
            (Strings{"A heading", "Body text here."}));
}

TEST(SegmentSentences, UnterminatedTail) {
  EXPECT_EQ(segment_sentences("One. Two three"),
            (Strings{"One.", "Two three"}));
}

TEST(TokenizeWords, Basic) {
  EXPECT_EQ(tokenize_words("The cat sat."), (Strings{"The", "cat", "sat"}));
}

TEST(TokenizeWords, Possessive) {
  EXPECT_EQ(tokenize_words("Neymar's sister"), (Strings{"Neymar's", "sister"}));
}

TEST(TokenizeWords, NumericTokenKeptWithoutLetters) {
  EXPECT_EQ(tokenize_words("85-80 victory"), (Strings{"85-80", "victory"}));
  EXPECT_EQ(count_letters("85-80"), 0u);
}

TEST(TokenizeWords, HyphensDecimalsAndSeparators) {
  EXPECT_EQ(tokenize_words("mother-in-law paid 2.5 -- or 1,000 -- dollars"),
            (Strings{"mother-in-law", "paid", "2.5", "or", "1,000", "dollars"}));
  EXPECT_EQ(tokenize_words("end. 'quoted'"), (Strings{"end", "quoted"}));
}

TEST(CountLetters, Utf8) {
  EXPECT_EQ(count_letters("caf\xc3\xa9"), 4u);
  EXPECT_EQ(count_letters("it's"), 3u);
}

TEST(CountSyllables, Examples) {
  EXPECT_EQ(count_syllables("cat"), 1u);
  EXPECT_EQ(count_syllables("summarize"), 3u);
  EXPECT_EQ(count_syllables("readability"), 5u);
}

TEST(CountSyllables, AtLeastOne) {
  for (const char* w : {"a", "rhythm", "42", "x", "-", "shh"}) {
    EXPECT_GE(count_syllables(w), 1u) << w;
  }
}

TEST(CountSyllables, CaseInsensitive) {
  EXPECT_EQ(count_syllables("Readability"), count_syllables("readability"));
  EXPECT_EQ(count_syllables("CAT"), 1u);
}

// Dictionary-pronunciation oracle (CMU), see data/scripts.
TEST(CountSyllables, OracleAgreementAtLeast90Percent) {
  std::ifstream in(testing::data_dir() / "syllable_oracle.tsv");
  ASSERT_TRUE(in);
  std::string line;
  std::size_t total = 0, agree = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos) << line;
    const std::string word = line.substr(0, tab);
    const std::size_t expected = std::stoul(line.substr(tab + 1));
    ++total;
    if (count_syllables(word) == expected) ++agree;
  }
  ASSERT_GE(total, 200u);
  EXPECT_GE(static_cast<double>(agree) / static_cast<double>(total), 0.90)
      << agree << "/" << total;
}

TEST(ComputeStats, CatSat) {
  const TextStats s = compute_stats("The cat sat.");
  EXPECT_EQ(s.total_words, 3u);
  EXPECT_EQ(s.total_sentences, 1u);
  EXPECT_EQ(s.total_syllables, 3u);
  EXPECT_EQ(s.total_letters, 9u);
  EXPECT_EQ(s.long_words, 0u);
  EXPECT_EQ(s.complex_words, 0u);
  EXPECT_EQ(s.difficult_words, 0u);
}

TEST(ComputeStats, EmptyIsAllZero) {
  EXPECT_EQ(compute_stats(""), TextStats{});
  EXPECT_EQ(compute_stats("... !!"), TextStats{});
}

TEST(ComputeStats, LongComplexDifficult) {
  const TextStats s = compute_stats("Photosynthesis is extraordinary.");
  EXPECT_EQ(s.total_words, 3u);
  EXPECT_EQ(s.long_words, 2u);
  EXPECT_EQ(s.complex_words, 2u);
  EXPECT_EQ(s.difficult_words, 2u);
}

TEST(ComputeStats, AdditiveOverSentences) {
  const TextStats a = compute_stats("The cat sat.");
  const TextStats b = compute_stats("Interdisciplinary work is hard.");
  EXPECT_EQ(compute_stats("The cat sat. Interdisciplinary work is hard."), a + b);
}

TEST(WordList, FamiliarWithSuffixes) {
  const WordList& dc = WordList::dale_chall();
  EXPECT_GT(dc.size(), 2900u);
  EXPECT_TRUE(dc.is_familiar("Cat"));
  EXPECT_TRUE(dc.is_familiar("cats"));
  EXPECT_TRUE(dc.is_familiar("jumped"));
  EXPECT_TRUE(dc.is_familiar("jumping"));
  EXPECT_TRUE(dc.is_familiar("mother's"));
  EXPECT_FALSE(dc.is_familiar("photosynthesis"));
}

TEST(WordList, FromWordsAndLoad) {
  const WordList custom = WordList::from_words({"Alpha", "beta"});
  EXPECT_TRUE(custom.contains("alpha"));
  EXPECT_EQ(compute_stats("Alpha beta gamma.", custom).difficult_words, 1u);
  EXPECT_THROW(WordList::from_words({}), InvalidArgument);
  EXPECT_THROW(WordList::from_words({"two words"}), InvalidArgument);

  const auto path = std::filesystem::temp_directory_path() / "readctl_wl.txt";
  {
    std::ofstream out(path);
    out << "# comment\n\n Gamma \n";
  }
  const WordList loaded = WordList::load(path);
  EXPECT_EQ(loaded.size(), 1u);
  EXPECT_TRUE(loaded.contains("gamma"));
  EXPECT_THROW(WordList::load(path.string() + ".missing"), FormatError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace readctl
