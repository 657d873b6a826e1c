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
#ifndef READCTL_INSTRUCTION_H_
#define READCTL_INSTRUCTION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "readctl/readability.h"
#include "readctl/text_analysis.h"

namespace readctl {

struct CorpusExample {
  std::string id;
  std::string document;
  std::optional<std::string> summary;

  friend bool operator==(const CorpusExample&, const CorpusExample&) = default;
};

struct InstructionExample {
  std::string id;
  std::string instruction;
  std::string input;  // instruction + document
  ReadabilityTarget target_readability = ReadabilityTarget::score(0.0);
  std::string reference_summary;
  double reference_fre = 0.0;

  friend bool operator==(const InstructionExample&,
                         const InstructionExample&) = default;
};

enum class InstructionScheme { kCategory, kScore };

std::string_view scheme_name(InstructionScheme scheme);
std::optional<InstructionScheme> parse_scheme(std::string_view name);

// "Summarize this for a <audience> student: "
std::string category_instruction(ReadabilityCategory category);
std::string build_category_instruction(double reference_fre);
// "Summarize this with a readability level of <round(fre)>: "
std::string build_score_instruction(double fre_value);

struct PrepareResult {
  std::vector<InstructionExample> examples;
  std::vector<std::string> warnings;  // one per skipped example
};

// Measures every reference summary and prefixes its document with the
// matching instruction. Examples without a summary or whose summary has no
// words are skipped with a warning.
PrepareResult prepare_dataset(const std::vector<CorpusExample>& corpus,
                              InstructionScheme scheme,
                              const WordList& wordlist = WordList::dale_chall());

// Keeps the examples whose document FRE is below `threshold`. Documents
// without words are dropped.
std::vector<CorpusExample> filter_test_set(
    const std::vector<CorpusExample>& corpus, double threshold = 50.0,
    const WordList& wordlist = WordList::dale_chall());

}  // namespace readctl

#endif  // READCTL_INSTRUCTION_H_
