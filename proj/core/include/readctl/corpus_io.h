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
#ifndef READCTL_CORPUS_IO_H_
#define READCTL_CORPUS_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "readctl/eval.h"
#include "readctl/instruction.h"

namespace readctl {

// JSON Lines files, one record per line. Blank lines are skipped; any
// malformed line raises FormatError naming the line.
//
// corpus:      {"id", "document", "summary"?}
// prepared:    corpus fields + "instruction", "input", "target_kind",
//              "target_value", "reference_fre"
// generations: {"id", "target_kind", "target_value", "target_fre", "text",
//               "length", "logprob", "score", "observed_fre", "source",
//               "reference_summary"?}
//
// target_kind is "score" (target_value numeric) or "category" (target_value
// a category name). On reading generations, observed_fre is recomputed
// from the text.

std::vector<CorpusExample> read_corpus(std::istream& in);
std::vector<CorpusExample> read_corpus(const std::filesystem::path& path);
void write_corpus(std::ostream& out, const std::vector<CorpusExample>& corpus);

std::vector<InstructionExample> read_prepared(std::istream& in);
void write_prepared(std::ostream& out,
                    const std::vector<InstructionExample>& examples);

std::vector<RunRecord> read_generations(std::istream& in);
std::vector<RunRecord> read_generations(const std::filesystem::path& path);
void write_generations(std::ostream& out,
                       const std::vector<RunRecord>& records);

}  // namespace readctl

#endif  // READCTL_CORPUS_IO_H_
