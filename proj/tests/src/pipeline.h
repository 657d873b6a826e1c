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
#ifndef READCTL_TESTS_PIPELINE_H_
#define READCTL_TESTS_PIPELINE_H_

#include <filesystem>
#include <string>
#include <vector>

namespace readctl::testing {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

// Runs the CLI in-process. `args` excludes the program name.
CliResult run_cli(const std::vector<std::string>& args,
                  const std::string& stdin_text = "");

std::string read_file(const std::filesystem::path& path);

// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

struct ReplayCheck {
  std::string command;
  std::filesystem::path manifest;
  std::vector<std::string> outputs;
  bool identical = false;
  std::string detail;  // first difference or error
};

// Each command ends with the path its manifest is named after. Runs every
// subcommand once into `dir` (analyze, prepare in both schemes,
// train-lm, greedy and sampled decode, evaluate, ablate), then for each
// manifest deletes its outputs, replays it with run-manifest and compares
// the regenerated files byte for byte.
std::vector<ReplayCheck> pipeline_replay(const std::filesystem::path& dir);

}  // namespace readctl::testing

#endif  // READCTL_TESTS_PIPELINE_H_
