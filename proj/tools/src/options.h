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
#ifndef READCTL_TOOLS_OPTIONS_H_
#define READCTL_TOOLS_OPTIONS_H_

#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "readctl/lookahead_decoder.h"

namespace readctl::cli {

// Raised for bad flags or unusable input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct AnalyzeOptions {
  std::string input = "-";
  std::string output;  // stdout when empty
  std::string format = "table";  // table | json | csv
  std::string gfi = "paper";
  std::string field;  // JSONL field to read; plain text lines when empty
  bool whole = false;  // plain text input as a single record
  std::string wordlist;
};

struct PrepareOptions {
  std::string corpus;
  std::string output;
  std::string scheme = "category";
  bool filter = false;
  double filter_below = 50.0;
  std::string wordlist;
};

struct TrainOptions {
  std::string corpus;
  std::string output;
  int order = 3;
  double smoothing = 0.01;
  std::string field = "summary";  // summary | document | both
};

struct DecodeOptions {
  std::string model;
  std::string corpus;
  std::string output;
  std::vector<std::string> targets = {"30", "50", "70", "90"};
  double w = 25.0;
  int n = 20;
  int beam = 3;
  int fanout = 0;
  std::string rollout = "greedy";
  int rollouts = 1;
  std::uint64_t seed = 0;
  int max_len = 64;
  int min_len = 8;
  std::string h_scale = "normalized";
  double faith_weight = 0.0;
  double source_weight = 0.5;
  bool filter = false;
  double filter_below = 50.0;
  int best_of = 1;
  int limit = 0;  // first N corpus records; 0 keeps all
  int threads = 1;
};

struct EvaluateOptions {
  std::string generations;
  std::string report;  // output prefix
  std::string gfi = "paper";
};

struct AblateOptions {
  DecodeOptions decode;
  std::string sweep = "n=3,5,10,20";
  std::string gfi = "paper";
};

void to_json(nlohmann::ordered_json& j, const AnalyzeOptions& o);
void from_json(const nlohmann::ordered_json& j, AnalyzeOptions& o);
void to_json(nlohmann::ordered_json& j, const PrepareOptions& o);
void from_json(const nlohmann::ordered_json& j, PrepareOptions& o);
void to_json(nlohmann::ordered_json& j, const TrainOptions& o);
void from_json(const nlohmann::ordered_json& j, TrainOptions& o);
void to_json(nlohmann::ordered_json& j, const DecodeOptions& o);
void from_json(const nlohmann::ordered_json& j, DecodeOptions& o);
void to_json(nlohmann::ordered_json& j, const EvaluateOptions& o);
void from_json(const nlohmann::ordered_json& j, EvaluateOptions& o);
void to_json(nlohmann::ordered_json& j, const AblateOptions& o);
void from_json(const nlohmann::ordered_json& j, AblateOptions& o);

// Absolute, lexically normal form; "-" and "" pass through.
std::string absolute_path(const std::string& path);
void absolutize(AnalyzeOptions& o);
void absolutize(PrepareOptions& o);
void absolutize(TrainOptions& o);
void absolutize(DecodeOptions& o);
void absolutize(EvaluateOptions& o);
void absolutize(AblateOptions& o);

DecoderConfig decoder_config(const DecodeOptions& o);

// Each command returns the files it wrote (manifest excluded).
using Outputs = std::vector<std::filesystem::path>;
Outputs cmd_analyze(const AnalyzeOptions& o, Streams& io);
Outputs cmd_prepare(const PrepareOptions& o, Streams& io);
Outputs cmd_train_lm(const TrainOptions& o, Streams& io);
Outputs cmd_decode(const DecodeOptions& o, Streams& io);
Outputs cmd_evaluate(const EvaluateOptions& o, Streams& io);
Outputs cmd_ablate(const AblateOptions& o, Streams& io);

}  // namespace readctl::cli

#endif  // READCTL_TOOLS_OPTIONS_H_
