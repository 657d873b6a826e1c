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

#include "oracles.h"
#include "readctl/instruction.h"
#include "pipeline.h"

namespace readctl {
namespace {

using testing::run_cli;

TEST(Cli, AnalyzeStdin) {
  const auto r = run_cli({"analyze", "--format", "csv"}, "The cat sat.\n");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("119.19"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeEmptyFile) {
  const auto dir = testing::scratch_dir("cli-empty");
  const auto empty = dir / "empty.txt";
  std::ofstream(empty).close();
  const auto r = run_cli({"analyze", empty.string(), "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty()) << r.out;
}

TEST(Cli, AnalyzeWholeTextStandardGfi) {
  const auto r = run_cli(
      {"analyze", "--whole", "--gfi", "standard", "--format", "json"},
      "Real Madrid and Barcelona played basketball on Thursday night. Barca won "
      "the game 85-80, but Real are top of the Euro League by points. Neymar and "
      "his sister Rafaella went to watch the game with friends.");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"gfi_variant\":\"standard\""), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"prepare", "--corpus", "/nonexistent.jsonl", "--output", "/tmp/x"}).code, 2);
  EXPECT_EQ(run_cli({"train-lm", "--output", "/tmp/x"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", "--format", "yaml"}, "Text.").code, 2);
  EXPECT_EQ(run_cli({"run-manifest", "/nonexistent.manifest.json"}).code, 2);
  const auto dir = testing::scratch_dir("cli-bad");
  const auto bad = dir / "bad.jsonl";
  std::ofstream(bad) << "{\"id\": \"x\"}\nnot json\n";
  const auto r = run_cli({"prepare", "--corpus", bad.string(), "--output", (dir / "o").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
}

TEST(Cli, HelpDocumentsFlags) {
  const auto r = run_cli({"decode", "--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--model", "--w", "--n", "--beam", "--rollout", "--seed",
                           "--max-len", "--min-len", "--h-scale", "--best-of"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
}

TEST(Cli, PrepareReportsDistribution) {
  const auto dir = testing::scratch_dir("cli-prepare");
  const auto r = run_cli({"prepare", "--corpus",
                          (testing::data_dir() / "toy_corpus.jsonl").string(),
                          "--output", (dir / "p.jsonl").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  for (auto c : kAllCategories) {
    EXPECT_NE(r.out.find(category_instruction(c)), std::string::npos) << r.out;
  }
}

TEST(Cli, SameSeedTwiceIsByteIdentical) {
  const auto dir = testing::scratch_dir("cli-seed");
  const std::string corpus = (testing::data_dir() / "toy_corpus.jsonl").string();
  ASSERT_EQ(run_cli({"train-lm", "--corpus", corpus, "--output", (dir / "m").string()}).code, 0);
  auto decode = [&](const char* out) {
    return run_cli({"decode", "--model", (dir / "m").string(), "--corpus", corpus,
                    "--limit", "2", "--n", "3", "--rollout", "sampled",
                    "--rollouts", "2", "--seed", "5", "--output", (dir / out).string()});
  };
  ASSERT_EQ(decode("a.jsonl").code, 0);
  ASSERT_EQ(decode("b.jsonl").code, 0);
  EXPECT_EQ(testing::read_file(dir / "a.jsonl"), testing::read_file(dir / "b.jsonl"));
  EXPECT_FALSE(testing::read_file(dir / "a.jsonl").empty());
}

TEST(Cli, EveryCommandReplaysFromManifest) {
  const auto checks = testing::pipeline_replay(testing::scratch_dir("cli-replay"));
  EXPECT_EQ(checks.size(), 8u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.identical) << c.command << ": " << c.detail;
  }
}

}  // namespace
}  // namespace readctl
