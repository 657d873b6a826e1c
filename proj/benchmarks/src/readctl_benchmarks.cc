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
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "readctl/corpus_io.h"
#include "readctl/lookahead_decoder.h"
#include "readctl/ngram_model.h"
#include "readctl/source_mixture_model.h"
#include "readctl/text_analysis.h"

namespace {

const std::vector<readctl::CorpusExample>& corpus() {
  static const auto c =
      readctl::read_corpus(std::filesystem::path(READCTL_SOURCE_DIR "/data/toy_corpus.jsonl"));
  return c;
}

const readctl::NGramModel& model() {
  static const auto m = [] {
    std::vector<std::string> texts;
    for (const auto& e : corpus()) texts.push_back(*e.summary);
    return readctl::NGramModel::train(texts, 3, 0.01);
  }();
  return m;
}

void BM_ComputeStats(benchmark::State& state) {
  const std::string& doc = corpus()[0].document;
  for (auto _ : state) benchmark::DoNotOptimize(readctl::compute_stats(doc));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * doc.size()));
}
BENCHMARK(BM_ComputeStats);

void BM_CountSyllables(benchmark::State& state) {
  const std::vector<std::string> words = {"readability", "summarize", "cat",
                                          "interdisciplinary", "photosynthesis",
                                          "committee", "everyone", "created"};
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(readctl::count_syllables(w));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * words.size()));
}
BENCHMARK(BM_CountSyllables);

void BM_NextDistribution(benchmark::State& state) {
  const auto& m = model();
  const std::vector<readctl::TokenId> ctx = {m.vocabulary().lookup("the"),
                                             m.vocabulary().lookup("city")};
  for (auto _ : state) benchmark::DoNotOptimize(m.next_distribution(ctx));
}
BENCHMARK(BM_NextDistribution);

void BM_Decode(benchmark::State& state) {
  const readctl::SourceMixtureModel mix(model(), 0.5);
  readctl::DecoderConfig config;
  config.lookahead_n = static_cast<int>(state.range(0));
  config.lookahead_w = config.lookahead_n == 0 ? 0.0 : 25.0;
  readctl::LookaheadDecoder decoder(mix, config);
  const std::string& doc = corpus()[1].document;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoder.decode(doc, readctl::ReadabilityTarget::score(70)));
  }
}
BENCHMARK(BM_Decode)->Arg(0)->Arg(3)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
