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
#include "options.h"

#include "readctl/error.h"

namespace readctl::cli {
namespace {

using Json = nlohmann::ordered_json;

// Missing keys keep their defaults so hand-written manifests stay short.
template <typename T>
void get(const Json& j, const char* key, T& field) {
  auto it = j.find(key);
  if (it != j.end()) it->get_to(field);
}

}  // namespace

void to_json(Json& j, const AnalyzeOptions& o) {
  j = Json{{"input", o.input},   {"output", o.output}, {"format", o.format},
           {"gfi", o.gfi},       {"field", o.field},   {"whole", o.whole},
           {"wordlist", o.wordlist}};
}
void from_json(const Json& j, AnalyzeOptions& o) {
  get(j, "input", o.input);
  get(j, "output", o.output);
  get(j, "format", o.format);
  get(j, "gfi", o.gfi);
  get(j, "field", o.field);
  get(j, "whole", o.whole);
  get(j, "wordlist", o.wordlist);
}

void to_json(Json& j, const PrepareOptions& o) {
  j = Json{{"corpus", o.corpus}, {"output", o.output},
           {"scheme", o.scheme}, {"filter", o.filter},
           {"filter_below", o.filter_below}, {"wordlist", o.wordlist}};
}
void from_json(const Json& j, PrepareOptions& o) {
  get(j, "corpus", o.corpus);
  get(j, "output", o.output);
  get(j, "scheme", o.scheme);
  get(j, "filter", o.filter);
  get(j, "filter_below", o.filter_below);
  get(j, "wordlist", o.wordlist);
}

void to_json(Json& j, const TrainOptions& o) {
  j = Json{{"corpus", o.corpus}, {"output", o.output}, {"order", o.order},
           {"smoothing", o.smoothing}, {"field", o.field}};
}
void from_json(const Json& j, TrainOptions& o) {
  get(j, "corpus", o.corpus);
  get(j, "output", o.output);
  get(j, "order", o.order);
  get(j, "smoothing", o.smoothing);
  get(j, "field", o.field);
}

void to_json(Json& j, const DecodeOptions& o) {
  j = Json{{"model", o.model},
           {"corpus", o.corpus},
           {"output", o.output},
           {"targets", o.targets},
           {"w", o.w},
           {"n", o.n},
           {"beam", o.beam},
           {"fanout", o.fanout},
           {"rollout", o.rollout},
           {"rollouts", o.rollouts},
           {"seed", o.seed},
           {"max_len", o.max_len},
           {"min_len", o.min_len},
           {"h_scale", o.h_scale},
           {"faith_weight", o.faith_weight},
           {"source_weight", o.source_weight},
           {"filter", o.filter},
           {"filter_below", o.filter_below},
           {"best_of", o.best_of},
           {"limit", o.limit},
           {"threads", o.threads}};
}
void from_json(const Json& j, DecodeOptions& o) {
  get(j, "model", o.model);
  get(j, "corpus", o.corpus);
  get(j, "output", o.output);
  get(j, "targets", o.targets);
  get(j, "w", o.w);
  get(j, "n", o.n);
  get(j, "beam", o.beam);
  get(j, "fanout", o.fanout);
  get(j, "rollout", o.rollout);
  get(j, "rollouts", o.rollouts);
  get(j, "seed", o.seed);
  get(j, "max_len", o.max_len);
  get(j, "min_len", o.min_len);
  get(j, "h_scale", o.h_scale);
  get(j, "faith_weight", o.faith_weight);
  get(j, "source_weight", o.source_weight);
  get(j, "filter", o.filter);
  get(j, "filter_below", o.filter_below);
  get(j, "best_of", o.best_of);
  get(j, "limit", o.limit);
  get(j, "threads", o.threads);
}

void to_json(Json& j, const EvaluateOptions& o) {
  j = Json{{"generations", o.generations}, {"report", o.report}, {"gfi", o.gfi}};
}
void from_json(const Json& j, EvaluateOptions& o) {
  get(j, "generations", o.generations);
  get(j, "report", o.report);
  get(j, "gfi", o.gfi);
}

void to_json(Json& j, const AblateOptions& o) {
  j = Json{{"decode", o.decode}, {"sweep", o.sweep}, {"gfi", o.gfi}};
}
void from_json(const Json& j, AblateOptions& o) {
  get(j, "decode", o.decode);
  get(j, "sweep", o.sweep);
  get(j, "gfi", o.gfi);
}

std::string absolute_path(const std::string& path) {
  if (path.empty() || path == "-") return path;
  return std::filesystem::absolute(path).lexically_normal().string();
}

void absolutize(AnalyzeOptions& o) {
  o.input = absolute_path(o.input);
  o.output = absolute_path(o.output);
  o.wordlist = absolute_path(o.wordlist);
}
void absolutize(PrepareOptions& o) {
  o.corpus = absolute_path(o.corpus);
  o.output = absolute_path(o.output);
  o.wordlist = absolute_path(o.wordlist);
}
void absolutize(TrainOptions& o) {
  o.corpus = absolute_path(o.corpus);
  o.output = absolute_path(o.output);
}
void absolutize(DecodeOptions& o) {
  o.model = absolute_path(o.model);
  o.corpus = absolute_path(o.corpus);
  o.output = absolute_path(o.output);
}
void absolutize(EvaluateOptions& o) {
  o.generations = absolute_path(o.generations);
  o.report = absolute_path(o.report);
}
void absolutize(AblateOptions& o) { absolutize(o.decode); }

DecoderConfig decoder_config(const DecodeOptions& o) {
  DecoderConfig c;
  c.beam_width = o.beam;
  c.candidate_fanout = o.fanout;
  c.lookahead_n = o.n;
  c.lookahead_w = o.w;
  auto scale = parse_h_scale(o.h_scale);
  if (!scale) throw UsageError("--h-scale must be raw or normalized");
  c.h_scale = *scale;
  auto rollout = parse_rollout(o.rollout);
  if (!rollout) throw UsageError("--rollout must be greedy or sampled");
  c.rollout = *rollout;
  c.rollout_count = o.rollouts;
  c.seed = o.seed;
  c.max_len = o.max_len;
  c.min_len = o.min_len;
  c.h_faith_weight = o.faith_weight;
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return c;
}

}  // namespace readctl::cli
