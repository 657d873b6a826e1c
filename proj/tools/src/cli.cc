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
#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "options.h"
#include "readctl/error.h"

#ifndef READCTL_VERSION
#define READCTL_VERSION "unknown"
#endif

namespace readctl::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

std::string manifest_path(const std::string& base) {
  return base + ".manifest.json";
}

void write_manifest(const std::string& command, const Json& options,
                    const Outputs& outputs, const std::string& base) {
  Json m;
  m["tool"] = "readctl";
  m["version"] = READCTL_VERSION;
  m["command"] = command;
  m["options"] = options;
  Json files = Json::array();
  for (const auto& p : outputs) files.push_back(p.string());
  m["outputs"] = files;
  std::ofstream out(manifest_path(base), std::ios::binary);
  if (!out) throw UsageError("cannot write " + manifest_path(base));
  out << m.dump(2) << '\n';
}

// Runs `command` with fully resolved options and records the manifest.
void execute(const std::string& command, const Json& options, Streams& io) {
  if (command == "analyze") {
    auto o = options.get<AnalyzeOptions>();
    const auto outputs = cmd_analyze(o, io);
    if (!o.output.empty()) {
      if (o.input == "-") {
        io.err << "warning: input read from stdin; no manifest written\n";
      } else {
        write_manifest(command, Json(o), outputs, o.output);
      }
    }
  } else if (command == "prepare") {
    auto o = options.get<PrepareOptions>();
    write_manifest(command, Json(o), cmd_prepare(o, io), o.output);
  } else if (command == "train-lm") {
    auto o = options.get<TrainOptions>();
    write_manifest(command, Json(o), cmd_train_lm(o, io), o.output);
  } else if (command == "decode") {
    auto o = options.get<DecodeOptions>();
    write_manifest(command, Json(o), cmd_decode(o, io), o.output);
  } else if (command == "evaluate") {
    auto o = options.get<EvaluateOptions>();
    write_manifest(command, Json(o), cmd_evaluate(o, io), o.report);
  } else if (command == "ablate") {
    auto o = options.get<AblateOptions>();
    write_manifest(command, Json(o), cmd_ablate(o, io), o.decode.output);
  } else {
    throw UsageError("unknown command '" + command + "'");
  }
}

void add_decode_flags(CLI::App* sub, DecodeOptions& o) {
  sub->add_option("--model", o.model, "Model file written by train-lm")
      ->required();
  sub->add_option("--corpus", o.corpus, "Corpus JSONL (id, document, summary)")
      ->required();
  sub->add_option("--target", o.targets,
                  "Readability targets: FRE score, score:X, or a category "
                  "(eleven_year_old, middle_school, high_school, college)")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--w", o.w, "Lookahead weight w")->capture_default_str();
  sub->add_option("--n", o.n, "Lookahead horizon n (tokens)")
      ->capture_default_str();
  sub->add_option("--beam", o.beam, "Beam width")->capture_default_str();
  sub->add_option("--fanout", o.fanout,
                  "Tokens expanded per hypothesis (0 = 2 x beam)")
      ->capture_default_str();
  sub->add_option("--rollout", o.rollout, "greedy or sampled")
      ->capture_default_str();
  sub->add_option("--rollouts", o.rollouts, "Continuations per candidate when sampled")
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed for sampled rollouts")
      ->capture_default_str();
  sub->add_option("--max-len", o.max_len, "Maximum generated tokens")
      ->capture_default_str();
  sub->add_option("--min-len", o.min_len, "Minimum tokens before EOS")
      ->capture_default_str();
  sub->add_option("--h-scale", o.h_scale, "normalized or raw")
      ->capture_default_str();
  sub->add_option("--faith-weight", o.faith_weight,
                  "Share of lexical faithfulness in h")
      ->capture_default_str();
  sub->add_option("--source-weight", o.source_weight,
                  "Interpolation weight of the source bigram model")
      ->capture_default_str();
  sub->add_option("--filter-below", o.filter_below,
                  "Keep only documents with FRE below this value");
  sub->add_option("--best-of", o.best_of,
                  "Pick the closest-readability result among the k best beams")
      ->capture_default_str();
  sub->add_option("--limit", o.limit, "Use only the first N corpus records")
      ->capture_default_str();
  sub->add_option("--threads", o.threads, "Worker threads")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Readability-controlled generation toolkit", "readctl"};
  app.set_version_flag("--version", READCTL_VERSION);
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Readability metrics per text");
  a->add_option("input", analyze.input, "Input file, '-' for stdin")
      ->capture_default_str();
  a->add_option("--output", analyze.output, "Write the report here");
  a->add_option("--format", analyze.format, "table, json or csv")
      ->capture_default_str();
  a->add_option("--gfi", analyze.gfi, "GFI variant: paper or standard")
      ->capture_default_str();
  a->add_option("--field", analyze.field,
                "Read JSONL and analyze this string field");
  a->add_flag("--whole", analyze.whole,
              "Treat plain-text input as one text instead of one per line");
  a->add_option("--wordlist", analyze.wordlist, "Easy-word list for DCR");

  PrepareOptions prepare;
  auto* p = app.add_subcommand("prepare", "Build instruction-labelled datasets");
  p->add_option("--corpus", prepare.corpus, "Corpus JSONL")->required();
  p->add_option("--output", prepare.output, "Prepared JSONL")->required();
  p->add_option("--scheme", prepare.scheme, "category or score")
      ->capture_default_str();
  auto* p_filter = p->add_option("--filter-below", prepare.filter_below,
                                 "Keep only documents with FRE below this value");
  p->add_option("--wordlist", prepare.wordlist, "Easy-word list for DCR");

  TrainOptions train;
  auto* t = app.add_subcommand("train-lm", "Train the n-gram language model");
  t->add_option("--corpus", train.corpus, "Corpus JSONL")->required();
  t->add_option("--output", train.output, "Model file")->required();
  t->add_option("--order", train.order, "n-gram order")->capture_default_str();
  t->add_option("--smoothing", train.smoothing, "Add-k constant")
      ->capture_default_str();
  t->add_option("--field", train.field, "summary, document or both")
      ->capture_default_str();

  DecodeOptions decode;
  auto* d = app.add_subcommand("decode", "Generate with lookahead beam search");
  add_decode_flags(d, decode);
  d->add_option("--output", decode.output, "Generations JSONL")->required();

  EvaluateOptions evaluate;
  auto* e = app.add_subcommand("evaluate", "Control and quality statistics");
  e->add_option("--generations", evaluate.generations, "Generations JSONL")
      ->required();
  e->add_option("--report", evaluate.report,
                "Output prefix for .json, .csv, .records.csv and .txt")
      ->required();
  e->add_option("--gfi", evaluate.gfi, "GFI variant: paper or standard")
      ->capture_default_str();

  AblateOptions ablate;
  auto* b = app.add_subcommand("ablate", "Sweep one decoder parameter");
  add_decode_flags(b, ablate.decode);
  b->add_option("--sweep", ablate.sweep,
                "parameter=values with parameter in n, w, beam, faith")
      ->capture_default_str();
  b->add_option("--output", ablate.decode.output,
                "Output prefix for .json, .csv and .txt")
      ->required();
  b->add_option("--gfi", ablate.gfi, "GFI variant: paper or standard")
      ->capture_default_str();

  std::string manifest;
  auto* r = app.add_subcommand("run-manifest",
                               "Re-run a command from its manifest");
  r->add_option("manifest", manifest, "Manifest written next to an output")
      ->required();

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (a->parsed()) {
      absolutize(analyze);
      execute("analyze", Json(analyze), io);
    } else if (p->parsed()) {
      prepare.filter = p_filter->count() > 0;
      absolutize(prepare);
      execute("prepare", Json(prepare), io);
    } else if (t->parsed()) {
      absolutize(train);
      execute("train-lm", Json(train), io);
    } else if (d->parsed()) {
      decode.filter = d->get_option("--filter-below")->count() > 0;
      absolutize(decode);
      execute("decode", Json(decode), io);
    } else if (e->parsed()) {
      absolutize(evaluate);
      execute("evaluate", Json(evaluate), io);
    } else if (b->parsed()) {
      ablate.decode.filter = b->get_option("--filter-below")->count() > 0;
      absolutize(ablate);
      execute("ablate", Json(ablate), io);
    } else if (r->parsed()) {
      std::ifstream mf(manifest, std::ios::binary);
      if (!mf) throw UsageError("cannot read " + manifest);
      Json m;
      try {
        m = Json::parse(mf);
      } catch (const Json::parse_error& ex) {
        throw UsageError(std::string("bad manifest: ") + ex.what());
      }
      if (!m.is_object() || !m.contains("command") || !m.contains("options")) {
        throw UsageError("manifest lacks command/options");
      }
      execute(m["command"].get<std::string>(), m["options"], io);
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const EmptyCorpus& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace readctl::cli
