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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "options.h"
#include "readctl/corpus_io.h"
#include "readctl/error.h"
#include "readctl/instruction.h"
#include "readctl/ngram_model.h"
#include "readctl/source_mixture_model.h"

namespace readctl::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string fmt2(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  auto out = open_output(path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string read_all(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CorpusExample> load_corpus(const std::string& path) {
  if (path.empty()) throw UsageError("--corpus is required");
  if (!std::filesystem::exists(path)) throw UsageError("cannot read " + path);
  return read_corpus(std::filesystem::path(path));
}

WordList load_wordlist(const std::string& path) {
  if (path.empty()) return WordList::dale_chall();
  if (!std::filesystem::exists(path)) throw UsageError("cannot read " + path);
  return WordList::load(path);
}

GfiVariant gfi_variant(const std::string& name) {
  auto v = parse_gfi_variant(name);
  if (!v) throw UsageError("--gfi must be paper or standard");
  return *v;
}

struct TextRecord {
  std::string id;
  std::string text;
};

std::vector<TextRecord> analyze_records(const AnalyzeOptions& o,
                                        const std::string& data) {
  std::vector<TextRecord> records;
  if (o.field.empty() && o.whole) {
    if (data.find_first_not_of(" \t\r\n") != std::string::npos) {
      records.push_back({"1", data});
    }
    return records;
  }
  std::istringstream lines(data);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (o.field.empty()) {
      records.push_back({std::to_string(line_no), line});
      continue;
    }
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
    auto it = j.find(o.field);
    if (it == j.end() || !it->is_string()) {
      throw UsageError("line " + std::to_string(line_no) + ": no string field '" +
                       o.field + "'");
    }
    std::string id = std::to_string(line_no);
    if (auto idit = j.find("id"); idit != j.end() && idit->is_string()) {
      id = idit->get<std::string>();
    }
    records.push_back({id, it->get<std::string>()});
  }
  return records;
}

// Decodes every (example, target) pair; the result is in input order.
std::vector<RunRecord> run_decode(const DecodeOptions& o, const NGramModel& lm,
                                  std::vector<CorpusExample> corpus,
                                  Streams& io) {
  if (o.filter) corpus = filter_test_set(corpus, o.filter_below);
  if (o.limit > 0 && corpus.size() > static_cast<std::size_t>(o.limit)) {
    corpus.resize(static_cast<std::size_t>(o.limit));
  }
  if (o.targets.empty()) throw UsageError("at least one --target is required");
  std::vector<ReadabilityTarget> targets;
  for (const auto& t : o.targets) {
    try {
      targets.push_back(ReadabilityTarget::parse(t));
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
  if (o.best_of < 1) throw UsageError("--best-of must be >= 1");
  if (o.threads < 1) throw UsageError("--threads must be >= 1");
  if (!(o.source_weight >= 0.0 && o.source_weight <= 1.0)) {
    throw UsageError("--source-weight must lie in [0, 1]");
  }
  const DecoderConfig config = decoder_config(o);
  const SourceMixtureModel model(lm, o.source_weight);

  struct Task {
    const CorpusExample* example;
    ReadabilityTarget target;
  };
  std::vector<Task> tasks;
  for (const auto& ex : corpus) {
    for (const auto& t : targets) tasks.push_back({&ex, t});
  }
  std::vector<std::optional<RunRecord>> results(tasks.size());
  std::vector<std::string> failures(tasks.size());

  auto work = [&](std::size_t begin, std::size_t stride) {
    LookaheadDecoder decoder(model, config);
    for (std::size_t i = begin; i < tasks.size(); i += stride) {
      const auto& task = tasks[i];
      try {
        RunRecord r;
        r.example_id = task.example->id;
        r.target = task.target;
        r.source = task.example->document;
        r.reference_summary = task.example->summary;
        if (o.best_of > 1) {
          auto nbest = decoder.decode_n_best(r.source, r.target);
          const std::size_t k =
              std::min(nbest.size(), static_cast<std::size_t>(o.best_of));
          r.generated = select_best_of_k(
              std::span<const GenerationResult>(nbest.data(), k),
              r.target.resolve());
        } else {
          r.generated = decoder.decode(r.source, r.target);
        }
        results[i] = std::move(r);
      } catch (const EmptyGeneration& e) {
        failures[i] = e.what();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(o.threads),
                            std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  std::vector<RunRecord> records;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (results[i]) {
      records.push_back(std::move(*results[i]));
    } else {
      io.err << "warning: " << tasks[i].example->id << " target "
             << tasks[i].target.to_string() << ": " << failures[i] << '\n';
    }
  }
  return records;
}

NGramModel load_model(const std::string& path) {
  if (path.empty()) throw UsageError("--model is required");
  if (!std::filesystem::exists(path)) throw UsageError("cannot read " + path);
  return NGramModel::load(std::filesystem::path(path));
}

std::vector<std::pair<std::string, std::string>> decode_metadata(
    const DecodeOptions& o) {
  std::vector<std::pair<std::string, std::string>> m;
  Json j = o;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "output" || it.key() == "threads") continue;
    m.emplace_back(it.key(), it->is_string() ? it->get<std::string>() : it->dump());
  }
  return m;
}

}  // namespace

Outputs cmd_analyze(const AnalyzeOptions& o, Streams& io) {
  const GfiVariant variant = gfi_variant(o.gfi);
  if (o.format != "table" && o.format != "json" && o.format != "csv") {
    throw UsageError("--format must be table, json or csv");
  }
  const WordList wordlist = load_wordlist(o.wordlist);
  const auto records = analyze_records(o, read_all(o.input, io.in));

  std::ostringstream report;
  if (o.format == "table") {
    report << "id\twords\tsentences\tFRE\tGFI\tARI\tDCR\tCLI\n";
  } else if (o.format == "csv") {
    report << "id,words,sentences,syllables,letters,fre,gfi,ari,dcr,cli\n";
  }
  for (const auto& r : records) {
    const TextStats s = compute_stats(r.text, wordlist);
    if (s.total_words == 0) {
      io.err << "warning: record " << r.id << " has no words; skipped\n";
      continue;
    }
    const double f = fre(s).value, g = gfi(s, variant).value, a = ari(s).value,
                 d = dcr(s).value, c = cli_index(s).value;
    if (o.format == "table") {
      report << r.id << '\t' << s.total_words << '\t' << s.total_sentences
             << '\t' << fmt2(f) << '\t' << fmt2(g) << '\t' << fmt2(a) << '\t'
             << fmt2(d) << '\t' << fmt2(c) << '\n';
    } else if (o.format == "csv") {
      report << r.id << ',' << s.total_words << ',' << s.total_sentences << ','
             << s.total_syllables << ',' << s.total_letters << ',' << fmt2(f)
             << ',' << fmt2(g) << ',' << fmt2(a) << ',' << fmt2(d) << ','
             << fmt2(c) << '\n';
    } else {
      Json j{{"id", r.id},
             {"words", s.total_words},
             {"sentences", s.total_sentences},
             {"syllables", s.total_syllables},
             {"letters", s.total_letters},
             {"long_words", s.long_words},
             {"complex_words", s.complex_words},
             {"difficult_words", s.difficult_words},
             {"fre", f},
             {"gfi", g},
             {"gfi_variant", o.gfi},
             {"ari", a},
             {"dcr", d},
             {"cli", c}};
      report << j.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
    }
  }
  if (o.output.empty()) {
    io.out << report.str();
    return {};
  }
  write_file(o.output, report.str());
  return {o.output};
}

Outputs cmd_prepare(const PrepareOptions& o, Streams& io) {
  if (o.output.empty()) throw UsageError("--output is required");
  auto scheme = parse_scheme(o.scheme);
  if (!scheme) throw UsageError("--scheme must be category or score");
  const WordList wordlist = load_wordlist(o.wordlist);
  auto corpus = load_corpus(o.corpus);
  const std::size_t before = corpus.size();
  if (o.filter) corpus = filter_test_set(corpus, o.filter_below, wordlist);
  const auto prepared = prepare_dataset(corpus, *scheme, wordlist);
  for (const auto& w : prepared.warnings) io.err << "warning: " << w << '\n';
  {
    auto out = open_output(o.output);
    write_prepared(out, prepared.examples);
  }
  if (o.filter) {
    io.out << "kept " << corpus.size() << " of " << before
           << " documents with FRE below " << o.filter_below << '\n';
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& ex : prepared.examples) ++counts[ex.instruction];
  io.out << "prepared " << prepared.examples.size() << " examples ("
         << o.scheme << " scheme)\n";
  for (const auto& [instruction, n] : counts) {
    io.out << "  " << n << "\t" << instruction << '\n';
  }
  return {o.output};
}

Outputs cmd_train_lm(const TrainOptions& o, Streams& io) {
  if (o.output.empty()) throw UsageError("--output is required");
  if (o.field != "summary" && o.field != "document" && o.field != "both") {
    throw UsageError("--field must be summary, document or both");
  }
  const auto corpus = load_corpus(o.corpus);
  std::vector<std::string> texts;
  for (const auto& ex : corpus) {
    if (o.field != "summary") texts.push_back(ex.document);
    if (o.field != "document" && ex.summary) texts.push_back(*ex.summary);
  }
  NGramModel model = [&] {
    try {
      return NGramModel::train(texts, o.order, o.smoothing);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }();
  std::filesystem::path path(o.output);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  model.save(path);
  io.out << "trained order-" << o.order << " model on " << texts.size()
         << " texts: " << model.vocabulary().size() << " tokens, "
         << model.num_histories() << " histories\n";
  return {o.output};
}

Outputs cmd_decode(const DecodeOptions& o, Streams& io) {
  if (o.output.empty()) throw UsageError("--output is required");
  const NGramModel lm = load_model(o.model);
  const auto records = run_decode(o, lm, load_corpus(o.corpus), io);
  {
    auto out = open_output(o.output);
    write_generations(out, records);
  }
  io.out << "wrote " << records.size() << " generations";
  if (!records.empty()) io.out << "; FRE delta " << fmt2(fre_delta(records));
  io.out << '\n';
  return {o.output};
}

Outputs cmd_evaluate(const EvaluateOptions& o, Streams& io) {
  if (o.report.empty()) throw UsageError("--report is required");
  if (!std::filesystem::exists(o.generations)) {
    throw UsageError("cannot read " + o.generations);
  }
  const auto records = read_generations(std::filesystem::path(o.generations));
  ReportOptions options;
  options.gfi_variant = gfi_variant(o.gfi);
  options.metadata = {{"generations", o.generations}, {"gfi", o.gfi}};
  const EvalReport report = build_report(records, options);
  const std::string prefix = o.report;
  Outputs outputs = {prefix + ".json", prefix + ".csv", prefix + ".records.csv",
                     prefix + ".txt"};
  write_file(outputs[0], report_to_json(report));
  write_file(outputs[1], report_to_csv(report));
  write_file(outputs[2], records_to_csv(report));
  const std::string table = report_to_table(report);
  write_file(outputs[3], table);
  io.out << table;
  return outputs;
}

Outputs cmd_ablate(const AblateOptions& o, Streams& io) {
  if (o.decode.output.empty()) throw UsageError("--output is required");
  const auto eq = o.sweep.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("--sweep must look like n=3,5,10,20");
  }
  const std::string parameter = o.sweep.substr(0, eq);
  if (parameter != "n" && parameter != "w" && parameter != "beam" &&
      parameter != "faith") {
    throw UsageError("--sweep parameter must be n, w, beam or faith");
  }
  std::vector<double> values;
  {
    std::istringstream list(o.sweep.substr(eq + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("bad sweep value '" + item + "'");
      }
    }
  }
  if (values.empty()) throw UsageError("--sweep lists no values");

  const NGramModel lm = load_model(o.decode.model);
  const auto corpus = load_corpus(o.decode.corpus);
  ReportOptions report_options;
  report_options.gfi_variant = gfi_variant(o.gfi);
  std::vector<SweepRow> rows;
  for (double v : values) {
    DecodeOptions d = o.decode;
    if (parameter == "n") d.n = static_cast<int>(v);
    if (parameter == "w") d.w = v;
    if (parameter == "beam") d.beam = static_cast<int>(v);
    if (parameter == "faith") d.faith_weight = v;
    const auto records = run_decode(d, lm, corpus, io);
    if (records.empty()) throw EmptyRun("sweep setting produced no generations");
    rows.push_back({parameter, v, build_report(records, report_options)});
  }
  auto metadata = decode_metadata(o.decode);
  metadata.emplace_back("sweep", o.sweep);
  const std::string prefix = o.decode.output;
  Outputs outputs = {prefix + ".json", prefix + ".csv", prefix + ".txt"};
  write_file(outputs[0], sweep_to_json(rows, metadata));
  write_file(outputs[1], sweep_to_csv(rows));
  const std::string table = sweep_to_table(rows);
  write_file(outputs[2], table);
  io.out << table;
  return outputs;
}

}  // namespace readctl::cli
