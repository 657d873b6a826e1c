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
#include "readctl/corpus_io.h"

#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <unordered_set>

#include "readctl/error.h"

namespace readctl {
namespace {

using Json = nlohmann::ordered_json;

template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      if (!j.is_object()) throw FormatError("record is not an object");
      fn(j);
    } catch (const Json::exception& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::string required_string(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw FormatError(std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw FormatError(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

double required_number(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number()) {
    throw FormatError(std::string("missing numeric field '") + key + "'");
  }
  return it->get<double>();
}

void put_target(Json& j, const ReadabilityTarget& target) {
  if (target.kind() == ReadabilityTarget::Kind::kScore) {
    j["target_kind"] = "score";
    j["target_value"] = target.score_value();
  } else {
    j["target_kind"] = "category";
    j["target_value"] = std::string(category_name(target.category_value()));
  }
}

ReadabilityTarget get_target(const Json& j) {
  const std::string kind = required_string(j, "target_kind");
  if (kind == "score") {
    return ReadabilityTarget::score(required_number(j, "target_value"));
  }
  if (kind == "category") {
    auto c = parse_category(required_string(j, "target_value"));
    if (!c) throw FormatError("unknown category in target_value");
    return ReadabilityTarget::category(*c);
  }
  throw FormatError("target_kind must be 'score' or 'category'");
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<CorpusExample> read_corpus(std::istream& in) {
  std::vector<CorpusExample> out;
  std::unordered_set<std::string> ids;
  for_each_record(in, [&](const Json& j) {
    CorpusExample ex;
    ex.id = required_string(j, "id");
    ex.document = required_string(j, "document");
    ex.summary = optional_string(j, "summary");
    if (ex.document.empty()) throw FormatError("empty document");
    if (!ids.insert(ex.id).second) throw FormatError("duplicate id " + ex.id);
    out.push_back(std::move(ex));
  });
  return out;
}

std::vector<CorpusExample> read_corpus(const std::filesystem::path& path) {
  auto in = open(path);
  return read_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<CorpusExample>& corpus) {
  for (const auto& ex : corpus) {
    Json j;
    j["id"] = ex.id;
    j["document"] = ex.document;
    if (ex.summary) j["summary"] = *ex.summary;
    out << j.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
  }
}

std::vector<InstructionExample> read_prepared(std::istream& in) {
  std::vector<InstructionExample> out;
  for_each_record(in, [&](const Json& j) {
    InstructionExample ex;
    ex.id = required_string(j, "id");
    ex.instruction = required_string(j, "instruction");
    ex.input = required_string(j, "input");
    ex.reference_summary = required_string(j, "summary");
    ex.reference_fre = required_number(j, "reference_fre");
    ex.target_readability = get_target(j);
    out.push_back(std::move(ex));
  });
  return out;
}

void write_prepared(std::ostream& out,
                    const std::vector<InstructionExample>& examples) {
  for (const auto& ex : examples) {
    Json j;
    j["id"] = ex.id;
    j["document"] = ex.input.substr(ex.instruction.size());
    j["summary"] = ex.reference_summary;
    j["instruction"] = ex.instruction;
    j["input"] = ex.input;
    put_target(j, ex.target_readability);
    j["reference_fre"] = ex.reference_fre;
    out << j.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
  }
}

std::vector<RunRecord> read_generations(std::istream& in) {
  std::vector<RunRecord> out;
  for_each_record(in, [&](const Json& j) {
    RunRecord r;
    r.example_id = required_string(j, "id");
    r.target = get_target(j);
    r.generated.target = r.target;
    r.generated.text = required_string(j, "text");
    if (j.contains("logprob")) r.generated.logprob = required_number(j, "logprob");
    if (j.contains("score")) r.generated.score = required_number(j, "score");
    const TextStats stats = compute_stats(r.generated.text);
    if (stats.total_words == 0) throw FormatError("generated text has no words");
    r.generated.observed_fre = fre(stats).value;
    r.source = optional_string(j, "source").value_or("");
    r.reference_summary = optional_string(j, "reference_summary");
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<RunRecord> read_generations(const std::filesystem::path& path) {
  auto in = open(path);
  return read_generations(in);
}

void write_generations(std::ostream& out,
                       const std::vector<RunRecord>& records) {
  for (const auto& r : records) {
    Json j;
    j["id"] = r.example_id;
    put_target(j, r.target);
    j["target_fre"] = r.target.resolve();
    j["text"] = r.generated.text;
    j["length"] = r.generated.tokens.size();
    j["logprob"] = r.generated.logprob;
    j["score"] = r.generated.score;
    j["observed_fre"] = r.generated.observed_fre;
    j["source"] = r.source;
    if (r.reference_summary) j["reference_summary"] = *r.reference_summary;
    out << j.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
  }
}

}  // namespace readctl
