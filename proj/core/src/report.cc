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
#include <nlohmann/json.hpp>
#include <sstream>

#include "readctl/eval.h"

namespace readctl {
namespace {

using Json = nlohmann::ordered_json;

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string fixed(const std::optional<double>& v, int digits = 4) {
  return v ? fixed(*v, digits) : std::string();
}

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json histogram_json(const std::map<std::size_t, std::size_t>& h) {
  Json out = Json::array();
  for (const auto& [len, count] : h) out.push_back(Json::array({len, count}));
  return out;
}

Json length_json(const LengthStats& s) {
  Json j;
  j["texts"] = s.texts;
  j["mean_sentence_words"] = s.mean_sentence_words;
  j["mean_summary_words"] = s.mean_summary_words;
  j["sentence_words"] = histogram_json(s.sentence_words);
  j["summary_words"] = histogram_json(s.summary_words);
  return j;
}

Json metadata_json(
    const std::vector<std::pair<std::string, std::string>>& metadata) {
  Json j = Json::object();
  for (const auto& [k, v] : metadata) j[k] = v;
  return j;
}

Json report_json(const EvalReport& r) {
  Json j;
  j["records"] = r.num_records;
  j["fre_delta"] = r.fre_delta;
  j["fre_rho"] = optional_json(r.fre_rho);
  j["gfi_rho"] = optional_json(r.gfi_rho);
  j["cli_rho"] = optional_json(r.cli_rho);
  j["gfi_variant"] = r.gfi_variant == GfiVariant::kPaper ? "paper" : "standard";
  Json levels = Json::array();
  for (const auto& row : r.levels) {
    Json l;
    l["target"] = row.target;
    l["count"] = row.count;
    l["mean_fre"] = row.mean_fre;
    l["mean_gfi"] = row.mean_gfi;
    l["mean_cli"] = row.mean_cli;
    l["fre_delta"] = row.fre_delta;
    l["rouge_l"] = optional_json(row.rouge_l);
    l["abstractiveness"] = row.abstractiveness;
    l["length"] = length_json(row.length);
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  j["length"] = length_json(r.length);
  j["warnings"] = r.warnings;
  return j;
}

std::string pad(const std::string& s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << pad(row[c].empty() ? "-" : row[c], widths[c], c == 0);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
  Json j;
  j["metadata"] = metadata_json(report.metadata);
  j.update(report_json(report));
  return j.dump(2) + "\n";
}

std::string report_to_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "target,count,mean_fre,mean_gfi,mean_cli,fre_delta,rouge_l,"
         "abstractiveness,mean_sentence_words,mean_summary_words\n";
  for (const auto& row : report.levels) {
    out << fixed(row.target, 2) << ',' << row.count << ','
        << fixed(row.mean_fre) << ',' << fixed(row.mean_gfi) << ','
        << fixed(row.mean_cli) << ',' << fixed(row.fre_delta) << ','
        << fixed(row.rouge_l) << ',' << fixed(row.abstractiveness) << ','
        << fixed(row.length.mean_sentence_words) << ','
        << fixed(row.length.mean_summary_words) << '\n';
  }
  out << "all," << report.num_records << ",,,," << fixed(report.fre_delta)
      << ",,,,\n";
  return out.str();
}

std::string report_to_table(const EvalReport& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.metadata) out << k << ": " << v << '\n';
  if (!report.metadata.empty()) out << '\n';
  std::vector<std::vector<std::string>> rows = {
      {"target", "n", "FRE", "GFI", "CLI", "delta", "ROUGE-L", "abstr.",
       "words/sent", "words"}};
  for (const auto& row : report.levels) {
    rows.push_back({fixed(row.target, 1), std::to_string(row.count),
                    fixed(row.mean_fre, 2), fixed(row.mean_gfi, 2),
                    fixed(row.mean_cli, 2), fixed(row.fre_delta, 2),
                    fixed(row.rouge_l, 3), fixed(row.abstractiveness, 3),
                    fixed(row.length.mean_sentence_words, 1),
                    fixed(row.length.mean_summary_words, 1)});
  }
  out << table(rows) << '\n';
  out << "records " << report.num_records << "  delta "
      << fixed(report.fre_delta, 2) << "  FRE rho "
      << (report.fre_rho ? fixed(*report.fre_rho, 3) : "-") << "  GFI rho "
      << (report.gfi_rho ? fixed(*report.gfi_rho, 3) : "-") << "  CLI rho "
      << (report.cli_rho ? fixed(*report.cli_rho, 3) : "-") << '\n';
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string records_to_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "example_id,target,observed_fre,gfi,cli,length\n";
  for (const auto& r : report.records) {
    std::string id = r.example_id;
    if (id.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : id) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      id = quoted + "\"";
    }
    out << id << ',' << fixed(r.target, 2) << ',' << fixed(r.observed_fre)
        << ',' << fixed(r.gfi) << ',' << fixed(r.cli) << ',' << r.length
        << '\n';
  }
  return out.str();
}

std::string sweep_to_json(
    const std::vector<SweepRow>& rows,
    const std::vector<std::pair<std::string, std::string>>& metadata) {
  Json j;
  j["metadata"] = metadata_json(metadata);
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["parameter"] = row.parameter;
    r["value"] = row.value;
    r.update(report_json(row.report));
    arr.push_back(std::move(r));
  }
  j["sweep"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "parameter,value,records,fre_delta,fre_rho,gfi_rho,cli_rho\n";
  for (const auto& row : rows) {
    out << row.parameter << ',' << fixed(row.value, 4) << ','
        << row.report.num_records << ',' << fixed(row.report.fre_delta) << ','
        << fixed(row.report.fre_rho) << ',' << fixed(row.report.gfi_rho)
        << ',' << fixed(row.report.cli_rho) << '\n';
  }
  return out.str();
}

std::string sweep_to_table(const std::vector<SweepRow>& rows) {
  std::vector<std::vector<std::string>> cells = {
      {"setting", "n", "delta", "FRE rho", "GFI rho", "CLI rho"}};
  for (const auto& row : rows) {
    char label[96];
    std::snprintf(label, sizeof label, "%s=%g", row.parameter.c_str(),
                  row.value);
    cells.push_back({label, std::to_string(row.report.num_records),
                     fixed(row.report.fre_delta, 2),
                     fixed(row.report.fre_rho, 3), fixed(row.report.gfi_rho, 3),
                     fixed(row.report.cli_rho, 3)});
  }
  return table(cells);
}

}  // namespace readctl
