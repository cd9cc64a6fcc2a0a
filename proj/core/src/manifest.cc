/* Copyright 2026 The ethio-eval Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ethio/manifest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "ethio/error.h"
#include "json.hpp"

namespace ethio {
namespace {

using json = nlohmann::json;

class LineError {
 public:
  LineError(std::string_view source, std::size_t line)
      : prefix_(std::string(source) + ":" + std::to_string(line) + ": ") {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError(prefix_ + what);
  }
  [[noreturn]] void field(std::string_view name,
                          const std::string& what) const {
    fail("field '" + std::string(name) + "': " + what);
  }

 private:
  std::string prefix_;
};

std::string required_string(const json& obj, std::string_view name,
                            const LineError& err) {
  auto it = obj.find(name);
  if (it == obj.end()) err.field(name, "missing");
  if (!it->is_string()) err.field(name, "expected a string");
  return it->get<std::string>();
}

template <typename T, typename Parse>
T closed_set(const json& obj, std::string_view name, Parse parse,
             const LineError& err) {
  const std::string value = required_string(obj, name, err);
  auto parsed = parse(value);
  if (!parsed) err.field(name, "unknown value '" + value + "'");
  return *parsed;
}

Utterance parse_utterance(const json& obj, const LineError& err) {
  if (!obj.is_object()) err.fail("expected a JSON object");
  Utterance utt;
  utt.id = required_string(obj, "id", err);
  if (utt.id.empty()) err.field("id", "empty");
  utt.language = closed_set<Language>(obj, "language", parse_language, err);
  utt.split = closed_set<Split>(obj, "split", parse_split, err);
  utt.gender = closed_set<Gender>(obj, "gender", parse_gender, err);
  auto dur = obj.find("duration_s");
  if (dur == obj.end()) err.field("duration_s", "missing");
  if (!dur->is_number()) err.field("duration_s", "expected a number");
  utt.duration_s = dur->get<double>();
  if (!std::isfinite(utt.duration_s) || utt.duration_s < 0.0) {
    err.field("duration_s", "must be a finite number >= 0");
  }
  utt.text = required_string(obj, "text", err);
  if (auto ap = obj.find("audio_path"); ap != obj.end() && !ap->is_null()) {
    if (!ap->is_string()) err.field("audio_path", "expected a string");
    utt.audio_path = ap->get<std::string>();
  }
  return utt;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// RFC 4180 record reader; fields may span lines inside quotes.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& line_no) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  ++line_no;
  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i == line.size()) {
      if (quoted) {
        if (!std::getline(in, line)) {
          throw ValidationError("unterminated quoted CSV field at line " +
                                std::to_string(line_no));
        }
        ++line_no;
        field.push_back('\n');
        i = 0;
        continue;
      }
      break;
    }
    const char c = line[i++];
    if (quoted) {
      if (c == '"') {
        if (i < line.size() && line[i] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return true;
}

std::ifstream open_input(const std::string& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + std::string(what) + " '" + path + "'");
  }
  return in;
}

}  // namespace

std::vector<Utterance> parse_manifest(std::istream& in,
                                      std::string_view source) {
  std::vector<Utterance> out;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const LineError err(source, line_no);
    json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) err.fail("malformed JSON");
    Utterance utt = parse_utterance(obj, err);
    auto [it, inserted] = first_line.emplace(utt.id, line_no);
    if (!inserted) {
      err.field("id", "duplicate id '" + utt.id + "' (first seen on line " +
                          std::to_string(it->second) + ")");
    }
    out.push_back(std::move(utt));
  }
  return out;
}

std::vector<Utterance> load_manifest(const std::string& path) {
  std::ifstream in = open_input(path, "manifest");
  return parse_manifest(in, path);
}

std::vector<Utterance> parse_manifest_csv(std::istream& in,
                                          std::string_view source) {
  std::vector<std::string> header;
  std::size_t line_no = 0;
  if (!read_csv_record(in, header, line_no)) {
    throw ValidationError(std::string(source) + ": empty CSV");
  }
  if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    header[0].erase(0, 3);
  }
  for (const char* required :
       {"id", "language", "split", "gender", "duration_s", "text"}) {
    if (std::find(header.begin(), header.end(), required) == header.end()) {
      throw ValidationError(std::string(source) + ": CSV header lacks '" +
                            required + "'");
    }
  }
  std::vector<Utterance> out;
  std::unordered_set<std::string> seen;
  std::vector<std::string> fields;
  while (true) {
    const std::size_t record_line = line_no + 1;
    if (!read_csv_record(in, fields, line_no)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;
    const LineError err(source, record_line);
    if (fields.size() != header.size()) {
      err.fail("expected " + std::to_string(header.size()) + " fields, got " +
               std::to_string(fields.size()));
    }
    json obj = json::object();
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (header[k] == "duration_s") {
        char* end = nullptr;
        const double d = std::strtod(fields[k].c_str(), &end);
        if (fields[k].empty() || *end != '\0') {
          err.field("duration_s", "not a number: '" + fields[k] + "'");
        }
        obj[header[k]] = d;
      } else if (header[k] == "audio_path" && fields[k].empty()) {
        continue;
      } else {
        obj[header[k]] = fields[k];
      }
    }
    Utterance utt = parse_utterance(obj, err);
    if (!seen.insert(utt.id).second) {
      err.field("id", "duplicate id '" + utt.id + "'");
    }
    out.push_back(std::move(utt));
  }
  return out;
}

void write_manifest(std::ostream& out, std::span<const Utterance> utterances) {
  for (const Utterance& utt : utterances) {
    nlohmann::ordered_json obj;
    obj["id"] = utt.id;
    obj["language"] = language_code(utt.language);
    obj["split"] = split_name(utt.split);
    obj["gender"] = gender_name(utt.gender);
    obj["duration_s"] = utt.duration_s;
    obj["text"] = utt.text;
    if (utt.audio_path) obj["audio_path"] = *utt.audio_path;
    out << obj.dump() << '\n';
  }
}

std::vector<HypothesisRecord> parse_hypotheses(std::istream& in,
                                               std::string_view source) {
  std::vector<HypothesisRecord> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const LineError err(source, line_no);
    json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) err.fail("malformed JSON");
    if (!obj.is_object()) err.fail("expected a JSON object");
    HypothesisRecord hyp;
    hyp.id = required_string(obj, "id", err);
    hyp.text = required_string(obj, "text", err);
    if (auto p = obj.find("predicted_lang"); p != obj.end() && !p->is_null()) {
      if (!p->is_string()) err.field("predicted_lang", "expected a string");
      const std::string code = p->get<std::string>();
      auto lang = parse_language(code);
      if (!lang) err.field("predicted_lang", "unknown value '" + code + "'");
      hyp.predicted_lang = *lang;
    }
    if (!seen.insert(hyp.id).second) {
      err.field("id", "duplicate hypothesis id '" + hyp.id + "'");
    }
    out.push_back(std::move(hyp));
  }
  return out;
}

std::vector<HypothesisRecord> load_hypotheses(const std::string& path) {
  std::ifstream in = open_input(path, "hypothesis file");
  return parse_hypotheses(in, path);
}

void write_hypotheses(std::ostream& out,
                      std::span<const HypothesisRecord> hyps) {
  for (const HypothesisRecord& hyp : hyps) {
    nlohmann::ordered_json obj;
    obj["id"] = hyp.id;
    obj["text"] = hyp.text;
    if (hyp.predicted_lang) {
      obj["predicted_lang"] = language_code(*hyp.predicted_lang);
    } else {
      obj["predicted_lang"] = nullptr;
    }
    out << obj.dump() << '\n';
  }
}

namespace {
std::size_t cell(Language lang, Split split, Gender gender) {
  return (index_of(lang) * 3 + static_cast<std::size_t>(split)) * 3 +
         static_cast<std::size_t>(gender);
}
}  // namespace

void DurationTable::add(const Utterance& utt) {
  seconds_[cell(utt.language, utt.split, utt.gender)] += utt.duration_s;
}

double DurationTable::seconds(Language lang, Split split,
                              Gender gender) const {
  return seconds_[cell(lang, split, gender)];
}

double DurationTable::all_hours(Language lang, Split split) const {
  double total = 0.0;
  for (Gender g : kAllGenders) total += seconds(lang, split, g);
  return total / 3600.0;
}

DurationTable duration_report(std::span<const Utterance> utterances) {
  DurationTable table;
  for (const Utterance& utt : utterances) table.add(utt);
  return table;
}

std::string resolve_data_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (path.empty() || fs::path(path).is_absolute() || fs::exists(path)) {
    return path;
  }
  if (const char* root = std::getenv("ETHIO_EVAL_DATA");
      root != nullptr && *root != '\0') {
    const fs::path candidate = fs::path(root) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;
}

}  // namespace ethio
