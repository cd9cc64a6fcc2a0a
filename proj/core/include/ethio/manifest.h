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

#ifndef ETHIO_MANIFEST_H_
#define ETHIO_MANIFEST_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ethio/language.h"

namespace ethio {

// One corpus record. Audio paths are carried through but never opened.
struct Utterance {
  std::string id;
  Language language = Language::kAmh;
  Split split = Split::kTest;
  Gender gender = Gender::kUnknown;
  double duration_s = 0.0;
  std::string text;
  std::optional<std::string> audio_path;
};

// A system output for one utterance.
struct HypothesisRecord {
  std::string id;
  std::string text;
  std::optional<Language> predicted_lang;
};

// JSON Lines, one object per line:
//   {"id", "language", "split", "gender", "duration_s", "text",
//    "audio_path"?}
// Blank lines are skipped. Errors name the source, line and field.
std::vector<Utterance> parse_manifest(std::istream& in,
                                      std::string_view source);
std::vector<Utterance> load_manifest(const std::string& path);

// CSV with a header naming at least id,language,split,gender,duration_s,text
// (RFC 4180 quoting).
std::vector<Utterance> parse_manifest_csv(std::istream& in,
                                          std::string_view source);
void write_manifest(std::ostream& out, std::span<const Utterance> utterances);

// JSON Lines: {"id", "text", "predicted_lang"?} with predicted_lang a
// language code or null.
std::vector<HypothesisRecord> parse_hypotheses(std::istream& in,
                                               std::string_view source);
std::vector<HypothesisRecord> load_hypotheses(const std::string& path);
void write_hypotheses(std::ostream& out,
                      std::span<const HypothesisRecord> hyps);

// Summed durations per (language, split, gender).
class DurationTable {
 public:
  void add(const Utterance& utt);
  double seconds(Language lang, Split split, Gender gender) const;
  double hours(Language lang, Split split, Gender gender) const {
    return seconds(lang, split, gender) / 3600.0;
  }
  // M + F + unknown.
  double all_hours(Language lang, Split split) const;

 private:
  std::array<double, 5 * 3 * 3> seconds_{};
};

DurationTable duration_report(std::span<const Utterance> utterances);

// Resolves a relative path against ETHIO_EVAL_DATA when it does not exist
// as given.
std::string resolve_data_path(const std::string& path);

}  // namespace ethio

#endif  // ETHIO_MANIFEST_H_
