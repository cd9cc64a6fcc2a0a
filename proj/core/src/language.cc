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

#include "ethio/language.h"

#include "ethio/error.h"

namespace ethio {

std::string_view language_code(Language lang) {
  switch (lang) {
    case Language::kAmh: return "AMH";
    case Language::kTir: return "TIR";
    case Language::kOrm: return "ORM";
    case Language::kSid: return "SID";
    case Language::kWal: return "WAL";
  }
  return "?";
}

std::optional<Language> parse_language(std::string_view code) {
  for (Language lang : kAllLanguages) {
    if (language_code(lang) == code) return lang;
  }
  return std::nullopt;
}

Language require_language(std::string_view code) {
  if (auto lang = parse_language(code)) return *lang;
  throw ValidationError("unknown language code '" + std::string(code) +
                        "' (expected AMH, TIR, ORM, SID or WAL)");
}

std::string lid_token(Language lang) {
  return "[" + std::string(language_code(lang)) + "]";
}

Script script_of(Language lang) {
  return (lang == Language::kAmh || lang == Language::kTir) ? Script::kGeez
                                                            : Script::kLatin;
}

std::string_view split_name(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kValidation: return "validation";
    case Split::kTest: return "test";
  }
  return "?";
}

std::optional<Split> parse_split(std::string_view name) {
  for (Split split : kAllSplits) {
    if (split_name(split) == name) return split;
  }
  return std::nullopt;
}

std::string_view gender_name(Gender gender) {
  switch (gender) {
    case Gender::kMale: return "M";
    case Gender::kFemale: return "F";
    case Gender::kUnknown: return "unknown";
  }
  return "?";
}

std::optional<Gender> parse_gender(std::string_view name) {
  for (Gender gender : kAllGenders) {
    if (gender_name(gender) == name) return gender;
  }
  return std::nullopt;
}

}  // namespace ethio
