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

#ifndef ETHIO_LANGUAGE_H_
#define ETHIO_LANGUAGE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ethio {

// The five languages of the joint model. The enumerator order is the order
// in which language tokens are assigned vocabulary ids (1..5).
enum class Language { kAmh, kTir, kOrm, kSid, kWal };

inline constexpr std::array<Language, 5> kAllLanguages = {
    Language::kAmh, Language::kTir, Language::kOrm, Language::kSid,
    Language::kWal};

enum class Script { kGeez, kLatin };

enum class Split { kTrain, kValidation, kTest };

inline constexpr std::array<Split, 3> kAllSplits = {
    Split::kTrain, Split::kValidation, Split::kTest};

enum class Gender { kMale, kFemale, kUnknown };

inline constexpr std::array<Gender, 3> kAllGenders = {
    Gender::kMale, Gender::kFemale, Gender::kUnknown};

// "AMH", "TIR", ...
std::string_view language_code(Language lang);
std::optional<Language> parse_language(std::string_view code);
// Throws ValidationError naming the bad code.
Language require_language(std::string_view code);

// "[AMH]" etc., the surface form of the language token.
std::string lid_token(Language lang);

// Amharic and Tigrinya are written in Ge'ez, the others in Latin script.
Script script_of(Language lang);

std::string_view split_name(Split split);
std::optional<Split> parse_split(std::string_view name);

// "M", "F", "unknown"
std::string_view gender_name(Gender gender);
std::optional<Gender> parse_gender(std::string_view name);

inline std::size_t index_of(Language lang) {
  return static_cast<std::size_t>(lang);
}

}  // namespace ethio

#endif  // ETHIO_LANGUAGE_H_
