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

#ifndef ETHIO_UNICODE_H_
#define ETHIO_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace ethio::unicode {

// Strict UTF-8 decoding: overlong forms, surrogates and truncated sequences
// raise ValidationError.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t cp);

// Canonical composition (NFC).
std::string nfc(std::string_view text);
std::u32string nfc(std::u32string_view text);

bool is_whitespace(char32_t cp);
// Unicode general category P*.
bool is_punctuation(char32_t cp);
// Ethiopic block U+1200..U+137F.
bool is_ethiopic(char32_t cp);
// Unicode Script=Latin (letters only; ASCII digits are Common).
bool is_latin(char32_t cp);
// Simple (1:1) lowercase mapping.
char32_t to_lower(char32_t cp);

// Splits on Unicode whitespace; runs of whitespace never produce empty
// tokens.
std::vector<std::string> split_whitespace(std::string_view text);
std::vector<std::u32string> split_whitespace(std::u32string_view text);

// Number of Unicode scalars.
std::size_t length(std::string_view text);

}  // namespace ethio::unicode

#endif  // ETHIO_UNICODE_H_
