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

#include "ethio/normalize.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>

#include "ethio/error.h"
#include "ethio/unicode.h"

namespace ethio {
namespace {

std::string hex(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

bool is_vowel(char32_t cp) {
  switch (cp) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'A': case U'E': case U'I': case U'O': case U'U':
      return true;
    default:
      return false;
  }
}

bool is_apostrophe_variant(char32_t cp) {
  // RIGHT/LEFT SINGLE QUOTATION MARK, MODIFIER LETTER APOSTROPHE,
  // MODIFIER LETTER TURNED COMMA.
  return cp == 0x2019 || cp == 0x2018 || cp == 0x02BC || cp == 0x02BB;
}

// Splits Latin text into orthographic units. |digraphs| is assumed sorted
// longest-first.
std::vector<std::u32string> segment_units(
    std::u32string_view text, const std::vector<std::u32string>& digraphs) {
  std::vector<std::u32string> units;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t len = 1;
    for (const auto& dg : digraphs) {
      if (text.substr(i, dg.size()) == dg) {
        len = dg.size();
        break;
      }
    }
    units.emplace_back(text.substr(i, len));
    i += len;
  }
  return units;
}

std::vector<std::u32string> to_u32(std::span<const std::string> digraphs) {
  std::vector<std::u32string> out;
  out.reserve(digraphs.size());
  for (const auto& dg : digraphs) out.push_back(unicode::decode_utf8(dg));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  return out;
}

template <typename IsTarget>
std::string dedup_runs(std::string_view text,
                       std::span<const std::string> digraphs,
                       IsTarget is_target) {
  const auto units =
      segment_units(unicode::decode_utf8(text), to_u32(digraphs));
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < units.size(); ++k) {
    if (k > 0 && units[k] == units[k - 1] && is_target(units[k])) continue;
    out += units[k];
  }
  return unicode::encode_utf8(out);
}

}  // namespace

HomophoneMap::HomophoneMap(std::map<char32_t, char32_t> entries)
    : entries_(std::move(entries)) {
  for (const auto& [source, target] : entries_) {
    auto it = entries_.find(target);
    if (it != entries_.end() && it->second != target) {
      throw ValidationError("homophone map is not idempotent: " + hex(source) +
                            " -> " + hex(target) + " -> " + hex(it->second));
    }
  }
}

HomophoneMap HomophoneMap::defaults() {
  // Series bases; each family spans seven consecutive vowel orders.
  constexpr std::pair<char32_t, char32_t> kFamilies[] = {
      {0x1210, 0x1200},  // HHA -> HA
      {0x1280, 0x1200},  // XA -> HA
      {0x1220, 0x1230},  // SZA -> SA
      {0x12D0, 0x12A0},  // PHARYNGEAL A -> GLOTTAL A
      {0x1340, 0x1338},  // TZA -> TSA
  };
  std::map<char32_t, char32_t> entries;
  for (auto [source, target] : kFamilies) {
    for (char32_t order = 0; order < 7; ++order) {
      entries.emplace(source + order, target + order);
    }
  }
  return HomophoneMap(std::move(entries));
}

HomophoneMap read_homophone_map(std::istream& in) {
  std::map<char32_t, char32_t> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    const auto where = "homophone map line " + std::to_string(line_no);
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ValidationError(where + ": expected 'source<TAB>target'");
    }
    const auto source = unicode::decode_utf8(line.substr(0, tab));
    const auto target = unicode::decode_utf8(line.substr(tab + 1));
    if (source.size() != 1 || target.size() != 1) {
      throw ValidationError(where + ": source and target must be single "
                                    "graphemes");
    }
    if (!entries.emplace(source[0], target[0]).second) {
      throw ValidationError(where + ": duplicate source " + hex(source[0]));
    }
  }
  return HomophoneMap(std::move(entries));
}

HomophoneMap load_homophone_map(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open homophone map '" + path + "'");
  return read_homophone_map(in);
}

std::vector<std::string> default_digraphs() {
  return {"ch", "dh", "ny", "ph", "sh", "ts"};
}

std::vector<std::string> prepare_digraphs(std::vector<std::string> digraphs) {
  std::set<std::string> seen;
  for (const auto& dg : digraphs) {
    if (dg.size() < 2 ||
        !std::all_of(dg.begin(), dg.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; })) {
      throw ValidationError("digraph '" + dg +
                            "' must be two or more lowercase Latin letters");
    }
    if (!seen.insert(dg).second) {
      throw ValidationError("duplicate digraph '" + dg + "'");
    }
  }
  std::sort(digraphs.begin(), digraphs.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  return digraphs;
}

std::vector<std::string> read_digraphs(std::istream& in) {
  std::vector<std::string> digraphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    digraphs.push_back(line);
  }
  return prepare_digraphs(std::move(digraphs));
}

std::vector<std::string> load_digraphs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open digraph list '" + path + "'");
  return read_digraphs(in);
}

std::string_view norm_preset_name(NormPreset preset) {
  switch (preset) {
    case NormPreset::kNone: return "none";
    case NormPreset::kEval: return "eval";
    case NormPreset::kVowel: return "vowel";
    case NormPreset::kGeminate: return "geminate";
    case NormPreset::kBoth: return "both";
    case NormPreset::kFull: return "full";
  }
  return "?";
}

NormPreset parse_norm_preset(std::string_view name) {
  for (NormPreset p : {NormPreset::kNone, NormPreset::kEval,
                       NormPreset::kVowel, NormPreset::kGeminate,
                       NormPreset::kBoth, NormPreset::kFull}) {
    if (norm_preset_name(p) == name) return p;
  }
  throw ValidationError("unknown normalization preset '" + std::string(name) +
                        "' (expected none, eval, vowel, geminate, both or "
                        "full)");
}

NormalizationConfig NormalizationConfig::preset(NormPreset preset) {
  NormalizationConfig config;
  if (preset == NormPreset::kNone) {
    config.lowercase_latin = false;
    return config;
  }
  config.remove_punctuation = true;
  config.fold_homophones = true;
  config.collapse_vowel_length =
      preset == NormPreset::kVowel || preset == NormPreset::kBoth ||
      preset == NormPreset::kFull;
  config.collapse_gemination =
      preset == NormPreset::kGeminate || preset == NormPreset::kBoth ||
      preset == NormPreset::kFull;
  config.remove_hyphen = preset == NormPreset::kFull;
  return config;
}

std::string remove_punct(std::string_view text,
                         const NormalizationConfig& config) {
  std::u32string kept;
  kept.reserve(text.size());
  for (char32_t cp : unicode::decode_utf8(text)) {
    if (is_apostrophe_variant(cp)) cp = U'\'';
    if (cp == 0x1361) cp = U' ';  // Ethiopic wordspace
    if (unicode::is_punctuation(cp)) {
      const bool keep = (cp == U'\'' && config.preserve_apostrophe) ||
                        (cp == U'-' && !config.remove_hyphen);
      if (!keep) continue;
    }
    kept.push_back(cp);
  }
  std::u32string out;
  for (const auto& token : unicode::split_whitespace(kept)) {
    if (!out.empty()) out.push_back(U' ');
    out += token;
  }
  return unicode::encode_utf8(out);
}

std::string fold_homophones(std::string_view text, const HomophoneMap& map) {
  std::u32string scalars = unicode::decode_utf8(text);
  for (char32_t& cp : scalars) cp = map.apply(cp);
  return unicode::encode_utf8(scalars);
}

std::string collapse_vowels(std::string_view text,
                            std::span<const std::string> digraphs) {
  return dedup_runs(text, digraphs, [](const std::u32string& unit) {
    return unit.size() == 1 && is_vowel(unit[0]);
  });
}

std::string collapse_geminates(std::string_view text,
                               std::span<const std::string> digraphs) {
  return dedup_runs(text, digraphs, [](const std::u32string& unit) {
    if (unit.size() > 1) return true;  // digraph consonant
    return unicode::is_latin(unit[0]) && !is_vowel(unit[0]);
  });
}

std::string apply_pipeline(std::string_view text, Language lang,
                           const NormalizationConfig& config) {
  std::string out = unicode::nfc(text);
  if (config.lowercase_latin) {
    std::u32string scalars = unicode::decode_utf8(out);
    for (char32_t& cp : scalars) {
      if (unicode::is_latin(cp)) cp = unicode::to_lower(cp);
    }
    out = unicode::encode_utf8(scalars);
  }
  if (config.remove_punctuation) {
    // Dropping a mark between a base letter and a combining mark can leave
    // a composable pair behind.
    out = unicode::nfc(remove_punct(out, config));
  }
  const Script script = script_of(lang);
  if (config.fold_homophones && script == Script::kGeez) {
    out = fold_homophones(out, config.homophone_map);
  }
  if (script == Script::kLatin) {
    if (config.collapse_vowel_length) {
      out = collapse_vowels(out, config.digraphs);
    }
    if (config.collapse_gemination) {
      out = collapse_geminates(out, config.digraphs);
    }
  }
  return out;
}

}  // namespace ethio
