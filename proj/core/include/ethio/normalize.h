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

#ifndef ETHIO_NORMALIZE_H_
#define ETHIO_NORMALIZE_H_

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ethio/language.h"

namespace ethio {

// Grapheme-to-grapheme folding table. Construction enforces idempotence:
// no target may itself be remapped to something else.
class HomophoneMap {
 public:
  HomophoneMap() = default;
  explicit HomophoneMap(std::map<char32_t, char32_t> entries);

  // The four Ge'ez homophone families across the seven vowel orders:
  // HHA and XA series -> HA series, SZA -> SA, PHARYNGEAL A -> GLOTTAL A,
  // TZA -> TSA.
  static HomophoneMap defaults();

  char32_t apply(char32_t cp) const {
    auto it = entries_.find(cp);
    return it == entries_.end() ? cp : it->second;
  }
  const std::map<char32_t, char32_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<char32_t, char32_t> entries_;
};

// "source<TAB>target" per line; blank lines and '#' comments skipped.
HomophoneMap read_homophone_map(std::istream& in);
HomophoneMap load_homophone_map(const std::string& path);

// {ch, dh, ny, ph, sh, ts}
std::vector<std::string> default_digraphs();
// Validates (at least two lowercase Latin letters, no duplicates) and sorts
// longest-first, ties in lexicographic order.
std::vector<std::string> prepare_digraphs(std::vector<std::string> digraphs);
// One digraph per line.
std::vector<std::string> read_digraphs(std::istream& in);
std::vector<std::string> load_digraphs(const std::string& path);

// Named configurations selectable from the command line. "eval" is the
// scoring normalization (lowercase, punctuation removal, homophone
// folding); vowel/geminate/both add the length collapses on top of it;
// full additionally drops hyphens.
enum class NormPreset { kNone, kEval, kVowel, kGeminate, kBoth, kFull };

std::string_view norm_preset_name(NormPreset preset);
NormPreset parse_norm_preset(std::string_view name);

struct NormalizationConfig {
  bool remove_punctuation = false;
  bool fold_homophones = false;
  bool collapse_vowel_length = false;
  bool collapse_gemination = false;
  std::vector<std::string> digraphs = prepare_digraphs(default_digraphs());
  HomophoneMap homophone_map = HomophoneMap::defaults();
  // The apostrophe spells the glottal stop in the Latin orthographies.
  bool preserve_apostrophe = true;
  bool lowercase_latin = true;
  bool remove_hyphen = false;

  static NormalizationConfig preset(NormPreset preset);
};

// Drops Unicode punctuation (apostrophe and hyphen per config), maps the
// Ethiopic wordspace to a space, unifies curly/modifier apostrophes to
// U+0027, then collapses whitespace runs and trims.
std::string remove_punct(std::string_view text,
                         const NormalizationConfig& config);

std::string fold_homophones(std::string_view text, const HomophoneMap& map);

// Segments into digraph/letter units (longest digraph first) and reduces
// maximal runs of an identical vowel to a single vowel.
std::string collapse_vowels(std::string_view text,
                            std::span<const std::string> digraphs);

// Same segmentation; reduces maximal runs of an identical consonant unit to
// one. "shsh" is one geminate sh, "ddh" is d + dh.
std::string collapse_geminates(std::string_view text,
                               std::span<const std::string> digraphs);

// NFC -> lowercase (Latin letters) -> remove_punct -> fold_homophones
// (Ge'ez languages) -> collapse_vowels -> collapse_geminates (Latin-script
// languages), each step gated by its flag.
std::string apply_pipeline(std::string_view text, Language lang,
                           const NormalizationConfig& config);

}  // namespace ethio

#endif  // ETHIO_NORMALIZE_H_
