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

#ifndef ETHIO_VOCAB_H_
#define ETHIO_VOCAB_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ethio/language.h"

namespace ethio {

inline constexpr int kBlankId = 0;
inline constexpr std::string_view kBlankToken = "<blank>";
inline constexpr std::string_view kUnkToken = "<unk>";
// File spelling of the U+0020 grapheme.
inline constexpr std::string_view kSpaceToken = "<space>";

// Which symbol blocks a vocabulary is assembled from. The defaults give the
// full dual-script inventory without an unknown token.
struct VocabConfig {
  bool include_geez_core = true;                // 326 Ethiopic syllables
  bool include_ethiopic_punct_numerals = true;  // 9 marks + 20 numerals
  bool include_latin_letters = true;            // a-z
  bool include_latin_punct_numerals = true;     // 25, space included
  // Corpus graphemes outside the enabled blocks are rejected rather than
  // appended.
  bool strict_unknowns = false;
  bool include_unk = false;
  std::vector<std::string> extra_symbols;
};

struct CorpusLine {
  Language language;
  std::string text;
};

// Immutable bidirectional symbol <-> id table. Id 0 is the CTC blank and
// every language token is an ordinary entry.
class GraphemeVocab {
 public:
  // Position in |symbols| is the id. symbols[0] must be "<blank>" and all
  // five language tokens must be present. Throws ValidationError on empty or
  // duplicate entries.
  static GraphemeVocab from_symbols(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  int blank_id() const { return kBlankId; }
  std::optional<int> unk_id() const { return unk_id_; }
  int lid_id(Language lang) const { return lid_ids_[index_of(lang)]; }
  std::optional<Language> language_of(int id) const;
  bool is_lid(int id) const { return language_of(id).has_value(); }

  std::optional<int> find(std::string_view symbol) const;
  const std::string& symbol(int id) const;
  std::span<const std::string> symbols() const { return symbols_; }

 private:
  GraphemeVocab() = default;

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> id_of_;
  std::array<int, kAllLanguages.size()> lid_ids_{};
  std::optional<int> unk_id_;
};

// CTC target: the language token followed by one id per grapheme.
struct TargetSequence {
  int lang_id = 0;
  std::vector<int> grapheme_ids;

  // The flat label sequence [lang_id, g1, ..., gN] consumed by the CTC
  // kernels.
  std::vector<int> labels() const;
};

struct DecodedText {
  std::optional<Language> lang;
  std::string text;
};

namespace blocks {
std::vector<char32_t> geez_core();
std::vector<char32_t> ethiopic_punct_numerals();
std::vector<char32_t> latin_letters();
std::vector<char32_t> latin_punct_numerals();
}  // namespace blocks

// Layout: blank, [AMH] [TIR] [ORM] [SID] [WAL], the enabled blocks in
// code-point order, graphemes observed only in the corpus (code-point
// order), extra_symbols in the given order, then <unk> if requested.
GraphemeVocab build_vocab(const VocabConfig& config,
                          std::span<const CorpusLine> corpus = {});

// Text is NFC-normalized and segmented one Unicode scalar per grapheme.
TargetSequence encode_target(std::string_view text, Language lang,
                             const GraphemeVocab& vocab, bool strict);

// Inverse of encode_target. A leading language token is stripped and
// reported; blanks and non-initial language tokens are rejected.
DecodedText decode_ids(std::span<const int> ids, const GraphemeVocab& vocab);

// One symbol per line, line number = id.
void write_vocab(std::ostream& out, const GraphemeVocab& vocab);
GraphemeVocab read_vocab(std::istream& in);
void save_vocab(const std::string& path, const GraphemeVocab& vocab);
GraphemeVocab load_vocab(const std::string& path);

}  // namespace ethio

#endif  // ETHIO_VOCAB_H_
