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

#include "ethio/vocab.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>
#include <utility>

#include "ethio/error.h"
#include "ethio/unicode.h"

namespace ethio {
namespace {

// Letters (general category Lo) of the Ethiopic block; the gaps are the
// unassigned positions of the labialized series.
constexpr std::pair<char32_t, char32_t> kGeezLetterRanges[] = {
    {0x1200, 0x1248}, {0x124A, 0x124D}, {0x1250, 0x1256}, {0x1258, 0x1258},
    {0x125A, 0x125D}, {0x1260, 0x1288}, {0x128A, 0x128D}, {0x1290, 0x12B0},
    {0x12B2, 0x12B5}, {0x12B8, 0x12BE}, {0x12C0, 0x12C0}, {0x12C2, 0x12C5},
    {0x12C8, 0x12D6}, {0x12D8, 0x1310}, {0x1312, 0x1315}, {0x1318, 0x135A},
};

std::string render_symbol(char32_t cp) { return unicode::encode_utf8(cp); }

std::string describe(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return "'" + unicode::encode_utf8(cp) + "' (" + buf + ")";
}

bool is_reserved(std::string_view symbol) {
  if (symbol == kBlankToken || symbol == kUnkToken) return true;
  for (Language lang : kAllLanguages) {
    if (symbol == lid_token(lang)) return true;
  }
  return false;
}

}  // namespace

namespace blocks {

std::vector<char32_t> geez_core() {
  std::vector<char32_t> out;
  for (auto [lo, hi] : kGeezLetterRanges) {
    for (char32_t cp = lo; cp <= hi; ++cp) out.push_back(cp);
  }
  return out;
}

std::vector<char32_t> ethiopic_punct_numerals() {
  // U+1360..U+1368 punctuation, U+1369..U+137C digits and numbers.
  std::vector<char32_t> out;
  for (char32_t cp = 0x1360; cp <= 0x137C; ++cp) out.push_back(cp);
  return out;
}

std::vector<char32_t> latin_letters() {
  std::vector<char32_t> out;
  for (char32_t cp = U'a'; cp <= U'z'; ++cp) out.push_back(cp);
  return out;
}

std::vector<char32_t> latin_punct_numerals() {
  std::vector<char32_t> out = {U' ', U'!', U'"', U'%', U'&', U'\'', U'(',
                               U')', U',', U'-', U'.', U'/'};
  for (char32_t cp = U'0'; cp <= U'9'; ++cp) out.push_back(cp);
  for (char32_t cp : {U':', U';', U'?'}) out.push_back(cp);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace blocks

GraphemeVocab GraphemeVocab::from_symbols(std::vector<std::string> symbols) {
  if (symbols.empty() || symbols.front() != kBlankToken) {
    throw ValidationError("vocabulary must start with " +
                          std::string(kBlankToken) + " at id 0");
  }
  GraphemeVocab vocab;
  vocab.lid_ids_.fill(-1);
  vocab.id_of_.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::string& sym = symbols[i];
    if (sym.empty()) {
      throw ValidationError("empty symbol at id " + std::to_string(i));
    }
    if (sym.find('\n') != std::string::npos) {
      throw ValidationError("symbol at id " + std::to_string(i) +
                            " contains a newline");
    }
    const int id = static_cast<int>(i);
    if (!vocab.id_of_.emplace(sym, id).second) {
      throw ValidationError("duplicate symbol '" + sym + "' at id " +
                            std::to_string(i));
    }
    if (sym == kUnkToken) vocab.unk_id_ = id;
    for (Language lang : kAllLanguages) {
      if (sym == lid_token(lang)) vocab.lid_ids_[index_of(lang)] = id;
    }
  }
  for (Language lang : kAllLanguages) {
    if (vocab.lid_ids_[index_of(lang)] < 0) {
      throw ValidationError("vocabulary lacks language token " +
                            lid_token(lang));
    }
  }
  vocab.symbols_ = std::move(symbols);
  return vocab;
}

std::optional<Language> GraphemeVocab::language_of(int id) const {
  for (Language lang : kAllLanguages) {
    if (lid_ids_[index_of(lang)] == id) return lang;
  }
  return std::nullopt;
}

std::optional<int> GraphemeVocab::find(std::string_view symbol) const {
  auto it = id_of_.find(std::string(symbol));
  if (it == id_of_.end()) return std::nullopt;
  return it->second;
}

const std::string& GraphemeVocab::symbol(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= symbols_.size()) {
    throw ValidationError("id " + std::to_string(id) +
                          " out of range for vocabulary of size " +
                          std::to_string(symbols_.size()));
  }
  return symbols_[static_cast<std::size_t>(id)];
}

std::vector<int> TargetSequence::labels() const {
  std::vector<int> out;
  out.reserve(grapheme_ids.size() + 1);
  out.push_back(lang_id);
  out.insert(out.end(), grapheme_ids.begin(), grapheme_ids.end());
  return out;
}

GraphemeVocab build_vocab(const VocabConfig& config,
                          std::span<const CorpusLine> corpus) {
  std::vector<char32_t> block_graphemes;
  auto append = [&](std::vector<char32_t> block) {
    block_graphemes.insert(block_graphemes.end(), block.begin(), block.end());
  };
  if (config.include_geez_core) append(blocks::geez_core());
  if (config.include_ethiopic_punct_numerals) {
    append(blocks::ethiopic_punct_numerals());
  }
  if (config.include_latin_letters) append(blocks::latin_letters());
  if (config.include_latin_punct_numerals) {
    append(blocks::latin_punct_numerals());
  }

  const bool has_corpus = std::any_of(
      corpus.begin(), corpus.end(),
      [](const CorpusLine& line) { return !line.text.empty(); });
  if (block_graphemes.empty() && !has_corpus &&
      config.extra_symbols.empty()) {
    throw ValidationError(
        "empty vocabulary configuration: no script block enabled and no "
        "corpus given");
  }

  std::vector<std::string> symbols;
  symbols.emplace_back(kBlankToken);
  for (Language lang : kAllLanguages) symbols.push_back(lid_token(lang));

  std::unordered_set<char32_t> seen;
  for (char32_t cp : block_graphemes) {
    if (seen.insert(cp).second) symbols.push_back(render_symbol(cp));
  }

  std::set<char32_t> observed;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (char32_t cp : unicode::decode_utf8(unicode::nfc(corpus[i].text))) {
      if (unicode::is_whitespace(cp)) cp = U' ';
      if (seen.count(cp) != 0) continue;
      if (config.strict_unknowns) {
        throw ValidationError("corpus line " + std::to_string(i + 1) + " (" +
                              std::string(language_code(corpus[i].language)) +
                              "): grapheme " + describe(cp) +
                              " is outside the enabled blocks");
      }
      observed.insert(cp);
    }
  }
  for (char32_t cp : observed) {
    seen.insert(cp);
    symbols.push_back(render_symbol(cp));
  }

  std::unordered_set<std::string> extras;
  for (const std::string& extra : config.extra_symbols) {
    if (extra.empty()) throw ValidationError("empty extra symbol");
    if (!extras.insert(extra).second) {
      throw ValidationError("duplicate extra symbol '" + extra + "'");
    }
    if (is_reserved(extra)) {
      throw ValidationError("extra symbol '" + extra +
                            "' collides with a special token");
    }
    if (std::find(symbols.begin(), symbols.end(), extra) == symbols.end()) {
      symbols.push_back(extra);
    }
  }

  if (config.include_unk) symbols.emplace_back(kUnkToken);
  return GraphemeVocab::from_symbols(std::move(symbols));
}

TargetSequence encode_target(std::string_view text, Language lang,
                             const GraphemeVocab& vocab, bool strict) {
  const std::u32string scalars = unicode::decode_utf8(unicode::nfc(text));
  if (scalars.empty()) throw ValidationError("cannot encode empty text");

  TargetSequence target;
  target.lang_id = vocab.lid_id(lang);
  target.grapheme_ids.reserve(scalars.size());
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    const char32_t cp = scalars[i];
    if (auto id = vocab.find(unicode::encode_utf8(cp));
        id && !vocab.is_lid(*id) && *id != vocab.blank_id()) {
      target.grapheme_ids.push_back(*id);
      continue;
    }
    if (!strict && vocab.unk_id()) {
      target.grapheme_ids.push_back(*vocab.unk_id());
      continue;
    }
    throw ValidationError("unknown grapheme " + describe(cp) +
                          " at position " + std::to_string(i) +
                          (strict ? "" : " and vocabulary has no <unk>"));
  }
  return target;
}

DecodedText decode_ids(std::span<const int> ids, const GraphemeVocab& vocab) {
  DecodedText out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const int id = ids[i];
    if (id < 0 || static_cast<std::size_t>(id) >= vocab.size()) {
      throw ValidationError("id " + std::to_string(id) + " at position " +
                            std::to_string(i) + " out of range");
    }
    if (id == vocab.blank_id()) {
      throw ValidationError("blank id at position " + std::to_string(i));
    }
    if (auto lang = vocab.language_of(id)) {
      if (i != 0) {
        throw ValidationError("language token " + vocab.symbol(id) +
                              " in non-initial position " +
                              std::to_string(i));
      }
      out.lang = *lang;
      continue;
    }
    out.text += vocab.symbol(id);
  }
  return out;
}

void write_vocab(std::ostream& out, const GraphemeVocab& vocab) {
  for (const std::string& sym : vocab.symbols()) {
    out << (sym == " " ? std::string(kSpaceToken) : sym) << '\n';
  }
}

GraphemeVocab read_vocab(std::istream& in) {
  std::vector<std::string> symbols;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == kSpaceToken) line = " ";
    symbols.push_back(std::move(line));
  }
  // Duplicate and empty lines are diagnosed by from_symbols with their id,
  // which is the zero-based line number.
  return GraphemeVocab::from_symbols(std::move(symbols));
}

void save_vocab(const std::string& path, const GraphemeVocab& vocab) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_vocab(out, vocab);
  if (!out) throw IoError("failed writing '" + path + "'");
}

GraphemeVocab load_vocab(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open vocabulary '" + path + "'");
  return read_vocab(in);
}

}  // namespace ethio
