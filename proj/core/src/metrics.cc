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

#include "ethio/metrics.h"

#include <array>

#include "ethio/error.h"
#include "ethio/unicode.h"

namespace ethio {
namespace {

std::vector<std::string> char_tokens(std::string_view text, bool count_spaces) {
  std::u32string scalars = unicode::decode_utf8(text);
  std::size_t begin = 0;
  std::size_t end = scalars.size();
  while (begin < end && unicode::is_whitespace(scalars[begin])) ++begin;
  while (end > begin && unicode::is_whitespace(scalars[end - 1])) --end;
  std::vector<std::string> tokens;
  tokens.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    if (unicode::is_whitespace(scalars[i])) {
      if (!count_spaces) continue;
      tokens.emplace_back(" ");
      continue;
    }
    tokens.push_back(unicode::encode_utf8(scalars[i]));
  }
  return tokens;
}

ScoredPair make_pair(std::string id, TokenUnit unit,
                     std::vector<std::string> ref,
                     std::vector<std::string> hyp) {
  ScoredPair pair;
  pair.utterance_id = std::move(id);
  pair.unit = unit;
  pair.counts = edit_distance<std::string>(ref, hyp);
  pair.ref_len = ref.size();
  pair.ref_tokens = std::move(ref);
  pair.hyp_tokens = std::move(hyp);
  return pair;
}

double rate(std::size_t errors, std::size_t ref_len) {
  return 100.0 * static_cast<double>(errors) / static_cast<double>(ref_len);
}

}  // namespace

ScoredPair score_words(std::string id, std::string_view ref,
                       std::string_view hyp) {
  return make_pair(std::move(id), TokenUnit::kWord,
                   unicode::split_whitespace(ref),
                   unicode::split_whitespace(hyp));
}

ScoredPair score_chars(std::string id, std::string_view ref,
                       std::string_view hyp, bool count_spaces) {
  return make_pair(std::move(id), TokenUnit::kChar,
                   char_tokens(ref, count_spaces),
                   char_tokens(hyp, count_spaces));
}

double error_rate(std::span<const ScoredPair> pairs) {
  std::size_t errors = 0;
  std::size_t ref_len = 0;
  for (const ScoredPair& p : pairs) {
    errors += p.counts.total();
    ref_len += p.ref_len;
  }
  if (ref_len == 0) {
    throw ValidationError("error rate undefined: total reference length is 0");
  }
  return rate(errors, ref_len);
}

double wer(std::span<const ScoredPair> pairs) {
  for (const ScoredPair& p : pairs) {
    if (p.unit != TokenUnit::kWord) {
      throw ValidationError("wer() given character-level pair '" +
                            p.utterance_id + "'");
    }
  }
  return error_rate(pairs);
}

double cer(std::span<const ScoredPair> pairs) {
  for (const ScoredPair& p : pairs) {
    if (p.unit != TokenUnit::kChar) {
      throw ValidationError("cer() given word-level pair '" + p.utterance_id +
                            "'");
    }
  }
  return error_rate(pairs);
}

double lid_accuracy(std::span<const LidOutcome> outcomes) {
  if (outcomes.empty()) {
    throw ValidationError("LID accuracy undefined for zero utterances");
  }
  std::size_t correct = 0;
  for (const LidOutcome& o : outcomes) {
    if (o.predicted && *o.predicted == o.truth) ++correct;
  }
  return 100.0 * static_cast<double>(correct) /
         static_cast<double>(outcomes.size());
}

std::vector<GenderStratum> gender_strata(
    std::span<const GenderedScore> scores) {
  struct Tally {
    std::size_t n = 0;
    std::size_t errors = 0;
    std::size_t ref_len = 0;
  };
  // [language][gender]
  std::array<std::array<Tally, kAllGenders.size()>, kAllLanguages.size()>
      tallies{};
  std::array<bool, kAllLanguages.size()> present{};
  for (const GenderedScore& s : scores) {
    Tally& t = tallies[index_of(s.lang)][static_cast<std::size_t>(s.gender)];
    ++t.n;
    t.errors += s.counts.total();
    t.ref_len += s.ref_len;
    present[index_of(s.lang)] = true;
  }

  auto wer_of = [](const Tally& t) -> std::optional<double> {
    if (t.ref_len == 0) return std::nullopt;
    return rate(t.errors, t.ref_len);
  };

  std::vector<GenderStratum> out;
  for (Language lang : kAllLanguages) {
    if (!present[index_of(lang)]) continue;
    const auto& row = tallies[index_of(lang)];
    const Tally& male = row[static_cast<std::size_t>(Gender::kMale)];
    const Tally& female = row[static_cast<std::size_t>(Gender::kFemale)];
    const Tally& unknown = row[static_cast<std::size_t>(Gender::kUnknown)];

    GenderStratum stratum;
    stratum.lang = lang;
    stratum.n_male = male.n;
    stratum.n_female = female.n;
    stratum.n_unknown = unknown.n;
    Tally all;
    for (const Tally& t : row) {
      all.errors += t.errors;
      all.ref_len += t.ref_len;
    }
    stratum.overall_wer = wer_of(all);
    stratum.male_wer = wer_of(male);
    stratum.female_wer = wer_of(female);
    if (stratum.male_wer && stratum.female_wer) {
      stratum.delta = *stratum.male_wer - *stratum.female_wer;
    } else {
      std::string missing;
      if (!stratum.male_wer) missing = "male";
      if (!stratum.female_wer) missing += missing.empty() ? "female" : "/female";
      stratum.diagnostic = std::string(language_code(lang)) + ": no " +
                           missing +
                           " reference words; gender gap not computed";
    }
    out.push_back(std::move(stratum));
  }
  return out;
}

}  // namespace ethio
