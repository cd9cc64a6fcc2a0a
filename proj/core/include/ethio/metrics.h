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

#ifndef ETHIO_METRICS_H_
#define ETHIO_METRICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ethio/language.h"

namespace ethio {

struct EditCounts {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;

  std::size_t total() const { return substitutions + deletions + insertions; }
  EditCounts& operator+=(const EditCounts& other) {
    substitutions += other.substitutions;
    deletions += other.deletions;
    insertions += other.insertions;
    return *this;
  }
  friend bool operator==(const EditCounts&, const EditCounts&) = default;
};

// Unit-cost Levenshtein alignment. Among minimum-cost alignments the one
// with the most substitutions wins, which fixes D and I as well (D - I is
// always |ref| - |hyp|), so the counts are deterministic.
template <typename Token>
EditCounts edit_distance(std::span<const Token> ref,
                         std::span<const Token> hyp) {
  struct Cell {
    std::size_t cost;
    std::size_t subs;
  };
  auto better = [](const Cell& a, const Cell& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.subs > b.subs);
  };
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<Cell> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = {j, 0};
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = {i, 0};
    for (std::size_t j = 1; j <= m; ++j) {
      Cell best = prev[j - 1];
      if (!(ref[i - 1] == hyp[j - 1])) {
        ++best.cost;
        ++best.subs;
      }
      const Cell del{prev[j].cost + 1, prev[j].subs};
      const Cell ins{cur[j - 1].cost + 1, cur[j - 1].subs};
      if (better(del, best)) best = del;
      if (better(ins, best)) best = ins;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  const Cell& end = prev[m];
  const std::size_t indels = end.cost - end.subs;
  EditCounts counts;
  counts.substitutions = end.subs;
  counts.deletions = (indels + n - m) / 2;
  counts.insertions = (indels + m - n) / 2;
  return counts;
}

enum class TokenUnit { kWord, kChar };

// Per-utterance alignment result.
struct ScoredPair {
  std::string utterance_id;
  TokenUnit unit = TokenUnit::kWord;
  std::vector<std::string> ref_tokens;
  std::vector<std::string> hyp_tokens;
  EditCounts counts;
  std::size_t ref_len = 0;
};

// Words are whitespace-separated tokens of already-normalized text.
ScoredPair score_words(std::string id, std::string_view ref,
                       std::string_view hyp);
// Characters are Unicode scalars of the trimmed text; internal spaces count
// unless |count_spaces| is false.
ScoredPair score_chars(std::string id, std::string_view ref,
                       std::string_view hyp, bool count_spaces = true);

// 100 * sum(S + D + I) / sum(ref_len), micro-averaged. Can exceed 100.
// Throws ValidationError when the reference length sums to zero.
double error_rate(std::span<const ScoredPair> pairs);
double wer(std::span<const ScoredPair> pairs);
double cer(std::span<const ScoredPair> pairs);

struct LidOutcome {
  Language truth;
  std::optional<Language> predicted;
};

// Percentage of exact matches; a missing prediction counts as wrong.
double lid_accuracy(std::span<const LidOutcome> outcomes);

// Model-selection criterion on fractions or percentages alike.
inline double checkpoint_score(double wer, double cer) {
  return 0.5 * wer + 0.5 * cer;
}

struct GenderedScore {
  Language lang;
  Gender gender;
  EditCounts counts;
  std::size_t ref_len = 0;
};

struct GenderStratum {
  Language lang;
  std::size_t n_male = 0;
  std::size_t n_female = 0;
  std::size_t n_unknown = 0;
  std::optional<double> overall_wer;
  std::optional<double> male_wer;
  std::optional<double> female_wer;
  // male_wer - female_wer; positive means male speakers fare worse.
  std::optional<double> delta;
  std::string diagnostic;
};

// One row per language present in |scores|, in language order. Unknown
// gender counts toward overall_wer only; an empty male or female stratum
// leaves delta empty and explains why in |diagnostic|.
std::vector<GenderStratum> gender_strata(std::span<const GenderedScore> scores);

}  // namespace ethio

#endif  // ETHIO_METRICS_H_
