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

#ifndef ETHIO_EVALUATE_H_
#define ETHIO_EVALUATE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ethio/bootstrap.h"
#include "ethio/manifest.h"
#include "ethio/metrics.h"
#include "ethio/normalize.h"

namespace ethio {

struct EvalOptions {
  // Empty means every split.
  std::optional<Split> split = Split::kTest;
  bool count_spaces_in_cer = true;
  unsigned workers = 1;
  // Label recorded in reports, e.g. the preset name.
  std::string norm_label = "eval";
};

// Both normalized texts and their word/character alignments.
struct UtteranceScore {
  std::string id;
  Language lang;
  Gender gender;
  std::string ref;
  std::string hyp;
  std::optional<Language> predicted_lang;
  ScoredPair words;
  ScoredPair chars;
};

// One per-language row, or an aggregate row when |lang| is empty.
struct ReportRow {
  std::string label;
  std::optional<Language> lang;
  std::size_t n_utts = 0;
  std::size_t ref_words = 0;
  std::size_t ref_chars = 0;
  EditCounts word_errors;
  EditCounts char_errors;
  std::optional<double> wer;
  std::optional<double> cer;
  // 0.5 * WER + 0.5 * CER, in percent.
  std::optional<double> checkpoint_score;
  std::optional<double> lid_acc;
  std::size_t n_lid = 0;
  std::size_t n_male = 0;
  std::size_t n_female = 0;
  std::size_t n_unknown = 0;
  std::optional<double> male_wer;
  std::optional<double> female_wer;
  std::optional<double> delta;
  std::string diagnostic;
};

struct EvalReport {
  std::string norm_label;
  std::optional<Split> split;
  std::vector<ReportRow> languages;
  // Errors pooled over every utterance.
  ReportRow micro;
  // Unweighted mean of the per-language rows (wer, cer, lid_acc only).
  ReportRow macro;
  std::vector<UtteranceScore> utterances;
};

// Normalizes references and hypotheses per language and scores them.
// Throws ValidationError listing unmatched ids (evaluated utterances without
// a hypothesis, hypotheses naming no manifest utterance) or when the chosen
// split is empty.
std::vector<UtteranceScore> score_run(std::span<const Utterance> manifest,
                                      std::span<const HypothesisRecord> hyps,
                                      const NormalizationConfig& config,
                                      const EvalOptions& options);

EvalReport evaluate_run(std::span<const Utterance> manifest,
                        std::span<const HypothesisRecord> hyps,
                        const NormalizationConfig& config,
                        const EvalOptions& options);

// Aggregates already-scored utterances; evaluate_run is score_run followed
// by this.
EvalReport build_report(std::vector<UtteranceScore> scores,
                        const EvalOptions& options);

struct CompareOptions {
  EvalOptions eval;
  std::size_t n_resamples = kDefaultResamples;
  std::uint64_t seed = 0;
};

struct CompareReport {
  std::string norm_label;
  std::optional<Split> split;
  std::vector<std::pair<Language, BootstrapResult>> languages;
  BootstrapResult overall;
};

// Paired bootstrap of system A against system B, per language and over all
// evaluated utterances. Both systems must cover the same ids.
CompareReport compare_runs(std::span<const Utterance> manifest,
                           std::span<const HypothesisRecord> hyps_a,
                           std::span<const HypothesisRecord> hyps_b,
                           const NormalizationConfig& config,
                           const CompareOptions& options);

}  // namespace ethio

#endif  // ETHIO_EVALUATE_H_
