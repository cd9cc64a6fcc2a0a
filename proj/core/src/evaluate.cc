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

#include "ethio/evaluate.h"

#include <array>
#include <unordered_map>
#include <unordered_set>

#include "ethio/error.h"
#include "ethio/parallel.h"

namespace ethio {
namespace {

constexpr std::size_t kMaxListedIds = 20;

std::string list_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < kMaxListedIds; ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  if (ids.size() > kMaxListedIds) {
    out += ", ... (" + std::to_string(ids.size()) + " total)";
  }
  return out;
}

std::optional<double> rate(std::size_t errors, std::size_t ref_len) {
  if (ref_len == 0) return std::nullopt;
  return 100.0 * static_cast<double>(errors) / static_cast<double>(ref_len);
}

ReportRow aggregate(std::string label, std::optional<Language> lang,
                    std::span<const UtteranceScore* const> scores) {
  ReportRow row;
  row.label = std::move(label);
  row.lang = lang;
  row.n_utts = scores.size();
  std::vector<GenderedScore> gendered;
  gendered.reserve(scores.size());
  EditCounts male_errors, female_errors;
  std::size_t male_ref = 0, female_ref = 0;
  for (const UtteranceScore* s : scores) {
    row.ref_words += s->words.ref_len;
    row.ref_chars += s->chars.ref_len;
    row.word_errors += s->words.counts;
    row.char_errors += s->chars.counts;
    if (s->predicted_lang) {
      ++row.n_lid;
    }
    switch (s->gender) {
      case Gender::kMale:
        ++row.n_male;
        male_errors += s->words.counts;
        male_ref += s->words.ref_len;
        break;
      case Gender::kFemale:
        ++row.n_female;
        female_errors += s->words.counts;
        female_ref += s->words.ref_len;
        break;
      case Gender::kUnknown:
        ++row.n_unknown;
        break;
    }
  }
  row.wer = rate(row.word_errors.total(), row.ref_words);
  row.cer = rate(row.char_errors.total(), row.ref_chars);
  if (row.wer && row.cer) row.checkpoint_score = checkpoint_score(*row.wer, *row.cer);
  // Once any hypothesis carries a language prediction, utterances without
  // one count as misidentified.
  if (row.n_lid > 0) {
    std::vector<LidOutcome> outcomes;
    for (const UtteranceScore* s : scores) {
      outcomes.push_back({s->lang, s->predicted_lang});
    }
    row.lid_acc = lid_accuracy(outcomes);
  }
  row.male_wer = rate(male_errors.total(), male_ref);
  row.female_wer = rate(female_errors.total(), female_ref);
  if (row.male_wer && row.female_wer) {
    row.delta = *row.male_wer - *row.female_wer;
  } else {
    row.diagnostic = row.label + ": ";
    row.diagnostic += !row.male_wer && !row.female_wer ? "no male or female"
                      : !row.male_wer                  ? "no male"
                                                       : "no female";
    row.diagnostic += " reference words; gender gap not computed";
  }
  return row;
}

}  // namespace

std::vector<UtteranceScore> score_run(std::span<const Utterance> manifest,
                                      std::span<const HypothesisRecord> hyps,
                                      const NormalizationConfig& config,
                                      const EvalOptions& options) {
  std::unordered_map<std::string_view, const HypothesisRecord*> by_id;
  for (const HypothesisRecord& h : hyps) by_id.emplace(h.id, &h);

  std::unordered_set<std::string_view> manifest_ids;
  std::vector<const Utterance*> selected;
  std::vector<std::string> missing;
  for (const Utterance& utt : manifest) {
    manifest_ids.insert(utt.id);
    if (options.split && utt.split != *options.split) continue;
    selected.push_back(&utt);
    if (by_id.find(utt.id) == by_id.end()) missing.push_back(utt.id);
  }
  std::vector<std::string> unknown;
  for (const HypothesisRecord& h : hyps) {
    if (manifest_ids.find(h.id) == manifest_ids.end()) unknown.push_back(h.id);
  }
  if (!missing.empty()) {
    throw ValidationError("no hypothesis for " +
                          std::to_string(missing.size()) +
                          " utterance(s): " + list_ids(missing));
  }
  if (!unknown.empty()) {
    throw ValidationError("hypotheses reference " +
                          std::to_string(unknown.size()) +
                          " id(s) absent from the manifest: " +
                          list_ids(unknown));
  }
  if (selected.empty()) {
    throw ValidationError(
        "empty evaluation set" +
        (options.split ? " for split '" +
                             std::string(split_name(*options.split)) + "'"
                       : std::string()));
  }

  std::vector<UtteranceScore> scores(selected.size());
  parallel_for(selected.size(), options.workers,
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   const Utterance& utt = *selected[i];
                   const HypothesisRecord& hyp = *by_id.at(utt.id);
                   UtteranceScore& s = scores[i];
                   s.id = utt.id;
                   s.lang = utt.language;
                   s.gender = utt.gender;
                   s.predicted_lang = hyp.predicted_lang;
                   s.ref = apply_pipeline(utt.text, utt.language, config);
                   s.hyp = apply_pipeline(hyp.text, utt.language, config);
                   s.words = score_words(utt.id, s.ref, s.hyp);
                   s.chars = score_chars(utt.id, s.ref, s.hyp,
                                         options.count_spaces_in_cer);
                 }
               });
  return scores;
}

EvalReport build_report(std::vector<UtteranceScore> scores,
                        const EvalOptions& options) {
  EvalReport report;
  report.norm_label = options.norm_label;
  report.split = options.split;
  report.utterances = std::move(scores);

  std::vector<const UtteranceScore*> all;
  std::array<std::vector<const UtteranceScore*>, kAllLanguages.size()> per_lang;
  for (const UtteranceScore& s : report.utterances) {
    all.push_back(&s);
    per_lang[index_of(s.lang)].push_back(&s);
  }
  for (Language lang : kAllLanguages) {
    const auto& group = per_lang[index_of(lang)];
    if (group.empty()) continue;
    report.languages.push_back(
        aggregate(std::string(language_code(lang)), lang, group));
  }
  report.micro = aggregate("ALL", std::nullopt, all);

  ReportRow& macro = report.macro;
  macro.label = "AVG";
  macro.n_utts = report.micro.n_utts;
  macro.ref_words = report.micro.ref_words;
  macro.ref_chars = report.micro.ref_chars;
  auto mean_of = [&](auto member) -> std::optional<double> {
    double sum = 0.0;
    for (const ReportRow& row : report.languages) {
      if (!(row.*member)) return std::nullopt;
      sum += *(row.*member);
    }
    return sum / static_cast<double>(report.languages.size());
  };
  macro.wer = mean_of(&ReportRow::wer);
  macro.cer = mean_of(&ReportRow::cer);
  macro.lid_acc = mean_of(&ReportRow::lid_acc);
  if (macro.wer && macro.cer) {
    macro.checkpoint_score = checkpoint_score(*macro.wer, *macro.cer);
  }
  return report;
}

EvalReport evaluate_run(std::span<const Utterance> manifest,
                        std::span<const HypothesisRecord> hyps,
                        const NormalizationConfig& config,
                        const EvalOptions& options) {
  return build_report(score_run(manifest, hyps, config, options), options);
}

CompareReport compare_runs(std::span<const Utterance> manifest,
                           std::span<const HypothesisRecord> hyps_a,
                           std::span<const HypothesisRecord> hyps_b,
                           const NormalizationConfig& config,
                           const CompareOptions& options) {
  const auto scores_a = score_run(manifest, hyps_a, config, options.eval);
  const auto scores_b = score_run(manifest, hyps_b, config, options.eval);

  CompareReport report;
  report.norm_label = options.eval.norm_label;
  report.split = options.eval.split;

  // score_run preserves manifest order, so A and B are aligned by index.
  std::array<std::vector<ScoredPair>, kAllLanguages.size()> lang_a, lang_b;
  std::vector<ScoredPair> all_a, all_b;
  for (std::size_t i = 0; i < scores_a.size(); ++i) {
    lang_a[index_of(scores_a[i].lang)].push_back(scores_a[i].words);
    lang_b[index_of(scores_b[i].lang)].push_back(scores_b[i].words);
    all_a.push_back(scores_a[i].words);
    all_b.push_back(scores_b[i].words);
  }
  for (Language lang : kAllLanguages) {
    const auto& a = lang_a[index_of(lang)];
    if (a.empty()) continue;
    std::size_t ref = 0;
    for (const auto& p : a) ref += p.ref_len;
    if (ref == 0) continue;
    report.languages.emplace_back(
        lang, paired_bootstrap(a, lang_b[index_of(lang)], options.n_resamples,
                               options.seed, options.eval.workers));
  }
  report.overall = paired_bootstrap(all_a, all_b, options.n_resamples,
                                    options.seed, options.eval.workers);
  return report;
}

}  // namespace ethio
