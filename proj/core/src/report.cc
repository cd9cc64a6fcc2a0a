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

#include "ethio/report.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace ethio {
namespace {

using ojson = nlohmann::ordered_json;

ojson opt(const std::optional<double>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string num(const std::optional<double>& v) {
  return v ? num(*v) : std::string();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

ojson edit_json(const EditCounts& c) {
  ojson j;
  j["sub"] = c.substitutions;
  j["del"] = c.deletions;
  j["ins"] = c.insertions;
  return j;
}

ojson row_json(const ReportRow& row) {
  ojson j;
  j["language"] = row.label;
  j["wer"] = opt(row.wer);
  j["cer"] = opt(row.cer);
  j["lid_acc"] = opt(row.lid_acc);
  j["male_wer"] = opt(row.male_wer);
  j["female_wer"] = opt(row.female_wer);
  j["delta"] = opt(row.delta);
  j["n_utts"] = row.n_utts;
  j["ref_words"] = row.ref_words;
  j["ref_chars"] = row.ref_chars;
  j["word_errors"] = edit_json(row.word_errors);
  j["char_errors"] = edit_json(row.char_errors);
  j["checkpoint_score"] = opt(row.checkpoint_score);
  j["n_lid"] = row.n_lid;
  j["n_male"] = row.n_male;
  j["n_female"] = row.n_female;
  j["n_unknown"] = row.n_unknown;
  return j;
}

std::string split_label(const std::optional<Split>& split) {
  return split ? std::string(split_name(*split)) : std::string("all");
}

ojson interval_json(const IntervalEstimate& e) {
  ojson j;
  j["mean"] = e.mean;
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  j["half_width"] = e.half_width;
  j["formatted"] = format_ci(e.mean, e.half_width);
  return j;
}

ojson bootstrap_json(const std::string& label, const BootstrapResult& r) {
  ojson j;
  j["language"] = label;
  j["system_a"] = interval_json(r.system_a);
  j["system_b"] = interval_json(r.system_b);
  j["mean_diff"] = r.mean_diff;
  j["ci_low"] = r.ci_low;
  j["ci_high"] = r.ci_high;
  j["half_width"] = r.half_width;
  j["p_value"] = r.p_value;
  j["n_resamples"] = r.n_resamples;
  j["n_utterances"] = r.n_utterances;
  j["seed"] = r.seed;
  return j;
}

}  // namespace

std::string format_signed(double value) {
  char buf[64];
  const double r = round2(value);
  if (r == 0.0) return "0.00";
  std::snprintf(buf, sizeof buf, "%+.2f", r);
  return buf;
}

std::string format_fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string eval_report_json(const EvalReport& report,
                             bool include_utterances) {
  ojson j;
  j["normalization"] = report.norm_label;
  j["split"] = split_label(report.split);
  ojson rows = ojson::array();
  for (const ReportRow& row : report.languages) rows.push_back(row_json(row));
  j["languages"] = rows;
  j["micro"] = row_json(report.micro);
  ojson macro;
  macro["wer"] = opt(report.macro.wer);
  macro["cer"] = opt(report.macro.cer);
  macro["lid_acc"] = opt(report.macro.lid_acc);
  macro["checkpoint_score"] = opt(report.macro.checkpoint_score);
  j["macro"] = macro;
  if (include_utterances) {
    ojson utts = ojson::array();
    for (const UtteranceScore& s : report.utterances) {
      ojson u;
      u["id"] = s.id;
      u["language"] = language_code(s.lang);
      u["gender"] = gender_name(s.gender);
      u["ref"] = s.ref;
      u["hyp"] = s.hyp;
      u["predicted_lang"] =
          s.predicted_lang ? ojson(language_code(*s.predicted_lang))
                           : ojson(nullptr);
      u["ref_words"] = s.words.ref_len;
      u["word_errors"] = edit_json(s.words.counts);
      u["ref_chars"] = s.chars.ref_len;
      u["char_errors"] = edit_json(s.chars.counts);
      utts.push_back(u);
    }
    j["utterances"] = utts;
  }
  return j.dump(2) + "\n";
}

std::string eval_report_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "language,wer,cer,lid_acc,male_wer,female_wer,delta,n_utts,"
         "ref_words,ref_chars,checkpoint_score,n_male,n_female,n_unknown\n";
  auto emit = [&](const ReportRow& row, const std::string& label) {
    out << csv_field(label) << ',' << num(row.wer) << ',' << num(row.cer)
        << ',' << num(row.lid_acc) << ',' << num(row.male_wer) << ','
        << num(row.female_wer) << ',' << num(row.delta) << ',' << row.n_utts
        << ',' << row.ref_words << ',' << row.ref_chars << ','
        << num(row.checkpoint_score) << ',' << row.n_male << ','
        << row.n_female << ',' << row.n_unknown << '\n';
  };
  for (const ReportRow& row : report.languages) emit(row, row.label);
  emit(report.micro, "ALL (micro)");
  out << "AVG (macro)," << num(report.macro.wer) << ','
      << num(report.macro.cer) << ',' << num(report.macro.lid_acc)
      << ",,,," << report.macro.n_utts << ',' << report.macro.ref_words << ','
      << report.macro.ref_chars << ',' << num(report.macro.checkpoint_score)
      << ",,,\n";
  return out.str();
}

std::string gender_report_json(const EvalReport& report) {
  ojson j;
  j["normalization"] = report.norm_label;
  j["split"] = split_label(report.split);
  auto to_json = [](const ReportRow& row) {
    ojson r;
    r["language"] = row.label;
    r["n_male"] = row.n_male;
    r["n_female"] = row.n_female;
    r["n_unknown"] = row.n_unknown;
    r["overall_wer"] = opt(row.wer);
    r["male_wer"] = opt(row.male_wer);
    r["female_wer"] = opt(row.female_wer);
    r["delta"] = opt(row.delta);
    r["delta_formatted"] =
        row.delta ? ojson(format_signed(*row.delta)) : ojson(nullptr);
    r["diagnostic"] =
        row.diagnostic.empty() ? ojson(nullptr) : ojson(row.diagnostic);
    return r;
  };
  ojson rows = ojson::array();
  for (const ReportRow& row : report.languages) rows.push_back(to_json(row));
  j["languages"] = rows;
  j["overall"] = to_json(report.micro);
  j["note"] = "delta = male_wer - female_wer; positive means higher error "
              "for male speakers";
  return j.dump(2) + "\n";
}

std::string gender_report_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "language,n_male,n_female,n_unknown,overall_wer,male_wer,"
         "female_wer,delta,diagnostic\n";
  auto emit = [&](const ReportRow& row, const std::string& label) {
    out << csv_field(label) << ',' << row.n_male << ',' << row.n_female << ','
        << row.n_unknown << ',' << num(row.wer) << ',' << num(row.male_wer)
        << ',' << num(row.female_wer) << ',' << num(row.delta) << ','
        << csv_field(row.diagnostic) << '\n';
  };
  for (const ReportRow& row : report.languages) emit(row, row.label);
  emit(report.micro, "ALL (micro)");
  return out.str();
}

std::string compare_report_json(const CompareReport& report) {
  ojson j;
  j["normalization"] = report.norm_label;
  j["split"] = split_label(report.split);
  ojson rows = ojson::array();
  for (const auto& [lang, result] : report.languages) {
    rows.push_back(bootstrap_json(std::string(language_code(lang)), result));
  }
  j["languages"] = rows;
  j["overall"] = bootstrap_json("ALL", report.overall);
  return j.dump(2) + "\n";
}

std::string compare_report_csv(const CompareReport& report) {
  std::ostringstream out;
  out << "language,system_a,system_b,wer_a,half_width_a,wer_b,half_width_b,"
         "mean_diff,ci_low,ci_high,p_value,n_resamples,n_utterances,seed\n";
  auto emit = [&](const std::string& label, const BootstrapResult& r) {
    out << csv_field(label) << ','
        << csv_field(format_ci(r.system_a.mean, r.system_a.half_width)) << ','
        << csv_field(format_ci(r.system_b.mean, r.system_b.half_width)) << ','
        << num(r.system_a.mean) << ',' << num(r.system_a.half_width) << ','
        << num(r.system_b.mean) << ',' << num(r.system_b.half_width) << ','
        << num(r.mean_diff) << ',' << num(r.ci_low) << ',' << num(r.ci_high)
        << ',' << num(r.p_value) << ',' << r.n_resamples << ','
        << r.n_utterances << ',' << r.seed << '\n';
  };
  for (const auto& [lang, result] : report.languages) {
    emit(std::string(language_code(lang)), result);
  }
  emit("ALL", report.overall);
  return out.str();
}

std::string duration_report_json(const DurationTable& table) {
  ojson j;
  j["unit"] = "hours";
  ojson splits;
  for (Split split : kAllSplits) {
    ojson by_lang;
    for (Language lang : kAllLanguages) {
      ojson cell;
      cell["M"] = round2(table.hours(lang, split, Gender::kMale));
      cell["F"] = round2(table.hours(lang, split, Gender::kFemale));
      cell["unknown"] = round2(table.hours(lang, split, Gender::kUnknown));
      cell["All"] = round2(table.all_hours(lang, split));
      by_lang[std::string(language_code(lang))] = cell;
    }
    splits[std::string(split_name(split))] = by_lang;
  }
  j["splits"] = splits;
  return j.dump(2) + "\n";
}

std::string duration_report_csv(const DurationTable& table) {
  std::ostringstream out;
  out << "split,gender";
  for (Language lang : kAllLanguages) out << ',' << language_code(lang);
  out << '\n';
  for (Split split : kAllSplits) {
    for (Gender gender : kAllGenders) {
      out << split_name(split) << ',' << gender_name(gender);
      for (Language lang : kAllLanguages) {
        out << ',' << format_fixed2(table.hours(lang, split, gender));
      }
      out << '\n';
    }
    out << split_name(split) << ",All";
    for (Language lang : kAllLanguages) {
      out << ',' << format_fixed2(table.all_hours(lang, split));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ethio
