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

#ifndef ETHIO_REPORT_H_
#define ETHIO_REPORT_H_

#include <string>

#include "ethio/evaluate.h"
#include "ethio/manifest.h"

namespace ethio {

// Renderers for the command-line reports. JSON keys are emitted in a fixed
// order and numbers in shortest round-trip form, so identical inputs give
// byte-identical output. Missing values are null in JSON and empty in CSV.

// Columns: language,wer,cer,lid_acc,male_wer,female_wer,delta,n_utts,
// ref_words,... followed by the ALL (micro) and AVG (macro) rows.
std::string eval_report_json(const EvalReport& report,
                             bool include_utterances = false);
std::string eval_report_csv(const EvalReport& report);

std::string gender_report_json(const EvalReport& report);
std::string gender_report_csv(const EvalReport& report);

std::string compare_report_json(const CompareReport& report);
std::string compare_report_csv(const CompareReport& report);

// Hours per language, split and gender plus All rows, two decimals.
std::string duration_report_json(const DurationTable& table);
std::string duration_report_csv(const DurationTable& table);

// "+2.06", "-3.61", "0.00"
std::string format_signed(double value);
// "%.2f"
std::string format_fixed2(double value);

}  // namespace ethio

#endif  // ETHIO_REPORT_H_
