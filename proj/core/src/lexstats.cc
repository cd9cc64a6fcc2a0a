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

#include "ethio/lexstats.h"

#include <ostream>
#include <string_view>
#include <unordered_set>

#include "ethio/error.h"
#include "ethio/unicode.h"

namespace ethio {

GrowthCurve vocab_growth(std::span<const std::string> tokens,
                         std::size_t step) {
  if (step == 0) throw ValidationError("growth step must be at least 1");
  if (tokens.empty()) throw ValidationError("empty token stream");
  GrowthCurve curve;
  curve.points.reserve(tokens.size() / step + 1);
  std::unordered_set<std::string_view> types;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    types.insert(tokens[i]);
    const std::size_t seen = i + 1;
    if (seen % step == 0 || seen == tokens.size()) {
      curve.points.push_back({seen, types.size()});
    }
  }
  return curve;
}

double ttr_at(std::span<const std::string> tokens, std::size_t budget) {
  if (budget == 0) throw ValidationError("TTR budget must be at least 1");
  if (tokens.size() < budget) {
    throw ValidationError("stream has " + std::to_string(tokens.size()) +
                          " tokens, fewer than the TTR budget " +
                          std::to_string(budget));
  }
  std::unordered_set<std::string_view> types(tokens.begin(),
                                             tokens.begin() + budget);
  return static_cast<double>(types.size()) / static_cast<double>(budget);
}

std::vector<std::string> tokenize_corpus(std::span<const std::string> lines,
                                         Language lang,
                                         const NormalizationConfig& config) {
  std::vector<std::string> tokens;
  for (const std::string& line : lines) {
    for (auto& tok : unicode::split_whitespace(apply_pipeline(line, lang,
                                                              config))) {
      tokens.push_back(std::move(tok));
    }
  }
  return tokens;
}

void write_growth_csv(std::ostream& out, const GrowthCurve& curve) {
  out << "tokens,types\n";
  for (const GrowthPoint& p : curve.points) {
    out << p.tokens << ',' << p.types << '\n';
  }
}

}  // namespace ethio
