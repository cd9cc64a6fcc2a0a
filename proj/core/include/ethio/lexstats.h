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

#ifndef ETHIO_LEXSTATS_H_
#define ETHIO_LEXSTATS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ethio/language.h"
#include "ethio/normalize.h"

namespace ethio {

struct GrowthPoint {
  std::size_t tokens = 0;
  std::size_t types = 0;
  friend bool operator==(const GrowthPoint&, const GrowthPoint&) = default;
};

// Cumulative distinct-type counts; tokens strictly increasing, types
// non-decreasing and never above tokens.
struct GrowthCurve {
  std::vector<GrowthPoint> points;
};

// Records a point after every |step| tokens and at the end of the stream.
// Throws ValidationError for an empty stream or step == 0.
GrowthCurve vocab_growth(std::span<const std::string> tokens,
                         std::size_t step);

// Distinct types among the first |budget| tokens divided by |budget|.
// Longer streams are truncated. Throws when fewer than |budget| tokens.
double ttr_at(std::span<const std::string> tokens, std::size_t budget);

// Whitespace tokens of each line after apply_pipeline for |lang|.
std::vector<std::string> tokenize_corpus(std::span<const std::string> lines,
                                         Language lang,
                                         const NormalizationConfig& config);

// "tokens,types" header plus one row per point.
void write_growth_csv(std::ostream& out, const GrowthCurve& curve);

}  // namespace ethio

#endif  // ETHIO_LEXSTATS_H_
