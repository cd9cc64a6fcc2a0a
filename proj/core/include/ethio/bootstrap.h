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

#ifndef ETHIO_BOOTSTRAP_H_
#define ETHIO_BOOTSTRAP_H_

#include <cstdint>
#include <span>
#include <string>

#include "ethio/metrics.h"

namespace ethio {

// Bootstrap mean of a WER and its 95% percentile interval, in percent.
struct IntervalEstimate {
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double half_width = 0.0;
};

struct BootstrapResult {
  // Statistics of WER(A) - WER(B) over the resamples, in percentage points.
  double mean_diff = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double half_width = 0.0;
  double p_value = 1.0;
  std::size_t n_resamples = 0;
  std::size_t n_utterances = 0;
  std::uint64_t seed = 0;
  IntervalEstimate system_a;
  IntervalEstimate system_b;
};

inline constexpr std::size_t kDefaultResamples = 1000;

// Paired bootstrap over utterance ids: each resample draws ids with
// replacement and scores both systems on that same multiset.
//
// Resample r draws from its own mt19937_64 whose seed is the r-th output of
// a master mt19937_64(seed), so the index sets are fixed by |seed| alone and
// the result is bit-identical for any |workers|.
//
// p_value = min(1, 2 * min(#{d <= 0}, #{d >= 0}) / n) over the resampled
// differences d, i.e. the two-sided fraction of resamples disagreeing with
// the sign of the observed difference. Identical systems give exactly 1.
//
// Throws ValidationError if the id sets differ, ids repeat, n < 2 or the
// pairs hold no reference tokens.
BootstrapResult paired_bootstrap(std::span<const ScoredPair> pairs_a,
                                 std::span<const ScoredPair> pairs_b,
                                 std::size_t n = kDefaultResamples,
                                 std::uint64_t seed = 0, unsigned workers = 1);

// Bootstrap interval of a single system's WER, same resampling scheme.
IntervalEstimate bootstrap_interval(std::span<const ScoredPair> pairs,
                                    std::size_t n = kDefaultResamples,
                                    std::uint64_t seed = 0,
                                    unsigned workers = 1);

// "37.93 ± 1.32"
std::string format_ci(double mean, double half_width);

// Linear-interpolated percentile (q in [0, 1]) of a sorted sample.
double percentile(std::span<const double> sorted, double q);

}  // namespace ethio

#endif  // ETHIO_BOOTSTRAP_H_
