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

#ifndef ETHIO_CTC_H_
#define ETHIO_CTC_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ethio/language.h"
#include "ethio/vocab.h"

namespace ethio {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) with kLogZero as the additive identity.
inline double log_sum_exp(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  return a > b ? a + std::log1p(std::exp(b - a))
               : b + std::log1p(std::exp(a - b));
}

// T x V matrix of per-frame natural-log probabilities, row-major.
//
// Every row must be log-normalized (|logsumexp(row)| <= kRowTolerance) and
// every entry finite or -inf; the constructor throws ValidationError
// otherwise.
class LogitMatrix {
 public:
  static constexpr double kRowTolerance = 1e-3;

  LogitMatrix(std::size_t frames, std::size_t vocab_size,
              std::vector<double> values);

  // Convenience for tests and fixtures: takes probabilities, stores logs.
  static LogitMatrix from_probabilities(std::size_t frames,
                                        std::size_t vocab_size,
                                        std::span<const double> probs);

  std::size_t frames() const { return frames_; }
  std::size_t vocab_size() const { return vocab_size_; }
  std::span<const double> row(std::size_t t) const {
    return {values_.data() + t * vocab_size_, vocab_size_};
  }
  double operator()(std::size_t t, std::size_t v) const {
    return values_[t * vocab_size_ + v];
  }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t frames_;
  std::size_t vocab_size_;
  std::vector<double> values_;
};

// Paths enumerated by ctc_brute_force are capped at this count.
inline constexpr std::uint64_t kMaxBruteForcePaths = 10'000'000;

// log P(labels | logits): log-sum over every frame alignment that collapses
// to |labels|, via the forward recursion over the blank-interleaved label
// sequence. Returns kLogZero when no alignment fits in T frames. Labels must
// be non-blank ids below V.
double ctc_log_likelihood(const LogitMatrix& logits,
                          std::span<const int> labels, int blank_id = kBlankId);
double ctc_log_likelihood(const LogitMatrix& logits,
                          const TargetSequence& target);

// The same log-likelihood from the backward recursion, read off at the
// first frame. Agrees with ctc_log_likelihood up to rounding.
double ctc_log_likelihood_backward(const LogitMatrix& logits,
                                   std::span<const int> labels,
                                   int blank_id = kBlankId);

// Reference implementation: enumerates all V^T paths. Throws
// ValidationError when V^T exceeds kMaxBruteForcePaths.
double ctc_brute_force(const LogitMatrix& logits, std::span<const int> labels,
                       int blank_id = kBlankId);
double ctc_brute_force(const LogitMatrix& logits,
                       const TargetSequence& target);

// Merge consecutive duplicates, then drop blanks.
std::vector<int> collapse_path(std::span<const int> path, int blank_id);

// Per-frame argmax; ties go to the lowest id.
std::vector<int> best_path(const LogitMatrix& logits);

struct GreedyResult {
  std::optional<Language> lang;
  std::string text;
  // Collapsed ids, language token included.
  std::vector<int> raw_ids;
  // A language token appeared after the first position. It is rendered
  // literally in |text| and |lang| is left empty unless the first id was a
  // language token as well.
  bool misplaced_lid = false;
};

// Best-path decoding with joint language identification.
GreedyResult greedy_decode(const LogitMatrix& logits,
                           const GraphemeVocab& vocab);

}  // namespace ethio

#endif  // ETHIO_CTC_H_
