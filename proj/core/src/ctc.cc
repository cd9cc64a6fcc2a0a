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

#include "ethio/ctc.h"

#include <algorithm>
#include <cmath>

#include "ethio/error.h"

namespace ethio {
namespace {

void check_labels(std::span<const int> labels, std::size_t vocab_size,
                  int blank_id) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int id = labels[i];
    if (id < 0 || static_cast<std::size_t>(id) >= vocab_size) {
      throw ValidationError("target label " + std::to_string(id) +
                            " at position " + std::to_string(i) +
                            " out of range for V=" +
                            std::to_string(vocab_size));
    }
    if (id == blank_id) {
      throw ValidationError("target contains the blank id at position " +
                            std::to_string(i));
    }
  }
}

// Frames needed: one per label plus a separating blank between repeats.
std::size_t min_frames(std::span<const int> labels) {
  std::size_t needed = labels.size();
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1]) ++needed;
  }
  return needed;
}

}  // namespace

LogitMatrix::LogitMatrix(std::size_t frames, std::size_t vocab_size,
                         std::vector<double> values)
    : frames_(frames), vocab_size_(vocab_size), values_(std::move(values)) {
  if (frames_ == 0 || vocab_size_ == 0) {
    throw ValidationError("logit matrix needs T >= 1 and V >= 1");
  }
  if (values_.size() != frames_ * vocab_size_) {
    throw ValidationError("logit matrix holds " +
                          std::to_string(values_.size()) +
                          " values, expected T*V=" +
                          std::to_string(frames_ * vocab_size_));
  }
  for (std::size_t t = 0; t < frames_; ++t) {
    double total = kLogZero;
    for (double v : row(t)) {
      if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
        throw ValidationError("frame " + std::to_string(t) +
                              " holds a NaN or +inf log-probability");
      }
      total = log_sum_exp(total, v);
    }
    if (!(std::abs(total) <= kRowTolerance)) {
      throw ValidationError("frame " + std::to_string(t) +
                            " is not log-normalized (logsumexp = " +
                            std::to_string(total) + ")");
    }
  }
}

LogitMatrix LogitMatrix::from_probabilities(std::size_t frames,
                                            std::size_t vocab_size,
                                            std::span<const double> probs) {
  std::vector<double> logs(probs.size());
  std::transform(probs.begin(), probs.end(), logs.begin(),
                 [](double p) { return p > 0.0 ? std::log(p) : kLogZero; });
  return LogitMatrix(frames, vocab_size, std::move(logs));
}

double ctc_log_likelihood(const LogitMatrix& logits,
                          std::span<const int> labels, int blank_id) {
  check_labels(labels, logits.vocab_size(), blank_id);
  const std::size_t frames = logits.frames();
  if (frames < min_frames(labels)) return kLogZero;

  const auto blank = static_cast<std::size_t>(blank_id);
  // Extended sequence: blank, l1, blank, l2, ..., lL, blank.
  const std::size_t states = 2 * labels.size() + 1;
  auto label_at = [&](std::size_t s) {
    return s % 2 == 0 ? blank : static_cast<std::size_t>(labels[s / 2]);
  };

  std::vector<double> alpha(states, kLogZero);
  std::vector<double> next(states, kLogZero);
  alpha[0] = logits(0, blank);
  if (states > 1) alpha[1] = logits(0, label_at(1));

  for (std::size_t t = 1; t < frames; ++t) {
    // States reachable from the start that can still reach the end.
    const std::size_t remaining = frames - t;
    const std::size_t lo =
        states > 2 * remaining ? states - 2 * remaining - 1 : 0;
    const std::size_t hi = std::min(states, 2 * (t + 1));
    std::fill(next.begin(), next.end(), kLogZero);
    for (std::size_t s = lo; s < hi; ++s) {
      double acc = alpha[s];
      if (s >= 1) acc = log_sum_exp(acc, alpha[s - 1]);
      if (s >= 2 && s % 2 == 1 && label_at(s) != label_at(s - 2)) {
        acc = log_sum_exp(acc, alpha[s - 2]);
      }
      if (acc != kLogZero) acc += logits(t, label_at(s));
      next[s] = acc;
    }
    alpha.swap(next);
  }

  double result = alpha[states - 1];
  if (states > 1) result = log_sum_exp(result, alpha[states - 2]);
  // Rows may sum to slightly above one within kRowTolerance.
  return std::min(result, 0.0);
}

double ctc_log_likelihood_backward(const LogitMatrix& logits,
                                   std::span<const int> labels,
                                   int blank_id) {
  check_labels(labels, logits.vocab_size(), blank_id);
  const std::size_t frames = logits.frames();
  if (frames < min_frames(labels)) return kLogZero;

  const auto blank = static_cast<std::size_t>(blank_id);
  const std::size_t states = 2 * labels.size() + 1;
  auto label_at = [&](std::size_t s) {
    return s % 2 == 0 ? blank : static_cast<std::size_t>(labels[s / 2]);
  };

  // beta[s] at frame t includes the emission at t.
  std::vector<double> beta(states, kLogZero);
  std::vector<double> prev(states, kLogZero);
  beta[states - 1] = logits(frames - 1, blank);
  if (states > 1) beta[states - 2] = logits(frames - 1, label_at(states - 2));

  for (std::size_t t = frames - 1; t-- > 0;) {
    for (std::size_t s = 0; s < states; ++s) {
      double acc = beta[s];
      if (s + 1 < states) acc = log_sum_exp(acc, beta[s + 1]);
      if (s + 2 < states && s % 2 == 1 && label_at(s) != label_at(s + 2)) {
        acc = log_sum_exp(acc, beta[s + 2]);
      }
      if (acc != kLogZero) acc += logits(t, label_at(s));
      prev[s] = acc;
    }
    beta.swap(prev);
  }

  double result = beta[0];
  if (states > 1) result = log_sum_exp(result, beta[1]);
  return std::min(result, 0.0);
}

double ctc_log_likelihood(const LogitMatrix& logits,
                          const TargetSequence& target) {
  const std::vector<int> labels = target.labels();
  return ctc_log_likelihood(logits, labels);
}

double ctc_brute_force(const LogitMatrix& logits, std::span<const int> labels,
                       int blank_id) {
  check_labels(labels, logits.vocab_size(), blank_id);
  const std::size_t frames = logits.frames();
  const std::size_t vocab = logits.vocab_size();

  std::uint64_t paths = 1;
  for (std::size_t t = 0; t < frames; ++t) {
    if (paths > kMaxBruteForcePaths / vocab) {
      throw ValidationError("brute-force enumeration of V^T paths exceeds " +
                            std::to_string(kMaxBruteForcePaths));
    }
    paths *= vocab;
  }

  std::vector<int> path(frames, 0);
  double total = kLogZero;
  for (std::uint64_t n = 0; n < paths; ++n) {
    std::uint64_t code = n;
    for (std::size_t t = 0; t < frames; ++t) {
      path[t] = static_cast<int>(code % vocab);
      code /= vocab;
    }
    const std::vector<int> collapsed = collapse_path(path, blank_id);
    if (!std::equal(collapsed.begin(), collapsed.end(), labels.begin(),
                    labels.end())) {
      continue;
    }
    double log_p = 0.0;
    for (std::size_t t = 0; t < frames; ++t) {
      log_p += logits(t, static_cast<std::size_t>(path[t]));
    }
    total = log_sum_exp(total, log_p);
  }
  return std::min(total, 0.0);
}

double ctc_brute_force(const LogitMatrix& logits,
                       const TargetSequence& target) {
  const std::vector<int> labels = target.labels();
  return ctc_brute_force(logits, labels);
}

std::vector<int> collapse_path(std::span<const int> path, int blank_id) {
  std::vector<int> out;
  for (std::size_t t = 0; t < path.size(); ++t) {
    if (t > 0 && path[t] == path[t - 1]) continue;
    if (path[t] != blank_id) out.push_back(path[t]);
  }
  return out;
}

std::vector<int> best_path(const LogitMatrix& logits) {
  std::vector<int> path(logits.frames());
  for (std::size_t t = 0; t < logits.frames(); ++t) {
    const auto row = logits.row(t);
    // max_element returns the first maximum, i.e. the lowest id on ties.
    path[t] = static_cast<int>(std::max_element(row.begin(), row.end()) -
                               row.begin());
  }
  return path;
}

GreedyResult greedy_decode(const LogitMatrix& logits,
                           const GraphemeVocab& vocab) {
  if (logits.vocab_size() != vocab.size()) {
    throw ValidationError("logit width " + std::to_string(logits.vocab_size()) +
                          " does not match vocabulary size " +
                          std::to_string(vocab.size()));
  }
  GreedyResult result;
  result.raw_ids = collapse_path(best_path(logits), vocab.blank_id());
  for (std::size_t i = 0; i < result.raw_ids.size(); ++i) {
    const int id = result.raw_ids[i];
    if (auto lang = vocab.language_of(id)) {
      if (i == 0) {
        result.lang = *lang;
        continue;
      }
      result.misplaced_lid = true;
    }
    result.text += vocab.symbol(id);
  }
  return result;
}

}  // namespace ethio
