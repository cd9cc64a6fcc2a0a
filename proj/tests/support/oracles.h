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

// Independent reference computations used only by the tests. Nothing here
// shares code with the library paths it checks.

#ifndef ETHIO_TESTS_ORACLES_H_
#define ETHIO_TESTS_ORACLES_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace ethio::testing {

struct AlignmentCounts {
  std::size_t cost = 0;
  std::size_t subs = 0;
  std::size_t dels = 0;
  std::size_t ins = 0;
};

// Walks every alignment of ref against hyp (match/substitute, delete,
// insert) and returns the minimum-cost one, preferring more substitutions.
template <typename T>
AlignmentCounts enumerate_alignments(const std::vector<T>& ref,
                                     const std::vector<T>& hyp) {
  AlignmentCounts best;
  best.cost = std::numeric_limits<std::size_t>::max();
  std::function<void(std::size_t, std::size_t, AlignmentCounts)> walk =
      [&](std::size_t i, std::size_t j, AlignmentCounts acc) {
        if (i == ref.size() && j == hyp.size()) {
          if (acc.cost < best.cost ||
              (acc.cost == best.cost && acc.subs > best.subs)) {
            best = acc;
          }
          return;
        }
        if (i < ref.size() && j < hyp.size()) {
          AlignmentCounts next = acc;
          if (!(ref[i] == hyp[j])) {
            ++next.cost;
            ++next.subs;
          }
          walk(i + 1, j + 1, next);
        }
        if (i < ref.size()) {
          AlignmentCounts next = acc;
          ++next.cost;
          ++next.dels;
          walk(i + 1, j, next);
        }
        if (j < hyp.size()) {
          AlignmentCounts next = acc;
          ++next.cost;
          ++next.ins;
          walk(i, j + 1, next);
        }
      };
  walk(0, 0, {});
  return best;
}

// Every sequence over {0..alphabet-1} of length 0..max_len.
inline std::vector<std::vector<int>> all_sequences(int alphabet,
                                                   std::size_t max_len) {
  std::vector<std::vector<int>> out = {{}};
  std::vector<std::vector<int>> frontier = {{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& seq : frontier) {
      for (int a = 0; a < alphabet; ++a) {
        auto s = seq;
        s.push_back(a);
        next.push_back(s);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Row-stochastic T x V probabilities drawn from a seeded engine, returned
// as natural logs.
inline std::vector<double> random_log_probs(std::size_t frames,
                                            std::size_t vocab,
                                            std::mt19937_64& engine) {
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<double> out(frames * vocab);
  for (std::size_t t = 0; t < frames; ++t) {
    double sum = 0.0;
    for (std::size_t v = 0; v < vocab; ++v) {
      out[t * vocab + v] = unit(engine);
      sum += out[t * vocab + v];
    }
    for (std::size_t v = 0; v < vocab; ++v) {
      out[t * vocab + v] = std::log(out[t * vocab + v] / sum);
    }
  }
  return out;
}

// Distinct-type counts recomputed from scratch with std::set at each prefix
// length in |checkpoints|.
inline std::vector<std::size_t> recount_types(
    const std::vector<std::string>& tokens,
    const std::vector<std::size_t>& checkpoints) {
  std::vector<std::size_t> out;
  for (std::size_t n : checkpoints) {
    std::set<std::string> types(tokens.begin(), tokens.begin() + n);
    out.push_back(types.size());
  }
  return out;
}

// Seeded Zipf(s) sample over |types| word forms "w0".."w{types-1}".
inline std::vector<std::string> zipf_stream(std::size_t count,
                                            std::size_t types, double s,
                                            std::uint64_t seed) {
  std::vector<double> weights(types);
  for (std::size_t k = 0; k < types; ++k) {
    weights[k] = 1.0 / std::pow(static_cast<double>(k + 1), s);
  }
  std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
  std::mt19937_64 engine(seed);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back("w" + std::to_string(dist(engine)));
  }
  return out;
}

}  // namespace ethio::testing

#endif  // ETHIO_TESTS_ORACLES_H_
