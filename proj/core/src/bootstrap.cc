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

#include "ethio/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "ethio/error.h"
#include "ethio/parallel.h"

namespace ethio {
namespace {

struct Tally {
  std::size_t errors = 0;
  std::size_t ref_len = 0;
};

// Unbiased integer in [0, bound) by rejection.
std::size_t draw_index(std::mt19937_64& engine, std::size_t bound) {
  const std::uint64_t range = bound;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

std::vector<std::uint64_t> resample_seeds(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 master(seed);
  std::vector<std::uint64_t> seeds(n);
  for (auto& s : seeds) s = master();
  return seeds;
}

double resample_rate(const Tally& t) {
  // A resample can in principle draw only empty references.
  const std::size_t denom = std::max<std::size_t>(t.ref_len, 1);
  return 100.0 * static_cast<double>(t.errors) / static_cast<double>(denom);
}

std::vector<Tally> tallies_of(std::span<const ScoredPair> pairs) {
  std::vector<Tally> out;
  out.reserve(pairs.size());
  for (const ScoredPair& p : pairs) out.push_back({p.counts.total(), p.ref_len});
  return out;
}

IntervalEstimate summarize(std::vector<double> values) {
  IntervalEstimate est;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  est.ci_low = percentile(values, 0.025);
  est.ci_high = percentile(values, 0.975);
  est.half_width = 0.5 * (est.ci_high - est.ci_low);
  return est;
}

// Per-resample WERs of one or two aligned tally vectors.
void run_resamples(const std::vector<Tally>& a, const std::vector<Tally>* b,
                   std::size_t n, std::uint64_t seed, unsigned workers,
                   std::vector<double>& wer_a, std::vector<double>& wer_b) {
  const std::vector<std::uint64_t> seeds = resample_seeds(seed, n);
  const std::size_t count = a.size();
  wer_a.assign(n, 0.0);
  if (b != nullptr) wer_b.assign(n, 0.0);
  parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      std::mt19937_64 engine(seeds[r]);
      Tally ta;
      Tally tb;
      for (std::size_t k = 0; k < count; ++k) {
        const std::size_t idx = draw_index(engine, count);
        ta.errors += a[idx].errors;
        ta.ref_len += a[idx].ref_len;
        if (b != nullptr) {
          tb.errors += (*b)[idx].errors;
          tb.ref_len += (*b)[idx].ref_len;
        }
      }
      wer_a[r] = resample_rate(ta);
      if (b != nullptr) wer_b[r] = resample_rate(tb);
    }
  });
}

void check_common(std::span<const ScoredPair> pairs, std::size_t n) {
  if (n < 2) throw ValidationError("bootstrap needs at least 2 resamples");
  if (pairs.empty()) throw ValidationError("bootstrap over zero utterances");
  std::size_t ref = 0;
  for (const ScoredPair& p : pairs) ref += p.ref_len;
  if (ref == 0) {
    throw ValidationError("bootstrap undefined: total reference length is 0");
  }
}

}  // namespace

double percentile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw ValidationError("percentile of empty sample");
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BootstrapResult paired_bootstrap(std::span<const ScoredPair> pairs_a,
                                 std::span<const ScoredPair> pairs_b,
                                 std::size_t n, std::uint64_t seed,
                                 unsigned workers) {
  check_common(pairs_a, n);
  if (pairs_a.size() != pairs_b.size()) {
    throw ValidationError("paired bootstrap: system A scores " +
                          std::to_string(pairs_a.size()) +
                          " utterances, system B " +
                          std::to_string(pairs_b.size()));
  }
  // Align B to A's order by utterance id.
  std::unordered_map<std::string, std::size_t> b_index;
  for (std::size_t i = 0; i < pairs_b.size(); ++i) {
    if (!b_index.emplace(pairs_b[i].utterance_id, i).second) {
      throw ValidationError("paired bootstrap: duplicate id '" +
                            pairs_b[i].utterance_id + "' in system B");
    }
  }
  std::vector<Tally> a = tallies_of(pairs_a);
  std::vector<Tally> b(a.size());
  std::unordered_map<std::string, bool> a_seen;
  for (std::size_t i = 0; i < pairs_a.size(); ++i) {
    const std::string& id = pairs_a[i].utterance_id;
    if (!a_seen.emplace(id, true).second) {
      throw ValidationError("paired bootstrap: duplicate id '" + id +
                            "' in system A");
    }
    auto it = b_index.find(id);
    if (it == b_index.end()) {
      throw ValidationError("paired bootstrap: id '" + id +
                            "' missing from system B");
    }
    const ScoredPair& pb = pairs_b[it->second];
    b[i] = {pb.counts.total(), pb.ref_len};
  }

  std::vector<double> wer_a;
  std::vector<double> wer_b;
  run_resamples(a, &b, n, seed, workers, wer_a, wer_b);

  std::vector<double> diffs(n);
  std::size_t non_positive = 0;
  std::size_t non_negative = 0;
  for (std::size_t r = 0; r < n; ++r) {
    diffs[r] = wer_a[r] - wer_b[r];
    if (diffs[r] <= 0.0) ++non_positive;
    if (diffs[r] >= 0.0) ++non_negative;
  }

  BootstrapResult result;
  result.n_resamples = n;
  result.n_utterances = a.size();
  result.seed = seed;
  const IntervalEstimate diff = summarize(diffs);
  result.mean_diff = diff.mean;
  result.ci_low = diff.ci_low;
  result.ci_high = diff.ci_high;
  result.half_width = diff.half_width;
  result.p_value =
      std::min(1.0, 2.0 * static_cast<double>(std::min(non_positive,
                                                       non_negative)) /
                        static_cast<double>(n));
  result.system_a = summarize(std::move(wer_a));
  result.system_b = summarize(std::move(wer_b));
  return result;
}

IntervalEstimate bootstrap_interval(std::span<const ScoredPair> pairs,
                                    std::size_t n, std::uint64_t seed,
                                    unsigned workers) {
  check_common(pairs, n);
  std::vector<double> wers;
  std::vector<double> unused;
  run_resamples(tallies_of(pairs), nullptr, n, seed, workers, wers, unused);
  return summarize(std::move(wers));
}

std::string format_ci(double mean, double half_width) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f ± %.2f", mean, half_width);
  return buf;
}

}  // namespace ethio
