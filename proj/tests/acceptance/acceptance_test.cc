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

// Acceptance checks, one line per criterion. Exits non-zero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ethio/bootstrap.h"
#include "ethio/ctc.h"
#include "ethio/error.h"
#include "ethio/evaluate.h"
#include "ethio/lexstats.h"
#include "ethio/logit_io.h"
#include "ethio/manifest.h"
#include "ethio/metrics.h"
#include "ethio/normalize.h"
#include "ethio/report.h"
#include "ethio/unicode.h"
#include "ethio/vocab.h"
#include "json.hpp"
#include "minimal_pairs.h"
#include "oracles.h"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << v;
  return out.str();
}

std::string fixture(const std::string& name) {
  return std::string(ETHIO_FIXTURE_DIR) + "/" + name;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ethio::IoError("cannot open " + path);
  return json::parse(in);
}

// --- 1 ---------------------------------------------------------------------

Outcome ctc_oracle() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 engine(20260101);
  std::size_t cases = 0;
  double worst = 0.0;
  for (int rep = 0; rep < 2; ++rep) {
    for (std::size_t frames = 1; frames <= 6; ++frames) {
      for (int vocab = 2; vocab <= 4; ++vocab) {
        // Labels over the non-blank ids 1..vocab-1.
        for (const auto& seq : ethio::testing::all_sequences(vocab - 1, 3)) {
          std::vector<int> labels;
          for (int s : seq) labels.push_back(s + 1);
          const ethio::LogitMatrix logits(
              frames, vocab,
              ethio::testing::random_log_probs(frames, vocab, engine));
          const double fwd = ethio::ctc_log_likelihood(logits, labels);
          const double bwd = ethio::ctc_log_likelihood_backward(logits, labels);
          const double brute = ethio::ctc_brute_force(logits, labels);
          ++cases;
          if (std::isinf(fwd) || std::isinf(bwd) || std::isinf(brute)) {
            out.require(fwd == brute && bwd == brute,
                        "infinite mismatch at T=" + std::to_string(frames));
            continue;
          }
          worst = std::max({worst, std::abs(fwd - brute),
                            std::abs(bwd - brute)});
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.require(cases >= 500, "only " + std::to_string(cases) + " cases");
  out.require(worst <= 1e-9, "max |diff| " + std::to_string(worst));
  out.require(elapsed < 30.0, "took " + fmt(elapsed) + " s");
  if (out.pass) {
    std::ostringstream d;
    d << cases << " cases, max |diff| " << worst << ", " << fmt(elapsed)
      << " s";
    out.detail = d.str();
  }
  return out;
}

// --- 2 ---------------------------------------------------------------------

Outcome edit_distance_oracle() {
  Outcome out;
  const auto seqs = ethio::testing::all_sequences(3, 4);
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  for (const auto& ref : seqs) {
    for (const auto& hyp : seqs) {
      const auto oracle = ethio::testing::enumerate_alignments(ref, hyp);
      const auto got = ethio::edit_distance<int>(ref, hyp);
      ++pairs;
      if (got.substitutions != oracle.subs || got.deletions != oracle.dels ||
          got.insertions != oracle.ins) {
        ++mismatches;
      }
    }
  }
  out.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (out.pass) out.detail = std::to_string(pairs) + " pairs, 0 mismatches";
  return out;
}

// --- 3 ---------------------------------------------------------------------

std::string fuzz_line(std::mt19937_64& engine, bool geez) {
  static const std::vector<std::string> geez_pool = {
      "ሀ", "ሐ", "ኀ", "ሑ", "ኅ", "ሰ", "ሠ", "ሡ", "አ", "ዐ", "ዑ", "ጸ", "ፀ",
      "ፁ", "ለ", "ላ", "ም", "ነ", "ው", "።", "፡", "፣", "፤", "፩", "፲"};
  static const std::vector<std::string> latin_pool = {
      "a",  "aa", "e", "ee", "i", "o", "oo", "u", "b", "bb", "d", "dh",
      "dhdh", "sh", "shsh", "ch", "ny", "ts", "ph", "m", "mm", "n", "q",
      "A", "O", "SH", "'", "’", "ʼ", "-", "é", "é", "x", "g"};
  static const std::vector<std::string> shared = {
      " ", "  ", "\t", ",", ".", "!", "?", "\"", "(", ")", "0", "7", "k"};
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> which(0, 9);
  const auto& pool = geez ? geez_pool : latin_pool;
  std::string line;
  const int n = len(engine);
  for (int i = 0; i < n; ++i) {
    if (which(engine) < 7) {
      line += pool[std::uniform_int_distribution<std::size_t>(
          0, pool.size() - 1)(engine)];
    } else {
      line += shared[std::uniform_int_distribution<std::size_t>(
          0, shared.size() - 1)(engine)];
    }
  }
  return line;
}

Outcome normalization() {
  using ethio::Language;
  using ethio::NormalizationConfig;
  using ethio::NormPreset;
  Outcome out;
  const NormPreset presets[] = {NormPreset::kNone,     NormPreset::kEval,
                                NormPreset::kVowel,    NormPreset::kGeminate,
                                NormPreset::kBoth,     NormPreset::kFull};
  std::mt19937_64 engine(7);
  std::size_t checks = 0;
  for (bool geez : {true, false}) {
    std::vector<std::string> corpus;
    for (int i = 0; i < 1000; ++i) corpus.push_back(fuzz_line(engine, geez));
    const Language langs[] = {geez ? Language::kAmh : Language::kOrm,
                              geez ? Language::kTir : Language::kWal};
    for (NormPreset preset : presets) {
      const auto cfg = NormalizationConfig::preset(preset);
      for (Language lang : langs) {
        for (const std::string& line : corpus) {
          const std::string once = ethio::apply_pipeline(line, lang, cfg);
          const std::string twice = ethio::apply_pipeline(once, lang, cfg);
          ++checks;
          out.require(once == twice,
                      "not idempotent under " +
                          std::string(ethio::norm_preset_name(preset)) +
                          " on '" + line + "'");
        }
      }
    }
  }
  const auto& digraphs = NormalizationConfig{}.digraphs;
  out.require(ethio::collapse_vowels("hoomaa", digraphs) == "homa",
              "hoomaa -> " + ethio::collapse_vowels("hoomaa", digraphs));
  out.require(ethio::collapse_geminates("sammuu", digraphs) == "samuu",
              "sammuu -> " + ethio::collapse_geminates("sammuu", digraphs));
  for (NormPreset preset : presets) {
    const std::string norm = ethio::apply_pipeline(
        "Baay’ee, ka'aa!", Language::kSid, NormalizationConfig::preset(preset));
    out.require(norm.find('\'') != std::string::npos,
                "apostrophe lost: '" + norm + "'");
  }
  if (out.pass) {
    out.detail = std::to_string(checks) +
                 " idempotence checks over 2 x 1000 lines; minimal pairs "
                 "exact; apostrophes kept";
  }
  return out;
}

// --- 4 ---------------------------------------------------------------------

Outcome condition_ordering() {
  using ethio::NormPreset;
  Outcome out;
  const auto suite = ethio::testing::minimal_pair_suite();
  auto wer_under = [&](NormPreset preset) {
    return *ethio::evaluate_run(suite.manifest, suite.hyps,
                                ethio::NormalizationConfig::preset(preset), {})
                .micro.wer;
  };
  const double plain = wer_under(NormPreset::kEval);
  const double vowel = wer_under(NormPreset::kVowel);
  const double geminate = wer_under(NormPreset::kGeminate);
  const double both = wer_under(NormPreset::kBoth);
  out.require(plain > vowel && plain > geminate,
              "no-norm not above single-norm");
  out.require(vowel > both && geminate > both, "single-norm not above both");
  out.require(both == 0.0, "WER(both) = " + std::to_string(both));
  if (out.pass) {
    out.detail = "WER " + fmt(plain, 2) + " > vowel " + fmt(vowel, 2) +
                 " / geminate " + fmt(geminate, 2) + " > both " +
                 fmt(both, 2);
  }
  return out;
}

// --- 5 ---------------------------------------------------------------------

bool same_bits(double a, double b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

bool bit_identical(const ethio::BootstrapResult& x,
                   const ethio::BootstrapResult& y) {
  auto same_interval = [](const ethio::IntervalEstimate& a,
                          const ethio::IntervalEstimate& b) {
    return same_bits(a.mean, b.mean) && same_bits(a.ci_low, b.ci_low) &&
           same_bits(a.ci_high, b.ci_high) &&
           same_bits(a.half_width, b.half_width);
  };
  return same_bits(x.mean_diff, y.mean_diff) &&
         same_bits(x.ci_low, y.ci_low) && same_bits(x.ci_high, y.ci_high) &&
         same_bits(x.half_width, y.half_width) &&
         same_bits(x.p_value, y.p_value) && x.n_resamples == y.n_resamples &&
         x.n_utterances == y.n_utterances && x.seed == y.seed &&
         same_interval(x.system_a, y.system_a) &&
         same_interval(x.system_b, y.system_b);
}

Outcome bootstrap() {
  Outcome out;
  std::mt19937_64 engine(99);
  std::uniform_int_distribution<std::size_t> len(1, 25);
  std::vector<ethio::ScoredPair> a(300), b(300);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].utterance_id = b[i].utterance_id = "u" + std::to_string(i);
    a[i].ref_len = b[i].ref_len = len(engine);
    a[i].counts.substitutions = len(engine) % (a[i].ref_len + 1);
    b[i].counts.deletions = len(engine) % (b[i].ref_len + 1);
  }
  const auto same = ethio::paired_bootstrap(a, a, 1000, 5);
  out.require(same.p_value == 1.0, "identical p = " +
                                       std::to_string(same.p_value));
  out.require(same.mean_diff == 0.0,
              "identical mean_diff = " + std::to_string(same.mean_diff));

  const auto reference = ethio::paired_bootstrap(a, b, 1000, 1234, 1);
  for (unsigned workers : {1u, 2u, 3u, 4u, 8u, 0u}) {
    for (int run = 0; run < 2; ++run) {
      out.require(bit_identical(reference,
                                ethio::paired_bootstrap(a, b, 1000, 1234,
                                                        workers)),
                  "differs with " + std::to_string(workers) + " workers");
    }
  }
  out.require(ethio::format_ci(36.77, 1.21) == "36.77 ± 1.21",
              "format gives " + ethio::format_ci(36.77, 1.21));
  const std::string rendered = ethio::format_ci(reference.system_a.mean,
                                                reference.system_a.half_width);
  out.require(rendered.find(" ± ") != std::string::npos,
              "rendered '" + rendered + "'");
  if (out.pass) {
    out.detail = "p(A=A) = 1, bit-identical over 6 worker settings, e.g. \"" +
                 rendered + "\"";
  }
  return out;
}

// --- 6 ---------------------------------------------------------------------

Outcome checkpoint() {
  Outcome out;
  std::mt19937_64 engine(6);
  std::uniform_real_distribution<double> rate(0.0, 150.0);
  for (int i = 0; i < 100; ++i) {
    const double w = rate(engine);
    const double c = rate(engine);
    out.require(ethio::checkpoint_score(w, c) == 0.5 * w + 0.5 * c,
                "mismatch at pair " + std::to_string(i));
  }
  out.require(ethio::checkpoint_score(30.0, 10.0) == 20.0, "30/10 != 20");
  if (out.pass) out.detail = "100 random pairs exact";
  return out;
}

// --- 7 ---------------------------------------------------------------------

Outcome durations() {
  Outcome out;
  const json expected = load_json(fixture("expected.json"))["durations_hours"];
  const auto table =
      ethio::duration_report(ethio::load_manifest(fixture("manifest.jsonl")));
  const json report = json::parse(ethio::duration_report_json(table));
  std::size_t cells = 0;
  std::size_t zero_cells = 0;
  for (auto lang : ethio::kAllLanguages) {
    for (auto split : ethio::kAllSplits) {
      const std::string key = std::string(ethio::language_code(lang)) + "/" +
                              std::string(ethio::split_name(split));
      const json& want = expected.at(key);
      const json& got = report["splits"][std::string(ethio::split_name(split))]
                              [std::string(ethio::language_code(lang))];
      for (const char* g : {"M", "F", "unknown", "All"}) {
        ++cells;
        const double w = want.at(g).get<double>();
        if (w == 0.0) ++zero_cells;
        out.require(std::abs(got.at(g).get<double>() - w) <= 0.01 + 1e-12,
                    key + "/" + g + " = " + got.at(g).dump() + ", want " +
                        want.at(g).dump());
      }
    }
  }
  const std::string csv = ethio::duration_report_csv(table);
  out.require(csv.find("test,M,") != std::string::npos, "CSV lacks test,M");
  out.require(ethio::format_fixed2(table.hours(ethio::Language::kWal,
                                               ethio::Split::kTest,
                                               ethio::Gender::kMale)) ==
                  "0.00",
              "WAL/test/M not 0.00");
  if (out.pass) {
    out.detail = std::to_string(cells) + " cells within 0.01 h, " +
                 std::to_string(zero_cells) + " empty strata at 0.00";
  }
  return out;
}

// --- 8 ---------------------------------------------------------------------

void compare_value(Outcome& out, const std::string& where,
                   const json& expected, const std::optional<double>& got) {
  if (expected.is_null()) {
    out.require(!got.has_value(), where + " should be null");
  } else {
    out.require(got.has_value(), where + " missing");
    if (got) {
      out.require(std::abs(*got - expected.get<double>()) <= 1e-9,
                  where + " = " + std::to_string(*got) + ", want " +
                      expected.dump());
    }
  }
}

void compare_row(Outcome& out, const std::string& where, const json& want,
                 const ethio::ReportRow& row, bool full) {
  compare_value(out, where + ".wer", want["wer"], row.wer);
  compare_value(out, where + ".cer", want["cer"], row.cer);
  compare_value(out, where + ".lid_acc", want["lid_acc"], row.lid_acc);
  compare_value(out, where + ".checkpoint_score", want["checkpoint_score"],
                row.checkpoint_score);
  if (!full) return;
  compare_value(out, where + ".male_wer", want["male_wer"], row.male_wer);
  compare_value(out, where + ".female_wer", want["female_wer"],
                row.female_wer);
  compare_value(out, where + ".delta", want["delta"], row.delta);
  out.require(row.n_utts == want["n_utts"].get<std::size_t>(),
              where + ".n_utts");
  out.require(row.ref_words == want["ref_words"].get<std::size_t>(),
              where + ".ref_words");
  out.require(row.ref_chars == want["ref_chars"].get<std::size_t>(),
              where + ".ref_chars");
  out.require(row.word_errors.total() == want["word_errors"].get<std::size_t>(),
              where + ".word_errors");
  out.require(row.char_errors.total() == want["char_errors"].get<std::size_t>(),
              where + ".char_errors");
  out.require(row.n_male == want["n_male"].get<std::size_t>() &&
                  row.n_female == want["n_female"].get<std::size_t>() &&
                  row.n_unknown == want["n_unknown"].get<std::size_t>(),
              where + " gender counts");
}

Outcome end_to_end() {
  Outcome out;
  const json expected = load_json(fixture("expected.json"));
  const auto manifest = ethio::load_manifest(fixture("manifest.jsonl"));
  const auto hyps_a = ethio::load_hypotheses(fixture("hyps_a.jsonl"));
  const auto hyps_b = ethio::load_hypotheses(fixture("hyps_b.jsonl"));
  out.require(manifest.size() == 50, "fixture has " +
                                         std::to_string(manifest.size()) +
                                         " utterances");
  const auto cfg =
      ethio::NormalizationConfig::preset(ethio::NormPreset::kEval);
  std::size_t compared = 0;
  for (const auto& [name, hyps] :
       {std::pair{"system_a", &hyps_a}, std::pair{"system_b", &hyps_b}}) {
    const json& want = expected[name];
    std::string first_json;
    for (unsigned workers : {1u, 4u}) {
      ethio::EvalOptions options;
      options.workers = workers;
      const auto report = ethio::evaluate_run(manifest, *hyps, cfg, options);
      out.require(report.languages.size() == want["languages"].size(),
                  std::string(name) + " language count");
      for (const auto& row : report.languages) {
        compare_row(out, std::string(name) + "." + row.label,
                    want["languages"][row.label], row, true);
        ++compared;
      }
      compare_row(out, std::string(name) + ".micro", want["micro"],
                  report.micro, true);
      compare_row(out, std::string(name) + ".macro", want["macro"],
                  report.macro, false);
      // Signed gender gap rendering.
      for (const auto& row : report.languages) {
        if (row.delta) {
          const std::string s = ethio::format_signed(*row.delta);
          out.require(s == "0.00" || s[0] == '+' || s[0] == '-',
                      "delta rendering " + s);
        }
      }
      const std::string rendered = ethio::eval_report_json(report, true) +
                                   ethio::gender_report_json(report);
      if (first_json.empty()) {
        first_json = rendered;
      } else {
        out.require(rendered == first_json,
                    std::string(name) + " JSON not byte-identical");
      }
    }
  }
  ethio::CompareOptions copts;
  copts.n_resamples = 1000;
  copts.seed = 17;
  const auto cmp1 = ethio::compare_report_json(
      ethio::compare_runs(manifest, hyps_a, hyps_b, cfg, copts));
  copts.eval.workers = 3;
  const auto cmp2 = ethio::compare_report_json(
      ethio::compare_runs(manifest, hyps_a, hyps_b, cfg, copts));
  out.require(cmp1 == cmp2, "compare JSON not deterministic");
  const auto cmp_self = ethio::compare_runs(manifest, hyps_a, hyps_a, cfg, copts);
  out.require(cmp_self.overall.p_value == 1.0, "A vs A p != 1");
  for (const auto& [lang, r] : cmp_self.languages) {
    out.require(r.p_value == 1.0, "A vs A p != 1 for " +
                                      std::string(ethio::language_code(lang)));
  }
  if (out.pass) {
    out.detail = std::to_string(compared / 2) +
                 " language rows + micro/macro match the independent scorer; "
                 "reports byte-identical";
  }
  return out;
}

// --- 9 ---------------------------------------------------------------------

Outcome lexstats() {
  Outcome out;
  std::size_t points = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto tokens =
        ethio::testing::zipf_stream(100000, 20000, 1.07, seed);
    const auto curve = ethio::vocab_growth(tokens, 2500);
    std::vector<std::size_t> checkpoints;
    for (const auto& p : curve.points) checkpoints.push_back(p.tokens);
    const auto recount = ethio::testing::recount_types(tokens, checkpoints);
    for (std::size_t i = 0; i < recount.size(); ++i) {
      ++points;
      out.require(curve.points[i].types == recount[i],
                  "growth mismatch at " + std::to_string(checkpoints[i]));
      const double ttr = ethio::ttr_at(tokens, checkpoints[i]);
      out.require(ttr == double(recount[i]) / double(checkpoints[i]),
                  "ttr mismatch at " + std::to_string(checkpoints[i]));
    }
  }
  std::mt19937_64 engine(100);
  for (int fuzz = 0; fuzz < 100; ++fuzz) {
    auto tokens = ethio::testing::zipf_stream(3000, 400, 1.0, engine());
    std::uniform_int_distribution<std::size_t> pick(1, tokens.size());
    std::size_t n1 = pick(engine);
    std::size_t n2 = pick(engine);
    if (n1 > n2) std::swap(n1, n2);
    const double t1 = ethio::ttr_at(tokens, n1);
    const double t2 = ethio::ttr_at(tokens, n2);
    out.require(std::llround(t2 * double(n2)) >= std::llround(t1 * double(n1)),
                "type count decreased with budget");
    std::shuffle(tokens.begin(), tokens.begin() + static_cast<long>(n2),
                 engine);
    out.require(ethio::ttr_at(tokens, n2) == t2,
                "permutation changed ttr at " + std::to_string(n2));
  }
  if (out.pass) {
    out.detail = std::to_string(points) +
                 " growth/TTR points on 3 x 1e5-token streams; 100 fuzz "
                 "cases";
  }
  return out;
}

// --- 10 --------------------------------------------------------------------

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun cli(const fs::path& work, const std::vector<std::string>& args) {
  std::string cmd = quote(ETHIO_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  const fs::path out = work / "stdout.txt";
  const fs::path err = work / "stderr.txt";
  cmd += " > " + quote(out.string()) + " 2> " + quote(err.string());
  CliRun run;
  const int raw = std::system(cmd.c_str());
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  run.out = slurp(out);
  run.err = slurp(err);
  return run;
}

bool valid_csv(const std::string& text, const std::string& header_prefix) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind(header_prefix, 0) != 0) {
    return false;
  }
  auto columns = [](const std::string& l) {
    std::size_t n = 1;
    bool quoted = false;
    for (char c : l) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++n;
    }
    return n;
  };
  const std::size_t width = columns(line);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (columns(line) != width) return false;
    ++rows;
  }
  return rows > 0;
}

bool has_keys(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) return false;
  for (const char* k : keys) {
    if (!j.contains(k)) return false;
  }
  return true;
}

Outcome cli_smoke() {
  Outcome out;
  const auto start = Clock::now();
  const fs::path work = fs::temp_directory_path() /
                        ("ethio_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(work);
  const std::string manifest = fixture("manifest.jsonl");
  const std::string hyp_a = fixture("hyps_a.jsonl");
  const std::string hyp_b = fixture("hyps_b.jsonl");
  const std::string vocab = (work / "vocab.txt").string();
  std::size_t commands = 0;

  auto expect_ok = [&](const std::string& name, const CliRun& r) {
    ++commands;
    out.require(r.status == 0, name + " exited " + std::to_string(r.status) +
                                   ": " + r.err);
    return r.status == 0;
  };
  auto expect_json = [&](const std::string& name, const CliRun& r,
                         std::initializer_list<const char*> keys) {
    if (!expect_ok(name, r)) return json();
    json j = json::parse(r.out, nullptr, false);
    out.require(!j.is_discarded(), name + " printed invalid JSON");
    if (!j.is_discarded() && keys.size() > 0) {
      out.require(has_keys(j, keys), name + " JSON lacks required keys");
    }
    return j;
  };
  auto expect_csv = [&](const std::string& name, const CliRun& r,
                        const std::string& header) {
    if (expect_ok(name, r)) {
      out.require(valid_csv(r.out, header), name + " printed malformed CSV");
    }
  };

  out.require(cli(work, {"vocab", "build", "--manifest", manifest, "-o",
                         vocab}).status == 0,
              "vocab build failed");
  ++commands;
  out.require(fs::exists(vocab), "vocab build wrote nothing");
  const json inspect = expect_json(
      "vocab inspect", cli(work, {"vocab", "inspect", vocab}),
      {"size", "blank_id", "lid_ids", "unk_id"});
  if (inspect.is_object()) {
    out.require(inspect["size"].get<int>() >= 412, "vocab smaller than 412");
  }
  expect_csv("vocab inspect csv",
             cli(work, {"vocab", "inspect", vocab, "--format", "csv"}),
             "id,symbol");

  const json enc = expect_json(
      "encode", cli(work, {"encode", "--vocab", vocab, "--lang", "AMH",
                           "ሰላም ነው"}),
      {});
  if (enc.is_array() && !enc.empty()) {
    out.require(enc[0]["ids"].size() == 7, "encode length");
  }

  // Logits that spell [AMH] ሰላም with one blank between frames.
  const auto v = ethio::load_vocab(vocab);
  std::vector<int> path = {v.lid_id(ethio::Language::kAmh), 0,
                           *v.find("ሰ"), *v.find("ላ"), 0, *v.find("ም")};
  std::vector<double> probs(path.size() * v.size(), 0.1 / double(v.size()));
  for (std::size_t t = 0; t < path.size(); ++t) {
    probs[t * v.size() + path[t]] += 0.9;
  }
  const std::string logits = (work / "logits.bin").string();
  ethio::save_logits(
      logits, ethio::LogitMatrix::from_probabilities(path.size(), v.size(),
                                                     probs),
      true);
  const json dec = expect_json(
      "decode-logits", cli(work, {"decode-logits", "--vocab", vocab, logits}),
      {"lang", "text", "ids", "misplaced_lid"});
  if (dec.is_object()) {
    out.require(dec["lang"] == "AMH" && dec["text"] == "ሰላም",
                "decode-logits gave " + dec.dump());
  }
  const json loss = expect_json(
      "ctc-loss", cli(work, {"ctc-loss", logits, "--vocab", vocab, "--lang",
                             "AMH", "--text", "ሰላም"}),
      {"log_likelihood", "loss"});
  if (loss.is_object()) {
    out.require(loss["loss"].is_number() && loss["loss"].get<double>() > 0,
                "ctc-loss not positive");
  }

  const auto norm = cli(work, {"normalize", "--lang", "ORM", "--norm", "both",
                               "Hoomaa sammuu baay'ee!"});
  if (expect_ok("normalize", norm)) {
    out.require(norm.out == "homa samu bay'e\n", "normalize gave " + norm.out);
  }

  const json eval = expect_json(
      "evaluate", cli(work, {"evaluate", "--manifest", manifest, "--hyp",
                             hyp_a, "--workers", "2"}),
      {"normalization", "split", "languages", "micro", "macro"});
  if (eval.is_object()) {
    const json expected = load_json(fixture("expected.json"));
    for (const auto& row : eval["languages"]) {
      const json& want =
          expected["system_a"]["languages"][row["language"].get<std::string>()];
      out.require(std::abs(row["wer"].get<double>() -
                           want["wer"].get<double>()) <= 1e-9,
                  "CLI evaluate WER mismatch for " + row["language"].dump());
    }
  }
  expect_csv("evaluate csv",
             cli(work, {"evaluate", "--manifest", manifest, "--hyp", hyp_b,
                        "--format", "csv", "--norm", "full"}),
             "language,wer,cer");
  expect_json("compare",
              cli(work, {"compare", "--manifest", manifest, "--hyp", hyp_a,
                         "--hyp-b", hyp_b, "--bootstrap-n", "500", "--seed",
                         "3", "--workers", "2"}),
              {"languages", "overall"});
  expect_csv("compare csv",
             cli(work, {"compare", "--manifest", manifest, "--hyp", hyp_a,
                        "--hyp-b", hyp_b, "--bootstrap-n", "200", "--format",
                        "csv"}),
             "language,");
  expect_json("gender-report",
              cli(work, {"gender-report", "--manifest", manifest, "--hyp",
                         hyp_a}),
              {"languages", "overall"});
  expect_csv("gender-report csv",
             cli(work, {"gender-report", "--manifest", manifest, "--hyp",
                        hyp_a, "--format", "csv"}),
             "language,");
  expect_json("duration-report",
              cli(work, {"duration-report", "--manifest", manifest}),
              {"unit", "splits"});
  expect_csv("duration-report csv",
             cli(work, {"duration-report", "--manifest", manifest,
                        "--format", "csv"}),
             "split,gender,AMH,TIR,ORM,SID,WAL");
  expect_csv("lexstats growth",
             cli(work, {"lexstats", "growth", "--manifest", manifest,
                        "--lang", "ORM", "--step", "5"}),
             "tokens,types");
  expect_json("lexstats ttr",
              cli(work, {"lexstats", "ttr", "--manifest", manifest, "--lang",
                         "AMH", "--budget", "10"}),
              {"language", "budget", "ttr"});
  const std::string converted = (work / "from_csv.jsonl").string();
  if (expect_ok("manifest-from-csv",
                cli(work, {"manifest-from-csv", fixture("manifest.csv"), "-o",
                           converted}))) {
    const auto a = ethio::load_manifest(converted);
    const auto b = ethio::load_manifest(manifest);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].id == b[i].id && a[i].text == b[i].text &&
             a[i].duration_s == b[i].duration_s;
    }
    out.require(same, "CSV conversion differs from the JSONL manifest");
  }

  // Environment data root and error exit codes.
  ::setenv("ETHIO_EVAL_DATA", ETHIO_FIXTURE_DIR, 1);
  expect_ok("ETHIO_EVAL_DATA",
            cli(work, {"duration-report", "--manifest", "manifest.jsonl"}));
  ::unsetenv("ETHIO_EVAL_DATA");
  const auto missing =
      cli(work, {"duration-report", "--manifest", "/nonexistent.jsonl"});
  out.require(missing.status == 2,
              "missing file exit " + std::to_string(missing.status));
  const auto bad_flag = cli(work, {"evaluate", "--manifest", manifest,
                                    "--hyp", hyp_a, "--split", "validation",
                                    "--strict-nonexistent-flag"});
  out.require(bad_flag.status == 1,
              "bad flag exit " + std::to_string(bad_flag.status));
  const std::string partial = (work / "partial.jsonl").string();
  std::ofstream(partial) << R"({"id":"amh_000","text":"x"})" << '\n';
  const auto wrong_hyps =
      cli(work, {"evaluate", "--manifest", manifest, "--hyp", partial});
  out.require(wrong_hyps.err.find("amh_001") != std::string::npos,
              "missing ids not listed: " + wrong_hyps.err);
  out.require(wrong_hyps.status == 1,
              "mismatched ids exit " + std::to_string(wrong_hyps.status));

  const double elapsed = seconds_since(start);
  out.require(elapsed < 60.0, "took " + fmt(elapsed) + " s");
  fs::remove_all(work);
  if (out.pass) {
    out.detail = std::to_string(commands) + " invocations exit 0 with valid "
                 "output; exit codes 1/2 checked; " + fmt(elapsed) + " s";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {{"AC1  CTC forward/backward equal path enumeration", ctc_oracle},
       {"AC2  edit distance equals alignment enumeration", edit_distance_oracle},
       {"AC3  normalization idempotence and minimal pairs", normalization},
       {"AC4  normalization condition ordering", condition_ordering},
       {"AC5  bootstrap determinism and calibration", bootstrap},
       {"AC6  checkpoint score", checkpoint},
       {"AC7  duration report", durations},
       {"AC8  end-to-end fixture scores", end_to_end},
       {"AC9  vocabulary growth and TTR", lexstats},
       {"AC10 command-line smoke", cli_smoke}};
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome result;
    try {
      result = check();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << name << " -- "
              << result.detail << std::endl;
    if (!result.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
