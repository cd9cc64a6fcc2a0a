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

// Command-line front end: vocabulary, CTC, normalization, scoring and
// corpus reports. Exit status is 0 on success, 1 on invalid input and 2 on
// I/O failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ethio/ctc.h"
#include "ethio/error.h"
#include "ethio/evaluate.h"
#include "ethio/lexstats.h"
#include "ethio/logit_io.h"
#include "ethio/manifest.h"
#include "ethio/normalize.h"
#include "ethio/report.h"
#include "ethio/unicode.h"
#include "ethio/vocab.h"
#include "json.hpp"

namespace {

using ethio::IoError;
using ethio::ValidationError;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + out_path + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + out_path + "'");
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(ethio::resolve_data_path(path), std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<ethio::Utterance> manifest_from(const std::string& path) {
  return ethio::load_manifest(ethio::resolve_data_path(path));
}

std::vector<ethio::HypothesisRecord> hyps_from(const std::string& path) {
  return ethio::load_hypotheses(ethio::resolve_data_path(path));
}

std::optional<ethio::Split> split_from(const std::string& name) {
  if (name == "all") return std::nullopt;
  auto split = ethio::parse_split(name);
  if (!split) throw ValidationError("unknown split '" + name + "'");
  return split;
}

struct NormOptions {
  std::string preset = "eval";
  std::string homophones;
  std::string digraphs;

  void add_to(CLI::App* app) {
    app->add_option("--norm", preset, "Normalization preset")
        ->check(CLI::IsMember({"none", "eval", "vowel", "geminate", "both",
                               "full"}))
        ->capture_default_str();
    app->add_option("--homophones", homophones,
                    "Homophone map TSV replacing the built-in table");
    app->add_option("--digraphs", digraphs,
                    "Digraph list replacing the built-in set");
  }

  ethio::NormalizationConfig config() const {
    auto cfg =
        ethio::NormalizationConfig::preset(ethio::parse_norm_preset(preset));
    if (!homophones.empty()) {
      cfg.homophone_map =
          ethio::load_homophone_map(ethio::resolve_data_path(homophones));
    }
    if (!digraphs.empty()) {
      cfg.digraphs = ethio::prepare_digraphs(
          ethio::load_digraphs(ethio::resolve_data_path(digraphs)));
    }
    return cfg;
  }
};

struct EvalArgs {
  std::string manifest;
  std::string hyp;
  std::string split = "test";
  unsigned workers = 1;
  bool no_space_in_cer = false;
  NormOptions norm;

  void add_to(CLI::App* app) {
    app->add_option("--manifest", manifest, "Reference manifest (JSON Lines)")
        ->required();
    app->add_option("--hyp", hyp, "Hypotheses (JSON Lines)")->required();
    app->add_option("--split", split, "Split to score, or 'all'")
        ->check(CLI::IsMember({"train", "validation", "test", "all"}))
        ->capture_default_str();
    app->add_option("--workers", workers, "Scoring threads, 0 = all cores")
        ->capture_default_str();
    app->add_flag("--no-space-in-cer", no_space_in_cer,
                  "Exclude internal spaces from CER");
    norm.add_to(app);
  }

  ethio::EvalOptions options() const {
    ethio::EvalOptions opts;
    opts.split = split_from(split);
    opts.workers = workers;
    opts.count_spaces_in_cer = !no_space_in_cer;
    opts.norm_label = norm.preset;
    return opts;
  }
};

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_output(CLI::App* app, std::string& path) {
  app->add_option("-o,--output", path, "Output file (default stdout)");
}

ethio::Language language_arg(const std::string& code) {
  return ethio::require_language(code);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string ids_text(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::vector<int> parse_labels(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> ids;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw ValidationError("label '" + tok + "' is not an integer id");
    }
  }
  return ids;
}

int run(int argc, char** argv) {
  CLI::App app{"Dual-script ASR evaluation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ethio 0.1.0");

  // vocab build | inspect
  auto* vocab_cmd = app.add_subcommand("vocab", "Grapheme vocabulary");
  vocab_cmd->require_subcommand(1);
  struct {
    std::string manifest;
    std::vector<std::string> extra;
    bool no_geez = false, no_ethiopic_punct = false, no_latin = false,
         no_latin_punct = false, unk = false, strict = false;
    std::string output;
  } vb;
  auto* vocab_build = vocab_cmd->add_subcommand("build", "Build a vocabulary");
  vocab_build->add_option("--manifest", vb.manifest,
                          "Corpus whose graphemes are added to the blocks");
  vocab_build->add_option("--extra", vb.extra, "Additional symbols");
  vocab_build->add_flag("--no-geez", vb.no_geez);
  vocab_build->add_flag("--no-ethiopic-punct", vb.no_ethiopic_punct);
  vocab_build->add_flag("--no-latin", vb.no_latin);
  vocab_build->add_flag("--no-latin-punct", vb.no_latin_punct);
  vocab_build->add_flag("--unk", vb.unk, "Append an <unk> token");
  vocab_build->add_flag("--strict", vb.strict,
                        "Reject corpus graphemes outside the blocks");
  add_output(vocab_build, vb.output);

  struct {
    std::string path;
    std::string format = "json";
    std::string output;
  } vi;
  auto* vocab_inspect =
      vocab_cmd->add_subcommand("inspect", "Summarize a vocabulary file");
  vocab_inspect->add_option("vocab", vi.path)->required();
  add_format(vocab_inspect, vi.format);
  add_output(vocab_inspect, vi.output);

  // encode
  struct {
    std::string vocab, lang, input, output, format = "json";
    std::vector<std::string> text;
    bool strict = false;
  } en;
  auto* encode_cmd = app.add_subcommand("encode", "Text to CTC target ids");
  encode_cmd->add_option("--vocab", en.vocab)->required();
  encode_cmd->add_option("--lang", en.lang)->required();
  encode_cmd->add_option("--input", en.input, "One text per line");
  encode_cmd->add_option("text", en.text, "Texts to encode");
  encode_cmd->add_flag("--strict", en.strict, "Fail on unknown graphemes");
  add_format(encode_cmd, en.format);
  add_output(encode_cmd, en.output);

  // decode-logits
  struct {
    std::string vocab, logits, output, format = "json";
    bool strict = false;
  } dl;
  auto* decode_cmd =
      app.add_subcommand("decode-logits", "Greedy CTC decoding with LID");
  decode_cmd->add_option("--vocab", dl.vocab)->required();
  decode_cmd->add_option("logits", dl.logits)->required();
  decode_cmd->add_flag("--strict", dl.strict,
                       "Fail when a language token is misplaced");
  add_format(decode_cmd, dl.format);
  add_output(decode_cmd, dl.output);

  // ctc-loss
  struct {
    std::string vocab, logits, lang, text, labels, output, format = "json";
    bool brute_force = false, strict = false;
  } cl;
  auto* loss_cmd = app.add_subcommand("ctc-loss", "CTC negative log-likelihood");
  loss_cmd->add_option("logits", cl.logits)->required();
  loss_cmd->add_option("--vocab", cl.vocab);
  loss_cmd->add_option("--lang", cl.lang);
  loss_cmd->add_option("--text", cl.text, "Target text (needs --vocab, --lang)");
  loss_cmd->add_option("--labels", cl.labels, "Target ids, space separated");
  loss_cmd->add_flag("--brute-force", cl.brute_force,
                     "Also enumerate every path (small inputs only)");
  loss_cmd->add_flag("--strict", cl.strict, "Fail on unknown graphemes");
  add_format(loss_cmd, cl.format);
  add_output(loss_cmd, cl.output);

  // normalize
  struct {
    std::string lang, input, output;
    std::vector<std::string> text;
    NormOptions norm;
  } nm;
  auto* norm_cmd = app.add_subcommand("normalize", "Apply text normalization");
  norm_cmd->add_option("--lang", nm.lang)->required();
  norm_cmd->add_option("--input", nm.input, "One text per line");
  norm_cmd->add_option("text", nm.text);
  nm.norm.add_to(norm_cmd);
  add_output(norm_cmd, nm.output);

  // evaluate
  struct {
    EvalArgs args;
    std::string format = "json", output;
    bool utterances = false;
  } ev;
  auto* eval_cmd = app.add_subcommand("evaluate", "WER, CER and LID accuracy");
  ev.args.add_to(eval_cmd);
  eval_cmd->add_flag("--utterances", ev.utterances,
                     "Include per-utterance scores (JSON)");
  add_format(eval_cmd, ev.format);
  add_output(eval_cmd, ev.output);

  // compare
  struct {
    EvalArgs args;
    std::string hyp_b, format = "json", output;
    std::size_t n = ethio::kDefaultResamples;
    std::uint64_t seed = 0;
  } cp;
  auto* compare_cmd =
      app.add_subcommand("compare", "Paired bootstrap of two systems");
  cp.args.add_to(compare_cmd);
  compare_cmd->add_option("--hyp-b", cp.hyp_b, "Second system")->required();
  compare_cmd->add_option("--bootstrap-n", cp.n, "Resamples")
      ->capture_default_str();
  compare_cmd->add_option("--seed", cp.seed)->capture_default_str();
  add_format(compare_cmd, cp.format);
  add_output(compare_cmd, cp.output);

  // gender-report
  struct {
    EvalArgs args;
    std::string format = "json", output;
  } gr;
  auto* gender_cmd =
      app.add_subcommand("gender-report", "WER by speaker gender");
  gr.args.add_to(gender_cmd);
  add_format(gender_cmd, gr.format);
  add_output(gender_cmd, gr.output);

  // duration-report
  struct {
    std::string manifest, format = "json", output;
  } dr;
  auto* duration_cmd =
      app.add_subcommand("duration-report", "Audio hours per stratum");
  duration_cmd->add_option("--manifest", dr.manifest)->required();
  add_format(duration_cmd, dr.format);
  add_output(duration_cmd, dr.output);

  // lexstats growth | ttr
  struct {
    std::string manifest, input, lang, split = "all", output, format = "json";
    std::size_t step = 1000, budget = 0;
    NormOptions norm;
  } ls;
  auto* lex_cmd = app.add_subcommand("lexstats", "Lexical statistics");
  lex_cmd->require_subcommand(1);
  auto add_lex_common = [&](CLI::App* cmd) {
    cmd->add_option("--manifest", ls.manifest, "Corpus manifest");
    cmd->add_option("--input", ls.input, "Plain text, one line each");
    cmd->add_option("--lang", ls.lang)->required();
    cmd->add_option("--split", ls.split, "Manifest split, or 'all'")
        ->check(CLI::IsMember({"train", "validation", "test", "all"}))
        ->capture_default_str();
    ls.norm.add_to(cmd);
    add_output(cmd, ls.output);
  };
  auto* growth_cmd = lex_cmd->add_subcommand("growth", "Vocabulary growth CSV");
  add_lex_common(growth_cmd);
  growth_cmd->add_option("--step", ls.step, "Tokens between points")
      ->capture_default_str();
  auto* ttr_cmd = lex_cmd->add_subcommand("ttr", "Type-token ratio");
  add_lex_common(ttr_cmd);
  ttr_cmd->add_option("--budget", ls.budget, "Token budget")->required();
  add_format(ttr_cmd, ls.format);

  // manifest-from-csv
  struct {
    std::string csv, output;
  } mc;
  auto* csv_cmd = app.add_subcommand("manifest-from-csv",
                                     "Convert a CSV manifest to JSON Lines");
  csv_cmd->add_option("csv", mc.csv)->required();
  add_output(csv_cmd, mc.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (*vocab_build) {
    ethio::VocabConfig cfg;
    cfg.include_geez_core = !vb.no_geez;
    cfg.include_ethiopic_punct_numerals = !vb.no_ethiopic_punct;
    cfg.include_latin_letters = !vb.no_latin;
    cfg.include_latin_punct_numerals = !vb.no_latin_punct;
    cfg.include_unk = vb.unk;
    cfg.strict_unknowns = vb.strict;
    cfg.extra_symbols = vb.extra;
    std::vector<ethio::CorpusLine> corpus;
    if (!vb.manifest.empty()) {
      for (const auto& u : manifest_from(vb.manifest)) {
        corpus.push_back({u.language, u.text});
      }
    }
    std::ostringstream out;
    ethio::write_vocab(out, ethio::build_vocab(cfg, corpus));
    emit(vb.output, out.str());
  } else if (*vocab_inspect) {
    const auto vocab = ethio::load_vocab(ethio::resolve_data_path(vi.path));
    std::size_t geez = 0, latin = 0, other = 0;
    for (std::size_t id = 0; id < vocab.size(); ++id) {
      const std::string& sym = vocab.symbol(static_cast<int>(id));
      if (id == 0 || vocab.is_lid(static_cast<int>(id))) continue;
      const auto cps = ethio::unicode::decode_utf8(sym);
      if (cps.size() == 1 && ethio::unicode::is_ethiopic(cps[0])) {
        ++geez;
      } else if (cps.size() == 1 && ethio::unicode::is_latin(cps[0])) {
        ++latin;
      } else {
        ++other;
      }
    }
    if (vi.format == "json") {
      ojson j;
      j["size"] = vocab.size();
      j["blank_id"] = vocab.blank_id();
      ojson lids;
      for (auto lang : ethio::kAllLanguages) {
        lids[ethio::lid_token(lang)] = vocab.lid_id(lang);
      }
      j["lid_ids"] = lids;
      if (vocab.unk_id()) {
        j["unk_id"] = *vocab.unk_id();
      } else {
        j["unk_id"] = nullptr;
      }
      j["ethiopic_symbols"] = geez;
      j["latin_letters"] = latin;
      j["other_symbols"] = other;
      emit(vi.output, j.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "id,symbol\n";
      for (std::size_t id = 0; id < vocab.size(); ++id) {
        out << id << ',' << csv_quote(vocab.symbol(static_cast<int>(id)))
            << '\n';
      }
      emit(vi.output, out.str());
    }
  } else if (*encode_cmd) {
    const auto vocab = ethio::load_vocab(ethio::resolve_data_path(en.vocab));
    const auto lang = language_arg(en.lang);
    std::vector<std::string> texts = en.text;
    if (!en.input.empty()) {
      for (auto& line : read_lines(en.input)) texts.push_back(std::move(line));
    }
    if (texts.empty()) throw ValidationError("encode: no input text");
    ojson rows = ojson::array();
    std::ostringstream csv;
    csv << "text,ids\n";
    for (const auto& text : texts) {
      const auto labels =
          ethio::encode_target(text, lang, vocab, en.strict).labels();
      rows.push_back({{"text", text}, {"ids", labels}});
      csv << csv_quote(text) << ',' << ids_text(labels) << '\n';
    }
    emit(en.output, en.format == "json" ? rows.dump(2) + "\n" : csv.str());
  } else if (*decode_cmd) {
    const auto vocab = ethio::load_vocab(ethio::resolve_data_path(dl.vocab));
    const auto logits = ethio::load_logits(ethio::resolve_data_path(dl.logits));
    const auto result = ethio::greedy_decode(logits, vocab);
    if (dl.strict && result.misplaced_lid) {
      throw ValidationError("decoded path has a language token after the "
                            "first position");
    }
    const std::string lang =
        result.lang ? std::string(ethio::language_code(*result.lang)) : "";
    if (dl.format == "json") {
      ojson j;
      if (result.lang) {
        j["lang"] = lang;
      } else {
        j["lang"] = nullptr;
      }
      j["text"] = result.text;
      j["ids"] = result.raw_ids;
      j["misplaced_lid"] = result.misplaced_lid;
      emit(dl.output, j.dump(2) + "\n");
    } else {
      emit(dl.output, "lang,text,ids,misplaced_lid\n" + lang + "," +
                          csv_quote(result.text) + "," +
                          ids_text(result.raw_ids) + "," +
                          (result.misplaced_lid ? "true" : "false") + "\n");
    }
  } else if (*loss_cmd) {
    const auto logits = ethio::load_logits(ethio::resolve_data_path(cl.logits));
    std::vector<int> labels;
    if (!cl.text.empty()) {
      if (cl.vocab.empty() || cl.lang.empty()) {
        throw ValidationError("ctc-loss: --text needs --vocab and --lang");
      }
      const auto vocab = ethio::load_vocab(ethio::resolve_data_path(cl.vocab));
      labels = ethio::encode_target(cl.text, language_arg(cl.lang), vocab,
                                    cl.strict)
                   .labels();
    } else if (!cl.labels.empty()) {
      labels = parse_labels(cl.labels);
    } else {
      throw ValidationError("ctc-loss: give --text or --labels");
    }
    const double ll = ethio::ctc_log_likelihood(logits, labels);
    std::optional<double> brute;
    if (cl.brute_force) brute = ethio::ctc_brute_force(logits, labels);
    if (cl.format == "json") {
      // An impossible target is reported as null.
      auto finite_or_null = [](double v) -> ojson {
        return std::isfinite(v) ? ojson(v) : ojson(nullptr);
      };
      ojson j;
      j["frames"] = logits.frames();
      j["vocab_size"] = logits.vocab_size();
      j["labels"] = labels;
      j["log_likelihood"] = finite_or_null(ll);
      j["loss"] = finite_or_null(-ll);
      if (brute) {
        j["brute_force_log_likelihood"] = finite_or_null(*brute);
      }
      emit(cl.output, j.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out.precision(17);
      out << "frames,vocab_size,log_likelihood,loss";
      if (brute) out << ",brute_force_log_likelihood";
      out << '\n'
          << logits.frames() << ',' << logits.vocab_size() << ',' << ll << ','
          << -ll;
      if (brute) out << ',' << *brute;
      out << '\n';
      emit(cl.output, out.str());
    }
  } else if (*norm_cmd) {
    const auto lang = language_arg(nm.lang);
    const auto cfg = nm.norm.config();
    std::vector<std::string> texts = nm.text;
    if (!nm.input.empty()) {
      for (auto& line : read_lines(nm.input)) texts.push_back(std::move(line));
    }
    std::string out;
    for (const auto& text : texts) {
      out += ethio::apply_pipeline(text, lang, cfg) + "\n";
    }
    emit(nm.output, out);
  } else if (*eval_cmd) {
    const auto report = ethio::evaluate_run(
        manifest_from(ev.args.manifest), hyps_from(ev.args.hyp),
        ev.args.norm.config(), ev.args.options());
    emit(ev.output, ev.format == "json"
                        ? ethio::eval_report_json(report, ev.utterances)
                        : ethio::eval_report_csv(report));
  } else if (*compare_cmd) {
    ethio::CompareOptions opts;
    opts.eval = cp.args.options();
    opts.n_resamples = cp.n;
    opts.seed = cp.seed;
    const auto report = ethio::compare_runs(
        manifest_from(cp.args.manifest), hyps_from(cp.args.hyp),
        hyps_from(cp.hyp_b), cp.args.norm.config(), opts);
    emit(cp.output, cp.format == "json" ? ethio::compare_report_json(report)
                                        : ethio::compare_report_csv(report));
  } else if (*gender_cmd) {
    const auto report = ethio::evaluate_run(
        manifest_from(gr.args.manifest), hyps_from(gr.args.hyp),
        gr.args.norm.config(), gr.args.options());
    emit(gr.output, gr.format == "json" ? ethio::gender_report_json(report)
                                        : ethio::gender_report_csv(report));
  } else if (*duration_cmd) {
    const auto table = ethio::duration_report(manifest_from(dr.manifest));
    emit(dr.output, dr.format == "json" ? ethio::duration_report_json(table)
                                        : ethio::duration_report_csv(table));
  } else if (*growth_cmd || *ttr_cmd) {
    const auto lang = language_arg(ls.lang);
    if (ls.manifest.empty() == ls.input.empty()) {
      throw ValidationError("lexstats: give exactly one of --manifest, --input");
    }
    std::vector<std::string> lines;
    if (!ls.manifest.empty()) {
      const auto split = split_from(ls.split);
      for (const auto& u : manifest_from(ls.manifest)) {
        if (u.language != lang || (split && u.split != *split)) continue;
        lines.push_back(u.text);
      }
    } else {
      lines = read_lines(ls.input);
    }
    const auto tokens = ethio::tokenize_corpus(lines, lang, ls.norm.config());
    if (*growth_cmd) {
      std::ostringstream out;
      ethio::write_growth_csv(out, ethio::vocab_growth(tokens, ls.step));
      emit(ls.output, out.str());
    } else {
      const double ttr = ethio::ttr_at(tokens, ls.budget);
      if (ls.format == "json") {
        ojson j;
        j["language"] = std::string(ethio::language_code(lang));
        j["normalization"] = ls.norm.preset;
        j["budget"] = ls.budget;
        j["available_tokens"] = tokens.size();
        j["ttr"] = ttr;
        emit(ls.output, j.dump(2) + "\n");
      } else {
        std::ostringstream out;
        out.precision(17);
        out << "language,budget,ttr\n"
            << ethio::language_code(lang) << ',' << ls.budget << ',' << ttr
            << '\n';
        emit(ls.output, out.str());
      }
    }
  } else if (*csv_cmd) {
    std::ifstream in(ethio::resolve_data_path(mc.csv), std::ios::binary);
    if (!in) throw IoError("cannot open CSV manifest '" + mc.csv + "'");
    const auto utts = ethio::parse_manifest_csv(in, mc.csv);
    std::ostringstream out;
    ethio::write_manifest(out, utts);
    emit(mc.output, out.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "ethio: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    std::cerr << "ethio: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "ethio: " << e.what() << '\n';
    return kExitValidation;
  }
}
