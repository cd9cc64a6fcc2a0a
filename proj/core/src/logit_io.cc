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

#include "ethio/logit_io.h"

#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ethio/error.h"

namespace ethio {
namespace {

constexpr std::array<char, 4> kMagic = {'C', 'T', 'C', 'L'};
// Guards against absurd headers before allocating.
constexpr std::uint64_t kMaxValues = std::uint64_t{1} << 31;

std::uint32_t read_u32_le(std::istream& in, const char* what) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw ValidationError(std::string("truncated logit file: missing ") +
                          what);
  }
  return std::uint32_t{b[0]} | (std::uint32_t{b[1]} << 8) |
         (std::uint32_t{b[2]} << 16) | (std::uint32_t{b[3]} << 24);
}

void write_u32_le(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xFF),
                     static_cast<char>((v >> 8) & 0xFF),
                     static_cast<char>((v >> 16) & 0xFF),
                     static_cast<char>((v >> 24) & 0xFF)};
  out.write(b, 4);
}

}  // namespace

LogitMatrix read_logits_binary(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw ValidationError("not a binary logit file (missing CTCL magic)");
  }
  const std::uint32_t frames = read_u32_le(in, "T");
  const std::uint32_t vocab = read_u32_le(in, "V");
  const std::uint64_t count = std::uint64_t{frames} * vocab;
  if (count == 0 || count > kMaxValues) {
    throw ValidationError("implausible logit dimensions T=" +
                          std::to_string(frames) +
                          " V=" + std::to_string(vocab));
  }
  std::vector<double> values(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint32_t bits = read_u32_le(in, "values");
    values[i] = static_cast<double>(std::bit_cast<float>(bits));
  }
  return LogitMatrix(frames, vocab, std::move(values));
}

LogitMatrix read_logits_text(std::istream& in) {
  std::string line;
  std::size_t frames = 0;
  std::size_t vocab = 0;
  if (!std::getline(in, line)) throw ValidationError("empty logit file");
  {
    std::istringstream header(line);
    if (!(header >> frames >> vocab) || frames == 0 || vocab == 0) {
      throw ValidationError("logit text header must be 'T V', got '" + line +
                            "'");
    }
  }
  std::vector<double> values;
  values.reserve(frames * vocab);
  for (std::size_t t = 0; t < frames; ++t) {
    if (!std::getline(in, line)) {
      throw ValidationError("logit text file ends after " + std::to_string(t) +
                            " of " + std::to_string(frames) + " rows");
    }
    std::istringstream row(line);
    std::string field;
    std::size_t count = 0;
    while (row >> field) {
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (end == field.c_str() || *end != '\0') {
        throw ValidationError("row " + std::to_string(t + 1) +
                              ": bad number '" + field + "'");
      }
      values.push_back(v);
      ++count;
    }
    if (count != vocab) {
      throw ValidationError("row " + std::to_string(t + 1) + " has " +
                            std::to_string(count) + " values, expected " +
                            std::to_string(vocab));
    }
  }
  return LogitMatrix(frames, vocab, std::move(values));
}

void write_logits_binary(std::ostream& out, const LogitMatrix& logits) {
  out.write(kMagic.data(), kMagic.size());
  write_u32_le(out, static_cast<std::uint32_t>(logits.frames()));
  write_u32_le(out, static_cast<std::uint32_t>(logits.vocab_size()));
  for (double v : logits.values()) {
    write_u32_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
}

void write_logits_text(std::ostream& out, const LogitMatrix& logits) {
  out << logits.frames() << ' ' << logits.vocab_size() << '\n';
  char buf[64];
  for (std::size_t t = 0; t < logits.frames(); ++t) {
    const auto row = logits.row(t);
    for (std::size_t v = 0; v < row.size(); ++v) {
      if (v > 0) out << ' ';
      if (row[v] == kLogZero) {
        out << "-inf";
        continue;
      }
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, row[v]);
      out.write(buf, end - buf);
    }
    out << '\n';
  }
}

LogitMatrix load_logits(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open logit file '" + path + "'");
  std::array<char, 4> head{};
  in.read(head.data(), head.size());
  const bool binary = in.gcount() == 4 && head == kMagic;
  in.clear();
  in.seekg(0);
  return binary ? read_logits_binary(in) : read_logits_text(in);
}

void save_logits(const std::string& path, const LogitMatrix& logits,
                 bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (binary) {
    write_logits_binary(out, logits);
  } else {
    write_logits_text(out, logits);
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace ethio
