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

#ifndef ETHIO_LOGIT_IO_H_
#define ETHIO_LOGIT_IO_H_

#include <iosfwd>
#include <string>

#include "ethio/ctc.h"

namespace ethio {

// Binary layout: "CTCL", uint32 T, uint32 V (little endian), then T*V
// little-endian float32 log-probabilities, row-major.
//
// Text layout: a "T V" header line followed by T lines of V decimal values
// ("-inf" allowed).
LogitMatrix read_logits_binary(std::istream& in);
LogitMatrix read_logits_text(std::istream& in);
void write_logits_binary(std::ostream& out, const LogitMatrix& logits);
void write_logits_text(std::ostream& out, const LogitMatrix& logits);

// Picks the format from the leading magic bytes.
LogitMatrix load_logits(const std::string& path);
void save_logits(const std::string& path, const LogitMatrix& logits,
                 bool binary);

}  // namespace ethio

#endif  // ETHIO_LOGIT_IO_H_
