// Copyright 2026 The fockfringe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FOCKFRINGE_RECORDS_H
#define FOCKFRINGE_RECORDS_H

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fockfringe/sampler.h"

namespace fockfringe {

/// Decimal form used in every data file: "%.17g", which round-trips any double.
std::string format_real(double value);

/// One JSON object on one line, no trailing newline:
///
///     {"state":"fock:2,2","pair":"plane-wave","d":4,"seed":7,"stream":0,"positions":[...]}
///
/// Phase shots carry the realized phase as "phi" between "stream" and "positions".
std::string to_jsonl(const DetectionRecord &record);

/// Parses one line written by to_jsonl. Throws ArgumentError on malformed input.
DetectionRecord record_from_jsonl(std::string_view line);

void write_records_jsonl(std::ostream &out, std::span<const DetectionRecord> records);
std::vector<DetectionRecord> read_records_jsonl(std::istream &in);

}  // namespace fockfringe

#endif  // FOCKFRINGE_RECORDS_H
