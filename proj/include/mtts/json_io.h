// Copyright (c) 2026 mtts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MTTS_JSON_IO_H_
#define MTTS_JSON_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "mtts/common.h"

namespace mtts {

using ordered_json = nlohmann::ordered_json;

// Rounds to at most `digits` significant decimal digits so serialized
// numbers are identical across platforms and rebuilds.
double round_sig(double value, int digits = 12);

// Rounds to `places` digits after the decimal point.
double round_places(double value, int places);

// -infinity <-> the string "-inf"; finite values are rounded to 12
// significant digits.
ordered_json log_value_to_json(double value);
double log_value_from_json(const ordered_json& value);

ordered_json spans_to_json(const std::vector<Span>& spans);
std::vector<Span> spans_from_json(const ordered_json& value);

// Single-line serialization, newline-terminated.
std::string dump_json_line(const ordered_json& value);

}  // namespace mtts

#endif  // MTTS_JSON_IO_H_
