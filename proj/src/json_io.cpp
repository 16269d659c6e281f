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

#include "mtts/json_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace mtts {

double round_sig(double value, int digits) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

double round_places(double value, int places) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, value);
  return std::strtod(buf, nullptr);
}

ordered_json log_value_to_json(double value) {
  if (std::isinf(value) && value < 0) return "-inf";
  return round_sig(value);
}

double log_value_from_json(const ordered_json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "-inf")
      return -std::numeric_limits<double>::infinity();
    throw DomainError("expected a number or \"-inf\", got \"" +
                      value.get<std::string>() + "\"");
  }
  if (!value.is_number()) throw DomainError("expected a number or \"-inf\"");
  return value.get<double>();
}

ordered_json spans_to_json(const std::vector<Span>& spans) {
  ordered_json out = ordered_json::array();
  for (const Span& s : spans) out.push_back({s.start, s.len});
  return out;
}

std::vector<Span> spans_from_json(const ordered_json& value) {
  if (!value.is_array()) throw DomainError("spans must be an array");
  std::vector<Span> out;
  for (const auto& item : value) {
    if (!item.is_array() || item.size() != 2)
      throw DomainError("span must be a [start, len] pair");
    out.push_back({item[0].get<std::size_t>(), item[1].get<std::size_t>()});
  }
  return out;
}

std::string dump_json_line(const ordered_json& value) {
  return value.dump() + "\n";
}

}  // namespace mtts
