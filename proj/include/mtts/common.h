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

#ifndef MTTS_COMMON_H_
#define MTTS_COMMON_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtts {

// Contract violations in input data (bad tokens, mismatched lengths, ...).
// The CLI maps these to exit code 4.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// File and container-level failures. The CLI maps these to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Half-open index range [start, start + len).
struct Span {
  std::size_t start = 0;
  std::size_t len = 0;

  bool operator==(const Span&) const = default;
};

// True iff spans are in order, gap-free, and cover exactly [0, total).
inline bool spans_partition(const std::vector<Span>& spans, std::size_t total) {
  std::size_t pos = 0;
  for (const Span& s : spans) {
    if (s.start != pos || s.len == 0) return false;
    pos += s.len;
  }
  return pos == total;
}

}  // namespace mtts

#endif  // MTTS_COMMON_H_
