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

#ifndef MTTS_UTF8_H_
#define MTTS_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace mtts {

// Decodes UTF-8 into codepoints. Throws DomainError on malformed input.
std::vector<char32_t> utf8_decode(std::string_view text);

std::string utf8_encode(char32_t cp);
std::string utf8_encode(const std::vector<char32_t>& cps);

// CJK unified ideographs (URO + extension A + compatibility block).
inline bool is_cjk(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
         (cp >= 0xF900 && cp <= 0xFAFF);
}

// Drops "#1".."#4" prosody marks, then keeps CJK codepoints only.
std::vector<char32_t> effective_cjk_chars(std::string_view text);

}  // namespace mtts

#endif  // MTTS_UTF8_H_
