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

#ifndef MTTS_CORPUS_H_
#define MTTS_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

namespace mtts {

// One "id|text|pinyin tokens" corpus line. The character sequence keeps
// only CJK codepoints, with "#1".."#4" prosody marks and punctuation
// stripped; it must line up one-to-one with the pinyin tokens.
struct CorpusEntry {
  std::string id;
  std::vector<char32_t> chars;
  std::vector<std::string> pinyin_tokens;
};

CorpusEntry parse_corpus_line(std::string_view line);

}  // namespace mtts

#endif  // MTTS_CORPUS_H_
