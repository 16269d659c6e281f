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

#include "mtts/corpus.h"

#include "mtts/common.h"
#include "mtts/utf8.h"

namespace mtts {

CorpusEntry parse_corpus_line(std::string_view line) {
  const std::size_t p1 = line.find('|');
  const std::size_t p2 = p1 == std::string_view::npos
                             ? std::string_view::npos
                             : line.find('|', p1 + 1);
  if (p1 == std::string_view::npos || p2 == std::string_view::npos ||
      line.find('|', p2 + 1) != std::string_view::npos)
    throw DomainError("corpus line must be id|text|pinyin");

  CorpusEntry entry;
  entry.id = std::string(line.substr(0, p1));
  entry.chars = effective_cjk_chars(line.substr(p1 + 1, p2 - p1 - 1));

  std::string_view tokens = line.substr(p2 + 1);
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const std::size_t next = std::min(tokens.find(' ', pos), tokens.size());
    if (next > pos)
      entry.pinyin_tokens.emplace_back(tokens.substr(pos, next - pos));
    pos = next + 1;
  }

  if (entry.chars.size() != entry.pinyin_tokens.size())
    throw DomainError("character count " + std::to_string(entry.chars.size()) +
                      " does not match pinyin token count " +
                      std::to_string(entry.pinyin_tokens.size()));
  return entry;
}

}  // namespace mtts
