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

#ifndef MTTS_PINYIN_H_
#define MTTS_PINYIN_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mtts/common.h"

namespace mtts {

// One toned pinyin syllable split into onset consonant and vowel cluster.
// "y" and "w" are treated as onsets so that e.g. "wo3" splits into a
// toneless consonant "w" and a toned vowel "o".
struct PinyinSyllable {
  std::string raw;                   // token as given, lowercased
  std::optional<std::string> initial;
  std::string final;
  int tone = 5;                      // 1..5, 5 = neutral

  // Canonical spelling: initial + final + tone digit (digit always written).
  std::string canonical() const;
};

// Decoupled representation of a syllable sequence: toneless phoneme symbols
// with a per-symbol tone track. Onset consonants carry tone 0; vowel symbols
// carry the syllable tone 1..5. syllable_spans maps each source syllable to
// its 1- or 2-symbol range.
struct PhonemeToneSeq {
  std::vector<std::string> phonemes;
  std::vector<int> tones;
  std::vector<Span> syllable_spans;
};

// The 23 onset symbols: the 21 standard initials plus "y" and "w".
const std::vector<std::string>& pinyin_initials();

PinyinSyllable split_syllable(std::string_view token);
PhonemeToneSeq decouple(const std::vector<std::string>& tokens);
std::vector<std::string> recombine(const PhonemeToneSeq& seq);

// Fixture table of known syllables, one "pinyin<TAB>initial<TAB>final" row
// per syllable. Also provides the phoneme vocabulary (sorted distinct
// initial and final symbols) used for embedding lookups.
class SyllableTable {
 public:
  struct Row {
    std::string pinyin;
    std::string initial;  // empty when the syllable has no onset
    std::string final;
  };

  static SyllableTable parse(std::string_view text);
  static SyllableTable load(const std::string& path);
  // Table compiled into the library; identical to the shipped data file.
  static const SyllableTable& builtin();

  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::string>& phoneme_vocab() const { return vocab_; }

  // Index into phoneme_vocab(); throws DomainError for unknown symbols.
  int phoneme_id(const std::string& symbol) const;

 private:
  std::vector<Row> rows_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> vocab_index_;
};

}  // namespace mtts

#endif  // MTTS_PINYIN_H_
