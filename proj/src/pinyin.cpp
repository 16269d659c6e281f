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

#include "mtts/pinyin.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mtts {

const std::vector<std::string>& pinyin_initials() {
  // Two-letter onsets first so longest-prefix matching can scan in order.
  static const std::vector<std::string> kInitials = {
      "zh", "ch", "sh", "b", "p", "m", "f", "d", "t", "n", "l", "g",
      "k",  "h",  "j",  "q", "x", "r", "z", "c", "s", "y", "w"};
  return kInitials;
}

std::string PinyinSyllable::canonical() const {
  std::string out = initial ? *initial : std::string();
  out += final;
  out += static_cast<char>('0' + tone);
  return out;
}

PinyinSyllable split_syllable(std::string_view token) {
  if (token.empty()) throw DomainError("empty pinyin token");

  std::string body;
  body.reserve(token.size());
  for (char c : token) body += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  int tone = 5;  // missing digit means neutral tone
  const char last = body.back();
  if (last >= '0' && last <= '9') {
    if (last < '1' || last > '5')
      throw DomainError("tone digit out of range in token '" + body + "'");
    tone = last - '0';
    body.pop_back();
    if (body.empty()) throw DomainError("pinyin token is a bare tone digit");
  }
  for (char c : body) {
    if (c < 'a' || c > 'z')
      throw DomainError("non-pinyin character in token '" + std::string(token) + "'");
  }

  PinyinSyllable syl;
  syl.tone = tone;
  for (const std::string& ini : pinyin_initials()) {
    if (body.size() > ini.size() && body.compare(0, ini.size(), ini) == 0) {
      syl.initial = ini;
      syl.final = body.substr(ini.size());
      break;
    }
  }
  if (!syl.initial) {
    // Either a zero-onset syllable or a bare onset with no vowel cluster.
    for (const std::string& ini : pinyin_initials()) {
      if (body == ini)
        throw DomainError("pinyin token '" + body + "' has no final");
    }
    syl.final = body;
  }
  syl.raw = syl.canonical();
  return syl;
}

PhonemeToneSeq decouple(const std::vector<std::string>& tokens) {
  PhonemeToneSeq seq;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    PinyinSyllable syl;
    try {
      syl = split_syllable(tokens[i]);
    } catch (const DomainError& e) {
      throw DomainError("token " + std::to_string(i) + ": " + e.what());
    }
    const std::size_t start = seq.phonemes.size();
    if (syl.initial) {
      seq.phonemes.push_back(*syl.initial);
      seq.tones.push_back(0);
    }
    seq.phonemes.push_back(syl.final);
    seq.tones.push_back(syl.tone);
    seq.syllable_spans.push_back({start, seq.phonemes.size() - start});
  }
  return seq;
}

std::vector<std::string> recombine(const PhonemeToneSeq& seq) {
  if (seq.phonemes.size() != seq.tones.size())
    throw DomainError("phoneme/tone length mismatch");
  if (!spans_partition(seq.syllable_spans, seq.phonemes.size()))
    throw DomainError("syllable spans do not partition the phoneme range");

  std::vector<std::string> out;
  out.reserve(seq.syllable_spans.size());
  for (const Span& span : seq.syllable_spans) {
    if (span.len != 1 && span.len != 2)
      throw DomainError("syllable span of length " + std::to_string(span.len));
    PinyinSyllable syl;
    std::size_t fin = span.start;
    if (span.len == 2) {
      if (seq.tones[span.start] != 0)
        throw DomainError("onset position carries a nonzero tone");
      syl.initial = seq.phonemes[span.start];
      fin = span.start + 1;
    }
    if (seq.tones[fin] < 1 || seq.tones[fin] > 5)
      throw DomainError("final position carries tone " +
                        std::to_string(seq.tones[fin]));
    syl.final = seq.phonemes[fin];
    syl.tone = seq.tones[fin];
    out.push_back(syl.canonical());
  }
  return out;
}

SyllableTable SyllableTable::parse(std::string_view text) {
  SyllableTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? std::string::npos
                                                   : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos)
      throw DomainError("syllable table line " + std::to_string(lineno) +
                        ": expected pinyin<TAB>initial<TAB>final");
    Row row;
    row.pinyin = line.substr(0, t1);
    row.initial = line.substr(t1 + 1, t2 - t1 - 1);
    row.final = line.substr(t2 + 1);
    if (row.pinyin.empty() || row.final.empty())
      throw DomainError("syllable table line " + std::to_string(lineno) +
                        ": empty pinyin or final");
    table.rows_.push_back(std::move(row));
  }
  if (table.rows_.empty()) throw DomainError("syllable table is empty");

  std::vector<std::string> symbols;
  for (const Row& row : table.rows_) {
    if (!row.initial.empty()) symbols.push_back(row.initial);
    symbols.push_back(row.final);
  }
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  table.vocab_ = std::move(symbols);
  for (std::size_t i = 0; i < table.vocab_.size(); ++i)
    table.vocab_index_[table.vocab_[i]] = static_cast<int>(i);
  return table;
}

SyllableTable SyllableTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open syllable table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

int SyllableTable::phoneme_id(const std::string& symbol) const {
  const auto it = vocab_index_.find(symbol);
  if (it == vocab_index_.end())
    throw DomainError("phoneme '" + symbol + "' not in vocabulary");
  return it->second;
}

}  // namespace mtts
