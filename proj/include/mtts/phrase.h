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

#ifndef MTTS_PHRASE_H_
#define MTTS_PHRASE_H_

#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mtts/common.h"

namespace mtts {

// Character position within a phrase. Enum values are the fixed state order
// used by every array in HmmModel and by tie-breaking; the numeric annotation
// codes are a separate mapping (S=1, B=2, M=3, E=4), see label_code().
enum class PhraseLabel { B = 0, M = 1, E = 2, S = 3 };

constexpr int kNumStates = 4;

int label_code(PhraseLabel label);
char label_char(PhraseLabel label);
PhraseLabel label_from_char(char c);

// Legal structure of a BMES phrase labeling:
//   start in {B,S}; end in {E,S};
//   B -> {M,E}; M -> {M,E}; E -> {B,S}; S -> {B,S}.
bool is_legal_start(PhraseLabel s);
bool is_legal_end(PhraseLabel s);
bool is_legal_transition(PhraseLabel from, PhraseLabel to);

// Log-space BMES hidden Markov model. Structurally illegal entries are
// -infinity; every other distribution is normalized over its legal support.
struct HmmModel {
  std::array<double, kNumStates> log_init{};
  std::array<std::array<double, kNumStates>, kNumStates> log_trans{};
  std::array<std::unordered_map<char32_t, double>, kNumStates> log_emit{};
  // Per-state log-probability shared by all characters outside the
  // training vocabulary.
  std::array<double, kNumStates> unk_log_floor{};
  double smoothing = 1e-3;

  double emission(PhraseLabel state, char32_t c) const;
};

struct PhraseAnnotation {
  std::vector<char32_t> chars;
  std::vector<PhraseLabel> labels;
  std::vector<int> numeric;
  std::vector<Span> phrase_spans;
};

// Group of length 1 -> [S]; length k >= 2 -> [B, M x (k-2), E].
std::vector<PhraseLabel> labels_from_segmentation(
    const std::vector<std::vector<char32_t>>& phrases);

std::vector<int> labels_to_numeric(const std::vector<PhraseLabel>& labels);

// Maximum-likelihood counts from a pre-segmented corpus (one sentence per
// line, phrases separated by single spaces), with additive smoothing over
// each distribution's legal support. Smoothing the init/transition rows as
// well as the emissions keeps every structurally legal path scorable, so
// decoding never dead-ends on unseen structure.
HmmModel train_hmm(const std::vector<std::string>& corpus_lines,
                   double smoothing);

// Max-log-probability label path. Ties prefer the earlier state in the
// fixed order [B, M, E, S], applied to the final state and then to each
// backpointer; equivalently the argmax path with lexicographically smallest
// reversed state-index sequence.
std::vector<PhraseLabel> viterbi(const HmmModel& model,
                                 const std::vector<char32_t>& chars);

// Strips non-CJK codepoints, decodes, and derives numeric codes and phrase
// spans from the label groups.
PhraseAnnotation annotate(const HmmModel& model, std::string_view text);

// Expands per-character numeric codes to phoneme level: code of character i
// is repeated once per phoneme in syllable span i.
std::vector<int> labels_to_phoneme_level(const PhraseAnnotation& annotation,
                                         const std::vector<Span>& syllable_spans);

// Model file round-trip. -infinity is serialized as the string "-inf".
std::string hmm_to_json(const HmmModel& model);
HmmModel hmm_from_json(std::string_view json_text);

}  // namespace mtts

#endif  // MTTS_PHRASE_H_
