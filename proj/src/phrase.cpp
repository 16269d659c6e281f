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

#include "mtts/phrase.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "mtts/json_io.h"
#include "mtts/utf8.h"

namespace mtts {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

constexpr PhraseLabel kStates[kNumStates] = {PhraseLabel::B, PhraseLabel::M,
                                             PhraseLabel::E, PhraseLabel::S};

std::vector<PhraseLabel> legal_targets(PhraseLabel from) {
  switch (from) {
    case PhraseLabel::B:
    case PhraseLabel::M:
      return {PhraseLabel::M, PhraseLabel::E};
    case PhraseLabel::E:
    case PhraseLabel::S:
      return {PhraseLabel::B, PhraseLabel::S};
  }
  return {};
}

}  // namespace

int label_code(PhraseLabel label) {
  switch (label) {
    case PhraseLabel::S: return 1;
    case PhraseLabel::B: return 2;
    case PhraseLabel::M: return 3;
    case PhraseLabel::E: return 4;
  }
  throw DomainError("invalid phrase label");
}

char label_char(PhraseLabel label) {
  switch (label) {
    case PhraseLabel::B: return 'B';
    case PhraseLabel::M: return 'M';
    case PhraseLabel::E: return 'E';
    case PhraseLabel::S: return 'S';
  }
  throw DomainError("invalid phrase label");
}

PhraseLabel label_from_char(char c) {
  switch (c) {
    case 'B': return PhraseLabel::B;
    case 'M': return PhraseLabel::M;
    case 'E': return PhraseLabel::E;
    case 'S': return PhraseLabel::S;
  }
  throw DomainError(std::string("invalid phrase label character '") + c + "'");
}

bool is_legal_start(PhraseLabel s) {
  return s == PhraseLabel::B || s == PhraseLabel::S;
}

bool is_legal_end(PhraseLabel s) {
  return s == PhraseLabel::E || s == PhraseLabel::S;
}

bool is_legal_transition(PhraseLabel from, PhraseLabel to) {
  const auto targets = legal_targets(from);
  return std::find(targets.begin(), targets.end(), to) != targets.end();
}

double HmmModel::emission(PhraseLabel state, char32_t c) const {
  const auto& table = log_emit[static_cast<int>(state)];
  const auto it = table.find(c);
  if (it != table.end()) return it->second;
  return unk_log_floor[static_cast<int>(state)];
}

std::vector<PhraseLabel> labels_from_segmentation(
    const std::vector<std::vector<char32_t>>& phrases) {
  std::vector<PhraseLabel> labels;
  for (const auto& phrase : phrases) {
    if (phrase.empty()) throw DomainError("empty phrase in segmentation");
    if (phrase.size() == 1) {
      labels.push_back(PhraseLabel::S);
    } else {
      labels.push_back(PhraseLabel::B);
      for (std::size_t i = 1; i + 1 < phrase.size(); ++i)
        labels.push_back(PhraseLabel::M);
      labels.push_back(PhraseLabel::E);
    }
  }
  return labels;
}

std::vector<int> labels_to_numeric(const std::vector<PhraseLabel>& labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (PhraseLabel l : labels) out.push_back(label_code(l));
  return out;
}

HmmModel train_hmm(const std::vector<std::string>& corpus_lines,
                   double smoothing) {
  if (smoothing <= 0) throw DomainError("smoothing must be positive");

  std::array<std::array<long long, kNumStates>, kNumStates> trans_count{};
  std::array<long long, kNumStates> init_count{};
  std::array<std::unordered_map<char32_t, long long>, kNumStates> emit_count{};
  std::set<char32_t> vocab;
  long long n_lines = 0;

  for (const std::string& raw_line : corpus_lines) {
    std::string line = raw_line;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::vector<char32_t>> phrases;
    std::vector<char32_t> chars;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t next = std::min(line.find(' ', pos), line.size());
      const std::string token = line.substr(pos, next - pos);
      if (token.empty()) throw DomainError("corpus line with empty phrase");
      phrases.push_back(utf8_decode(token));
      chars.insert(chars.end(), phrases.back().begin(), phrases.back().end());
      pos = next + 1;
    }

    const std::vector<PhraseLabel> labels = labels_from_segmentation(phrases);
    ++n_lines;
    init_count[static_cast<int>(labels.front())]++;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      emit_count[static_cast<int>(labels[i])][chars[i]]++;
      vocab.insert(chars[i]);
      if (i + 1 < labels.size())
        trans_count[static_cast<int>(labels[i])][static_cast<int>(labels[i + 1])]++;
    }
  }
  if (n_lines == 0) throw DomainError("empty training corpus");

  HmmModel model;
  model.smoothing = smoothing;
  const double alpha = smoothing;

  // Init mass lives on the legal start states only.
  for (PhraseLabel s : kStates) {
    const int si = static_cast<int>(s);
    model.log_init[si] =
        is_legal_start(s)
            ? std::log((init_count[si] + alpha) / (n_lines + 2 * alpha))
            : kNegInf;
  }

  for (PhraseLabel s : kStates) {
    const int si = static_cast<int>(s);
    const auto targets = legal_targets(s);
    long long mass = 0;
    for (PhraseLabel t : targets) mass += trans_count[si][static_cast<int>(t)];
    for (PhraseLabel t : kStates) {
      const int ti = static_cast<int>(t);
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        model.log_trans[si][ti] = kNegInf;
      } else {
        model.log_trans[si][ti] = std::log(
            (trans_count[si][ti] + alpha) /
            (static_cast<double>(mass) + alpha * targets.size()));
      }
    }
  }

  const double vocab_size = static_cast<double>(vocab.size());
  for (PhraseLabel s : kStates) {
    const int si = static_cast<int>(s);
    double mass = 0;
    for (const auto& [c, n] : emit_count[si]) mass += static_cast<double>(n);
    const double denom = mass + alpha * vocab_size;
    for (char32_t c : vocab) {
      const auto it = emit_count[si].find(c);
      const double count = it == emit_count[si].end()
                               ? 0.0
                               : static_cast<double>(it->second);
      model.log_emit[si][c] = std::log((count + alpha) / denom);
    }
    model.unk_log_floor[si] = std::log(alpha / denom);
  }
  return model;
}

std::vector<PhraseLabel> viterbi(const HmmModel& model,
                                 const std::vector<char32_t>& chars) {
  if (chars.empty()) throw DomainError("viterbi requires a non-empty sequence");
  const std::size_t n = chars.size();

  std::vector<std::array<double, kNumStates>> score(n);
  std::vector<std::array<int, kNumStates>> back(n);

  for (PhraseLabel s : kStates) {
    const int si = static_cast<int>(s);
    score[0][si] = model.log_init[si] + model.emission(s, chars[0]);
    back[0][si] = -1;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (PhraseLabel s : kStates) {
      const int si = static_cast<int>(s);
      double best = kNegInf;
      int best_prev = 0;
      for (int pi = 0; pi < kNumStates; ++pi) {
        const double v = score[i - 1][pi] + model.log_trans[pi][si];
        if (v > best) {  // strict: ties keep the earliest state
          best = v;
          best_prev = pi;
        }
      }
      score[i][si] = best + model.emission(s, chars[i]);
      back[i][si] = best_prev;
    }
  }

  double best = kNegInf;
  int best_state = -1;
  for (PhraseLabel s : kStates) {
    if (!is_legal_end(s)) continue;
    const int si = static_cast<int>(s);
    if (score[n - 1][si] > best) {
      best = score[n - 1][si];
      best_state = si;
    }
  }
  if (best_state < 0 || best == kNegInf)
    throw DomainError("model admits no legal label path");

  std::vector<PhraseLabel> labels(n);
  int state = best_state;
  for (std::size_t i = n; i-- > 0;) {
    labels[i] = static_cast<PhraseLabel>(state);
    state = back[i][state];
  }
  return labels;
}

PhraseAnnotation annotate(const HmmModel& model, std::string_view text) {
  PhraseAnnotation ann;
  ann.chars = effective_cjk_chars(text);
  if (ann.chars.empty())
    throw DomainError("text is empty after removing non-CJK characters");
  ann.labels = viterbi(model, ann.chars);
  ann.numeric = labels_to_numeric(ann.labels);

  std::size_t start = 0;
  for (std::size_t i = 0; i < ann.labels.size(); ++i) {
    if (ann.labels[i] == PhraseLabel::S || ann.labels[i] == PhraseLabel::E) {
      ann.phrase_spans.push_back({start, i - start + 1});
      start = i + 1;
    }
  }
  return ann;
}

std::vector<int> labels_to_phoneme_level(
    const PhraseAnnotation& annotation, const std::vector<Span>& syllable_spans) {
  if (annotation.numeric.size() != syllable_spans.size())
    throw DomainError("character count " + std::to_string(annotation.numeric.size()) +
                      " does not match syllable span count " +
                      std::to_string(syllable_spans.size()));
  std::vector<int> out;
  for (std::size_t i = 0; i < syllable_spans.size(); ++i)
    out.insert(out.end(), syllable_spans[i].len, annotation.numeric[i]);
  return out;
}

std::string hmm_to_json(const HmmModel& model) {
  ordered_json j;
  j["states"] = {"B", "M", "E", "S"};
  ordered_json init = ordered_json::array();
  for (double v : model.log_init) init.push_back(log_value_to_json(v));
  j["log_init"] = init;
  ordered_json trans = ordered_json::array();
  for (const auto& row : model.log_trans) {
    ordered_json jrow = ordered_json::array();
    for (double v : row) jrow.push_back(log_value_to_json(v));
    trans.push_back(jrow);
  }
  j["log_trans"] = trans;

  ordered_json emit = ordered_json::object();
  for (PhraseLabel s : kStates) {
    const int si = static_cast<int>(s);
    std::vector<char32_t> keys;
    keys.reserve(model.log_emit[si].size());
    for (const auto& [c, v] : model.log_emit[si]) keys.push_back(c);
    std::sort(keys.begin(), keys.end());
    ordered_json table = ordered_json::object();
    for (char32_t c : keys)
      table[utf8_encode(c)] = log_value_to_json(model.log_emit[si].at(c));
    emit[std::string(1, label_char(s))] = std::move(table);
  }
  j["log_emit"] = emit;

  ordered_json floors = ordered_json::array();
  for (double v : model.unk_log_floor) floors.push_back(log_value_to_json(v));
  j["unk_log_floor"] = floors;
  j["smoothing"] = round_sig(model.smoothing);
  return dump_json_line(j);
}

HmmModel hmm_from_json(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed model JSON: ") + e.what());
  }
  if (j.value("states", ordered_json::array()) !=
      ordered_json::array({"B", "M", "E", "S"}))
    throw DomainError("model states must be [\"B\",\"M\",\"E\",\"S\"]");

  HmmModel model;
  const auto& init = j.at("log_init");
  const auto& trans = j.at("log_trans");
  if (init.size() != kNumStates || trans.size() != kNumStates)
    throw DomainError("model init/transition tables must have 4 states");
  for (int i = 0; i < kNumStates; ++i) {
    model.log_init[i] = log_value_from_json(init[i]);
    if (trans[i].size() != kNumStates)
      throw DomainError("model transition rows must have 4 entries");
    for (int k = 0; k < kNumStates; ++k)
      model.log_trans[i][k] = log_value_from_json(trans[i][k]);
  }
  const auto& emit = j.at("log_emit");
  for (PhraseLabel s : kStates) {
    const std::string key(1, label_char(s));
    const auto& table = emit.at(key);
    for (const auto& [chars, v] : table.items()) {
      const std::vector<char32_t> cps = utf8_decode(chars);
      if (cps.size() != 1)
        throw DomainError("emission key '" + chars + "' is not a single character");
      model.log_emit[static_cast<int>(s)][cps[0]] = log_value_from_json(v);
    }
  }
  const auto& floors = j.at("unk_log_floor");
  if (floors.size() != kNumStates)
    throw DomainError("unk_log_floor must have 4 entries");
  for (int i = 0; i < kNumStates; ++i)
    model.unk_log_floor[i] = log_value_from_json(floors[i]);
  model.smoothing = j.value("smoothing", 1e-3);
  return model;
}

}  // namespace mtts
