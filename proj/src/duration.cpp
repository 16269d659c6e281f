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

#include "mtts/duration.h"

namespace mtts {

DurationVector aggregate_duration(const DurationVector& durations,
                                  const std::vector<Span>& phoneme_phrase_spans) {
  if (!spans_partition(phoneme_phrase_spans, durations.size()))
    throw DomainError("phrase spans do not partition the duration vector");
  for (std::int64_t d : durations)
    if (d < 0) throw DomainError("negative duration");

  DurationVector out;
  out.reserve(phoneme_phrase_spans.size());
  for (const Span& span : phoneme_phrase_spans) {
    std::int64_t total = 0;
    for (std::size_t i = span.start; i < span.start + span.len; ++i)
      total += durations[i];
    out.push_back(total);
  }
  return out;
}

double phrase_duration_penalty(const DurationVector& pred,
                               const DurationVector& target) {
  if (pred.size() != target.size())
    throw DomainError("phrase duration vectors differ in length");
  if (pred.empty()) throw DomainError("phrase duration vectors are empty");
  double sum = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = static_cast<double>(pred[i] - target[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(pred.size());
}

}  // namespace mtts
