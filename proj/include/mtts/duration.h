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

#ifndef MTTS_DURATION_H_
#define MTTS_DURATION_H_

#include <cstdint>
#include <vector>

#include "mtts/common.h"

namespace mtts {

// Durations are integer frame counts; fractional input is rejected at
// ingestion (see the CLI parser).
using DurationVector = std::vector<std::int64_t>;

// Sums per-phoneme durations over phrase spans. The spans must partition
// [0, D.size()); the total is preserved exactly.
DurationVector aggregate_duration(const DurationVector& durations,
                                  const std::vector<Span>& phoneme_phrase_spans);

// Mean squared error between phrase-duration vectors, in the linear
// frame-count domain.
double phrase_duration_penalty(const DurationVector& pred,
                               const DurationVector& target);

}  // namespace mtts

#endif  // MTTS_DURATION_H_
