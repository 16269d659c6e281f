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

#ifndef MTTS_METRICS_H_
#define MTTS_METRICS_H_

#include <span>
#include <string>

#include "mtts/mel.h"
#include "mtts/wav.h"
#include "mtts/yin.h"

namespace mtts {

// 1 - sum((target - pred)^2) / sum((target - mean(target))^2).
// Requires at least two points and positive target variance.
double r_squared(std::span<const double> pred, std::span<const double> target);

struct EvalReport {
  double mcd_db = 0.0;
  double r2_f0 = 0.0;
  std::size_t frames_compared = 0;  // common frame count after truncation
  std::size_t voiced_overlap = 0;   // frames voiced in both tracks
};

// Full objective comparison: mel-cepstral distortion over aligned frames
// plus R^2 of the hypothesis F0 against the reference F0 restricted to
// frames voiced in both signals.
EvalReport f0_r2(const WavAudio& ref, const WavAudio& hyp,
                 const MelConfig& mel_cfg = {}, const YinConfig& yin_cfg = {});

// "time_s,f0_ref_hz,f0_hyp_hz" rows over the common frames, 0 for unvoiced.
std::string f0_csv(const F0Track& ref, const F0Track& hyp,
                   const YinConfig& cfg = {});

}  // namespace mtts

#endif  // MTTS_METRICS_H_
