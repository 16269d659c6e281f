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

#ifndef MTTS_YIN_H_
#define MTTS_YIN_H_

#include <vector>

#include "mtts/wav.h"

namespace mtts {

struct YinConfig {
  int sample_rate = 22050;
  double fmin = 50.0;
  double fmax = 600.0;
  double threshold = 0.1;
  // A frame with no CMNDF dip below this anywhere in the lag range is
  // treated as unvoiced.
  double unvoiced_gate = 0.5;
  int win_length = 1102;  // frame grid shared with MelConfig
  int hop_length = 276;
};

// Per-frame fundamental frequency in Hz; 0 marks unvoiced frames. Frames
// follow the mel grid (frame t starts at t*hop); the difference function
// integrates over win_length samples and reads lags from an analysis
// window extended to 2*win_length, zero-padded past the signal end.
using F0Track = std::vector<double>;

F0Track yin_f0(const WavAudio& wav, const YinConfig& cfg = {});

}  // namespace mtts

#endif  // MTTS_YIN_H_
