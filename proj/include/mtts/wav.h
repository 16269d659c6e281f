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

#ifndef MTTS_WAV_H_
#define MTTS_WAV_H_

#include <string>
#include <string_view>
#include <vector>

namespace mtts {

struct WavAudio {
  int sample_rate = 0;
  std::vector<double> samples;  // mono, scaled to [-1, 1)
};

// RIFF/WAVE, PCM16 mono only. Samples are scaled by 1/32768.
WavAudio read_wav(std::string_view bytes);
WavAudio read_wav_file(const std::string& path);

}  // namespace mtts

#endif  // MTTS_WAV_H_
