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

#include "mtts/yin.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mtts/common.h"
#include "mtts/mel.h"

namespace mtts {

F0Track yin_f0(const WavAudio& wav, const YinConfig& cfg) {
  if (wav.sample_rate != cfg.sample_rate)
    throw DomainError("expected " + std::to_string(cfg.sample_rate) +
                      " Hz audio, got " + std::to_string(wav.sample_rate));
  const double sr = static_cast<double>(cfg.sample_rate);
  const int tau_min = static_cast<int>(std::ceil(sr / cfg.fmax));
  const int tau_max = static_cast<int>(std::floor(sr / cfg.fmin));
  const int window = cfg.win_length;
  const int extended = 2 * cfg.win_length;
  if (tau_min < 1 || tau_min >= tau_max)
    throw DomainError("empty YIN lag range");
  if (tau_max + 1 + window > extended)
    throw DomainError("analysis window too short for fmin");

  const std::size_t frames =
      frame_count(wav.samples.size(), cfg.win_length, cfg.hop_length);
  const std::size_t n = wav.samples.size();

  F0Track track(frames, 0.0);
  std::vector<double> frame(extended);
  std::vector<double> diff(tau_max + 2);
  std::vector<double> cmndf(tau_max + 2);

  for (std::size_t t = 0; t < frames; ++t) {
    const std::size_t base = t * cfg.hop_length;
    for (int i = 0; i < extended; ++i)
      frame[i] = base + i < n ? wav.samples[base + i] : 0.0;

    diff[0] = 0.0;
    for (int tau = 1; tau <= tau_max + 1; ++tau) {
      double acc = 0;
      for (int j = 0; j < window; ++j) {
        const double d = frame[j] - frame[j + tau];
        acc += d * d;
      }
      diff[tau] = acc;
    }

    cmndf[0] = 1.0;
    double running = 0;
    for (int tau = 1; tau <= tau_max + 1; ++tau) {
      running += diff[tau];
      cmndf[tau] = running > 0 ? diff[tau] * tau / running : 1.0;
    }

    int min_tau = tau_min;
    for (int tau = tau_min; tau <= tau_max; ++tau)
      if (cmndf[tau] < cmndf[min_tau]) min_tau = tau;
    if (cmndf[min_tau] > cfg.unvoiced_gate) continue;  // unvoiced

    int tau = -1;
    for (int cand = tau_min; cand <= tau_max; ++cand) {
      if (cmndf[cand] < cfg.threshold) {
        tau = cand;
        while (tau + 1 <= tau_max && cmndf[tau + 1] < cmndf[tau]) ++tau;
        break;
      }
    }
    if (tau < 0) tau = min_tau;

    // Parabolic refinement over the neighboring lags.
    const double s0 = cmndf[tau - 1], s1 = cmndf[tau], s2 = cmndf[tau + 1];
    const double denom = 2.0 * (2.0 * s1 - s2 - s0);
    double best = static_cast<double>(tau);
    if (denom != 0.0) best += (s2 - s0) / denom;
    best = std::clamp(best, sr / cfg.fmax, sr / cfg.fmin);
    track[t] = sr / best;
  }
  return track;
}

}  // namespace mtts
