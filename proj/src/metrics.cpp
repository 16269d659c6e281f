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

#include "mtts/metrics.h"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "mtts/common.h"

namespace mtts {

double r_squared(std::span<const double> pred, std::span<const double> target) {
  if (pred.size() != target.size())
    throw DomainError("r_squared inputs differ in length");
  if (pred.size() < 2) throw DomainError("r_squared needs at least two points");

  double mean = 0;
  for (double v : target) mean += v;
  mean /= static_cast<double>(target.size());

  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double r = target[i] - pred[i];
    const double c = target[i] - mean;
    ss_res += r * r;
    ss_tot += c * c;
  }
  if (ss_tot <= 0) throw DomainError("target has zero variance");
  return 1.0 - ss_res / ss_tot;
}

EvalReport f0_r2(const WavAudio& ref, const WavAudio& hyp,
                 const MelConfig& mel_cfg, const YinConfig& yin_cfg) {
  const F0Track ref_f0 = yin_f0(ref, yin_cfg);
  const F0Track hyp_f0 = yin_f0(hyp, yin_cfg);

  EvalReport report;
  report.frames_compared = std::min(ref_f0.size(), hyp_f0.size());

  std::vector<double> ref_voiced, hyp_voiced;
  for (std::size_t t = 0; t < report.frames_compared; ++t) {
    if (ref_f0[t] > 0 && hyp_f0[t] > 0) {
      ref_voiced.push_back(ref_f0[t]);
      hyp_voiced.push_back(hyp_f0[t]);
    }
  }
  report.voiced_overlap = ref_voiced.size();
  if (report.voiced_overlap < 2)
    throw DomainError("fewer than 2 jointly voiced frames");
  report.r2_f0 = r_squared(hyp_voiced, ref_voiced);
  report.mcd_db = mcd(mel_cepstra(mel_spectrogram(ref, mel_cfg)),
                      mel_cepstra(mel_spectrogram(hyp, mel_cfg)));
  return report;
}

std::string f0_csv(const F0Track& ref, const F0Track& hyp,
                   const YinConfig& cfg) {
  const std::size_t frames = std::min(ref.size(), hyp.size());
  std::string out = "time_s,f0_ref_hz,f0_hyp_hz\n";
  char buf[96];
  for (std::size_t t = 0; t < frames; ++t) {
    const double time_s = static_cast<double>(t) * cfg.hop_length /
                          static_cast<double>(cfg.sample_rate);
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f\n", time_s, ref[t], hyp[t]);
    out += buf;
  }
  return out;
}

}  // namespace mtts
