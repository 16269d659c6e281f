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

#include "mtts/mel.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mtts {

std::size_t frame_count(std::size_t n_samples, int win_length, int hop_length) {
  if (hop_length < 1 || win_length < 1)
    throw DomainError("window and hop must be positive");
  if (n_samples < static_cast<std::size_t>(win_length))
    throw DomainError("signal shorter than one analysis window");
  return 1 + (n_samples - win_length) / hop_length;
}

void fft_radix2(std::vector<std::complex<double>>& buf) {
  const std::size_t n = buf.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw DomainError("FFT size must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(buf[i], buf[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wstep(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> a = buf[i + k];
        const std::complex<double> b = buf[i + k + len / 2] * w;
        buf[i + k] = a + b;
        buf[i + k + len / 2] = a - b;
        w *= wstep;
      }
    }
  }
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

Matrix mel_filterbank(const MelConfig& cfg) {
  const int n_bins = cfg.fft_size / 2 + 1;
  const double mel_lo = hz_to_mel(cfg.fmin);
  const double mel_hi = hz_to_mel(cfg.fmax);

  std::vector<double> edges(cfg.n_mels + 2);
  for (int i = 0; i < cfg.n_mels + 2; ++i)
    edges[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (cfg.n_mels + 1));

  Matrix fb(cfg.n_mels, n_bins);
  for (int m = 0; m < cfg.n_mels; ++m) {
    const double lo = edges[m], mid = edges[m + 1], hi = edges[m + 2];
    for (int bin = 0; bin < n_bins; ++bin) {
      const double f = static_cast<double>(bin) * cfg.sample_rate / cfg.fft_size;
      double w = 0;
      if (f >= lo && f <= mid && mid > lo) w = (f - lo) / (mid - lo);
      else if (f > mid && f <= hi && hi > mid) w = (hi - f) / (hi - mid);
      fb.at(m, bin) = std::max(0.0, w);
    }
  }
  return fb;
}

Matrix mel_spectrogram(const WavAudio& wav, const MelConfig& cfg) {
  if (wav.sample_rate != cfg.sample_rate)
    throw DomainError("expected " + std::to_string(cfg.sample_rate) +
                      " Hz audio, got " + std::to_string(wav.sample_rate));
  if (cfg.win_length > cfg.fft_size)
    throw DomainError("window longer than the FFT size");
  const std::size_t frames =
      frame_count(wav.samples.size(), cfg.win_length, cfg.hop_length);

  std::vector<double> window(cfg.win_length);
  for (int i = 0; i < cfg.win_length; ++i)
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / cfg.win_length);

  const Matrix fb = mel_filterbank(cfg);
  const int n_bins = cfg.fft_size / 2 + 1;
  const double floor_log = std::log(cfg.log_floor);

  Matrix mel(frames, cfg.n_mels);
  std::vector<std::complex<double>> buf;
  for (std::size_t t = 0; t < frames; ++t) {
    buf.assign(cfg.fft_size, {0.0, 0.0});
    const std::size_t base = t * cfg.hop_length;
    for (int i = 0; i < cfg.win_length; ++i)
      buf[i] = wav.samples[base + i] * window[i];
    fft_radix2(buf);

    for (int m = 0; m < cfg.n_mels; ++m) {
      double energy = 0;
      const double* w = fb.row(m);
      for (int bin = 0; bin < n_bins; ++bin)
        energy += w[bin] * std::abs(buf[bin]);
      mel.at(t, m) = energy <= cfg.log_floor ? floor_log : std::log(energy);
    }
  }
  return mel;
}

Matrix mel_cepstra(const Matrix& log_mel) {
  constexpr int kCepstra = 13;
  const int n_mels = static_cast<int>(log_mel.cols);
  if (n_mels < kCepstra + 1)
    throw DomainError("mel cepstra need at least 14 mel bands");

  const double scale = std::sqrt(2.0 / n_mels);
  Matrix out(log_mel.rows, kCepstra);
  for (std::size_t t = 0; t < log_mel.rows; ++t) {
    const double* row = log_mel.row(t);
    for (int j = 1; j <= kCepstra; ++j) {
      double acc = 0;
      for (int m = 0; m < n_mels; ++m)
        acc += row[m] * std::cos(std::numbers::pi * j * (m + 0.5) / n_mels);
      out.at(t, j - 1) = scale * acc;
    }
  }
  return out;
}

double mcd(const Matrix& ref_cepstra, const Matrix& hyp_cepstra) {
  if (ref_cepstra.cols != hyp_cepstra.cols)
    throw DomainError("cepstra dimension mismatch");
  const std::size_t frames = std::min(ref_cepstra.rows, hyp_cepstra.rows);
  if (frames == 0) throw DomainError("no frames to compare");

  const double k = 10.0 / std::log(10.0);
  double total = 0;
  for (std::size_t t = 0; t < frames; ++t) {
    double sq = 0;
    for (std::size_t d = 0; d < ref_cepstra.cols; ++d) {
      const double diff = ref_cepstra.at(t, d) - hyp_cepstra.at(t, d);
      sq += diff * diff;
    }
    total += k * std::sqrt(2.0 * sq);
  }
  return total / static_cast<double>(frames);
}

}  // namespace mtts
