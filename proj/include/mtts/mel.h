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

#ifndef MTTS_MEL_H_
#define MTTS_MEL_H_

#include <complex>
#include <vector>

#include "mtts/matrix.h"
#include "mtts/wav.h"

namespace mtts {

// 22.05 kHz analysis at 50 ms windows / 12.5 ms hops. Both are non-integer
// in samples (1102.5 / 275.625); they are rounded to the nearest sample
// with ties to even, giving 1102 and 276.
struct MelConfig {
  int sample_rate = 22050;
  int win_length = 1102;
  int hop_length = 276;
  int fft_size = 2048;
  int n_mels = 80;
  double fmin = 0.0;
  double fmax = 8000.0;
  double log_floor = 1e-10;
};

// 1 + floor((n_samples - win) / hop); requires at least one full window.
std::size_t frame_count(std::size_t n_samples, int win_length, int hop_length);

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& buf);

double hz_to_mel(double hz);   // HTK: 2595 * log10(1 + f/700)
double mel_to_hz(double mel);

// Triangular filters, n_mels x (fft_size/2 + 1), evaluated at bin centers.
Matrix mel_filterbank(const MelConfig& cfg);

// Periodic-Hann framed magnitude spectra through the filterbank, natural
// log with floor. Frames x n_mels.
Matrix mel_spectrogram(const WavAudio& wav, const MelConfig& cfg);

// Orthonormal DCT-II across the mel axis, keeping coefficients 1..13
// (c0 excluded). Frames x 13.
Matrix mel_cepstra(const Matrix& log_mel);

// Mean over aligned frames (truncated to the shorter input) of
// (10/ln 10) * sqrt(2 * sum_d (c_d - c'_d)^2), in dB.
double mcd(const Matrix& ref_cepstra, const Matrix& hyp_cepstra);

}  // namespace mtts

#endif  // MTTS_MEL_H_
