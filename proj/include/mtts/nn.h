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

#ifndef MTTS_NN_H_
#define MTTS_NN_H_

#include <span>
#include <vector>

#include "mtts/matrix.h"

namespace mtts {

// (x - mean)/sqrt(var + eps) * gamma + beta with population variance.
std::vector<double> layer_norm(std::span<const double> x,
                               std::span<const double> gamma,
                               std::span<const double> beta, double eps = 1e-5);

// Applies layer_norm to every row in place.
void layer_norm_rows(Matrix& m, std::span<const double> gamma,
                     std::span<const double> beta, double eps = 1e-5);

// Max-subtracted exponentiation normalized to sum 1.
std::vector<double> softmax(std::span<const double> x);
void softmax_rows(Matrix& m);

// pe[t][2i] = sin(t / 10000^(2i/d)), pe[t][2i+1] = cos(t / 10000^(2i/d)).
// d must be even.
Matrix sinusoidal_pe(std::size_t len, std::size_t dim);

}  // namespace mtts

#endif  // MTTS_NN_H_
