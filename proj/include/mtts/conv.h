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

#ifndef MTTS_CONV_H_
#define MTTS_CONV_H_

#include <vector>

#include "mtts/matrix.h"
#include "mtts/rng.h"

namespace mtts {

enum class Activation { kIdentity, kRelu };

// 1-D convolution over a T x in_ch sequence with zero padding. Output rows
// number (T + 2p - h)/s + 1. Weights are logically [out_ch][kernel][in_ch];
// the storage layout is an implementation detail behind weight_at().
struct Conv1dLayer {
  int in_ch = 0;
  int out_ch = 0;
  int kernel = 1;
  int padding = 0;
  int stride = 1;
  Activation activation = Activation::kIdentity;
  std::vector<double> weights;  // layout [kernel][in_ch][out_ch]
  std::vector<double> bias;     // [out_ch]

  Conv1dLayer() = default;
  Conv1dLayer(int in, int out, int h, int p, int s, Activation act);

  double& weight_at(int oc, int k, int ic) {
    return weights[(static_cast<std::size_t>(k) * in_ch + ic) * out_ch + oc];
  }
  double weight_at(int oc, int k, int ic) const {
    return weights[(static_cast<std::size_t>(k) * in_ch + ic) * out_ch + oc];
  }

  // Uniform on (-1/sqrt(in_ch*kernel), +1/sqrt(in_ch*kernel)). Draw order is
  // part of the reproducibility contract: weights in (oc, k, ic) order, then
  // biases in oc order.
  void init_uniform(XorShift64Star& rng);
};

// Output length (T + 2p - h)/s + 1; throws DomainError when it is < 1.
int conv1d_output_length(int in_len, int kernel, int padding, int stride);

// Feature count for the unpadded single-kernel case: seq_len - h + 1.
int feature_count_no_padding(int seq_len, int kernel);

Matrix conv1d_forward(const Matrix& input, const Conv1dLayer& layer);

// Forward that also returns the pre-activation map (needed for backprop).
Matrix conv1d_forward_cached(const Matrix& input, const Conv1dLayer& layer,
                             Matrix* preactivation);

// Parallel up/down convolution branches whose averaged outputs preserve the
// input shape: every up layer satisfies 2p = h - 1 at stride 1, and every
// down layer is a 1x1 projection back to the input width.
struct LocalConvBranch {
  Conv1dLayer up;    // channels -> hidden, ReLU
  Conv1dLayer down;  // hidden -> channels, identity
};

struct LocalConvModule {
  std::vector<LocalConvBranch> branches;

  // Branch kernels 9/5/3 with paddings 4/2/1 (truncated to n_branches; a
  // single branch keeps only the 9-tap kernel).
  static LocalConvModule make(int channels, int hidden, int n_branches = 3);

  // Branch order: up then down within each branch, branches in kernel order.
  void init_uniform(XorShift64Star& rng);

  int channels() const { return branches.front().up.in_ch; }

  // O = (1/n) * sum_i down_i(relu_up_i(input)); same shape as input.
  Matrix forward(const Matrix& input) const;
};

struct Conv1dGradients {
  std::vector<double> weights;  // same layout as Conv1dLayer::weights
  std::vector<double> bias;
};

struct LocalConvGradients {
  struct Branch {
    Conv1dGradients up;
    Conv1dGradients down;
  };
  std::vector<Branch> branches;
  Matrix d_input;
  double loss = 0.0;  // 0.5 * ||forward(input)||^2
};

// Analytic gradients of L = 0.5 * ||module.forward(input)||^2 with respect
// to every weight, bias, and the input. relu'(0) is taken as 0.
LocalConvGradients local_conv_gradient(const Matrix& input,
                                       const LocalConvModule& module);

}  // namespace mtts

#endif  // MTTS_CONV_H_
