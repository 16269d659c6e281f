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

#include "mtts/conv.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace mtts {

namespace {

constexpr int kRowTile = 4;
constexpr int kColTile = 16;

// Below this many multiply-accumulates the plain loop wins.
constexpr std::int64_t kTiledPathThreshold = 1 << 16;

double apply_activation(double v, Activation act) {
  return act == Activation::kRelu ? (v > 0 ? v : 0.0) : v;
}

}  // namespace

Conv1dLayer::Conv1dLayer(int in, int out, int h, int p, int s, Activation act)
    : in_ch(in), out_ch(out), kernel(h), padding(p), stride(s), activation(act) {
  if (in <= 0 || out <= 0 || h <= 0 || s <= 0 || p < 0)
    throw DomainError("invalid convolution layer geometry");
  weights.assign(static_cast<std::size_t>(h) * in * out, 0.0);
  bias.assign(out, 0.0);
}

void Conv1dLayer::init_uniform(XorShift64Star& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in_ch) * kernel);
  for (int oc = 0; oc < out_ch; ++oc)
    for (int k = 0; k < kernel; ++k)
      for (int ic = 0; ic < in_ch; ++ic)
        weight_at(oc, k, ic) = rng.uniform(-bound, bound);
  for (int oc = 0; oc < out_ch; ++oc) bias[oc] = rng.uniform(-bound, bound);
}

int conv1d_output_length(int in_len, int kernel, int padding, int stride) {
  if (in_len <= 0) throw DomainError("convolution input is empty");
  const int span = in_len + 2 * padding - kernel;
  if (span < 0)
    throw DomainError("kernel of size " + std::to_string(kernel) +
                      " exceeds padded input length " +
                      std::to_string(in_len + 2 * padding));
  return span / stride + 1;
}

int feature_count_no_padding(int seq_len, int kernel) {
  if (seq_len < kernel)
    throw DomainError("sequence shorter than the kernel");
  return seq_len - kernel + 1;
}

namespace {

// Register-tiled path: treat the convolution as `kernel` shifted matrix
// products, accumulate a kRowTile x kColTile block across (k, ic), and
// write each output element exactly once. Channel blocks are independent,
// so the OpenMP split cannot change any accumulation order.
void conv_forward_tiled(const Matrix& input, const Conv1dLayer& layer,
                        Matrix& out) {
  const int t_out = static_cast<int>(out.rows);
  const int t_in = static_cast<int>(input.rows);
  const int in_ch = layer.in_ch;
  const int out_ch = layer.out_ch;
  const int p = layer.padding;
  const int s = layer.stride;
  const int n_blocks = (out_ch + kColTile - 1) / kColTile;

#pragma omp parallel for schedule(static)
  for (int block = 0; block < n_blocks; ++block) {
    const int oc0 = block * kColTile;
    const int ocw = std::min(kColTile, out_ch - oc0);
    for (int k = 0; k < layer.kernel; ++k) {
      const double* wk = &layer.weights[static_cast<std::size_t>(k) * in_ch * out_ch + oc0];
      // Output rows whose input row t*s + k - p is in range.
      int tlo = 0;
      while (tlo < t_out && tlo * s + k - p < 0) ++tlo;
      int thi = t_out;
      while (thi > tlo && (thi - 1) * s + k - p >= t_in) --thi;
      for (int t = tlo; t < thi; t += kRowTile) {
        const int tb = std::min(kRowTile, thi - t);
        double acc[kRowTile][kColTile] = {{0}};
        if (ocw == kColTile) {
          for (int ic = 0; ic < in_ch; ++ic) {
            const double* __restrict w = wk + static_cast<std::size_t>(ic) * out_ch;
            for (int r = 0; r < tb; ++r) {
              const double a = input.at((t + r) * s + k - p, ic);
              for (int c = 0; c < kColTile; ++c) acc[r][c] += a * w[c];
            }
          }
        } else {
          for (int ic = 0; ic < in_ch; ++ic) {
            const double* __restrict w = wk + static_cast<std::size_t>(ic) * out_ch;
            for (int r = 0; r < tb; ++r) {
              const double a = input.at((t + r) * s + k - p, ic);
              for (int c = 0; c < ocw; ++c) acc[r][c] += a * w[c];
            }
          }
        }
        for (int r = 0; r < tb; ++r) {
          double* orow = out.row(t + r) + oc0;
          for (int c = 0; c < ocw; ++c) orow[c] += acc[r][c];
        }
      }
    }
  }
}

void conv_forward_plain(const Matrix& input, const Conv1dLayer& layer,
                        Matrix& out) {
  const int t_in = static_cast<int>(input.rows);
  for (std::size_t t = 0; t < out.rows; ++t) {
    for (int k = 0; k < layer.kernel; ++k) {
      const int src = static_cast<int>(t) * layer.stride + k - layer.padding;
      if (src < 0 || src >= t_in) continue;
      const double* arow = input.row(src);
      const double* wk =
          &layer.weights[static_cast<std::size_t>(k) * layer.in_ch * layer.out_ch];
      double* orow = out.row(t);
      for (int ic = 0; ic < layer.in_ch; ++ic) {
        const double a = arow[ic];
        const double* w = wk + static_cast<std::size_t>(ic) * layer.out_ch;
        for (int oc = 0; oc < layer.out_ch; ++oc) orow[oc] += a * w[oc];
      }
    }
  }
}

}  // namespace

Matrix conv1d_forward_cached(const Matrix& input, const Conv1dLayer& layer,
                             Matrix* preactivation) {
  if (static_cast<int>(input.cols) != layer.in_ch)
    throw DomainError("convolution input has " + std::to_string(input.cols) +
                      " channels, layer expects " + std::to_string(layer.in_ch));
  const int t_out = conv1d_output_length(static_cast<int>(input.rows),
                                         layer.kernel, layer.padding, layer.stride);

  Matrix out(t_out, layer.out_ch);
  const std::int64_t work = static_cast<std::int64_t>(t_out) * layer.out_ch *
                            layer.kernel * layer.in_ch;
  if (work >= kTiledPathThreshold && layer.out_ch >= kColTile)
    conv_forward_tiled(input, layer, out);
  else
    conv_forward_plain(input, layer, out);

  for (std::size_t t = 0; t < out.rows; ++t) {
    double* orow = out.row(t);
    for (int oc = 0; oc < layer.out_ch; ++oc) orow[oc] += layer.bias[oc];
  }
  if (preactivation) *preactivation = out;
  for (double& v : out.data) v = apply_activation(v, layer.activation);
  return out;
}

Matrix conv1d_forward(const Matrix& input, const Conv1dLayer& layer) {
  return conv1d_forward_cached(input, layer, nullptr);
}

LocalConvModule LocalConvModule::make(int channels, int hidden, int n_branches) {
  if (n_branches < 1 || n_branches > 3)
    throw DomainError("local convolution supports 1..3 branches");
  static constexpr int kKernels[3] = {9, 5, 3};
  LocalConvModule module;
  for (int i = 0; i < n_branches; ++i) {
    const int h = kKernels[i];
    LocalConvBranch branch;
    branch.up = Conv1dLayer(channels, hidden, h, (h - 1) / 2, 1, Activation::kRelu);
    branch.down = Conv1dLayer(hidden, channels, 1, 0, 1, Activation::kIdentity);
    module.branches.push_back(std::move(branch));
  }
  return module;
}

void LocalConvModule::init_uniform(XorShift64Star& rng) {
  for (LocalConvBranch& branch : branches) {
    branch.up.init_uniform(rng);
    branch.down.init_uniform(rng);
  }
}

Matrix LocalConvModule::forward(const Matrix& input) const {
  if (branches.empty()) throw DomainError("local convolution has no branches");
  Matrix sum(input.rows, input.cols);
  for (const LocalConvBranch& branch : branches) {
    const Matrix fused = conv1d_forward(conv1d_forward(input, branch.up), branch.down);
    if (!fused.same_shape(sum))
      throw DomainError("local convolution branch changed the sequence shape");
    for (std::size_t i = 0; i < sum.data.size(); ++i) sum.data[i] += fused.data[i];
  }
  const double inv = 1.0 / static_cast<double>(branches.size());
  for (double& v : sum.data) v *= inv;
  return sum;
}

namespace {

// Backward pass of one convolution layer. d_post is dL/d(activation output);
// returns dL/d(input) and fills the weight/bias gradients.
Matrix conv1d_backward(const Matrix& input, const Conv1dLayer& layer,
                       const Matrix& preact, const Matrix& d_post,
                       Conv1dGradients& grads) {
  grads.weights.assign(layer.weights.size(), 0.0);
  grads.bias.assign(layer.bias.size(), 0.0);

  Matrix d_pre = d_post;
  if (layer.activation == Activation::kRelu) {
    for (std::size_t i = 0; i < d_pre.data.size(); ++i)
      if (preact.data[i] <= 0) d_pre.data[i] = 0.0;  // relu'(0) = 0
  }

  const int t_in = static_cast<int>(input.rows);
  Matrix d_input(input.rows, input.cols);
  for (std::size_t t = 0; t < d_pre.rows; ++t) {
    const double* drow = d_pre.row(t);
    for (int oc = 0; oc < layer.out_ch; ++oc) grads.bias[oc] += drow[oc];
    for (int k = 0; k < layer.kernel; ++k) {
      const int src = static_cast<int>(t) * layer.stride + k - layer.padding;
      if (src < 0 || src >= t_in) continue;
      const double* arow = input.row(src);
      double* di_row = d_input.row(src);
      const std::size_t base = static_cast<std::size_t>(k) * layer.in_ch * layer.out_ch;
      for (int ic = 0; ic < layer.in_ch; ++ic) {
        const double a = arow[ic];
        const double* w = &layer.weights[base + static_cast<std::size_t>(ic) * layer.out_ch];
        double* gw = &grads.weights[base + static_cast<std::size_t>(ic) * layer.out_ch];
        double di = 0;
        for (int oc = 0; oc < layer.out_ch; ++oc) {
          gw[oc] += drow[oc] * a;
          di += drow[oc] * w[oc];
        }
        di_row[ic] += di;
      }
    }
  }
  return d_input;
}

}  // namespace

LocalConvGradients local_conv_gradient(const Matrix& input,
                                       const LocalConvModule& module) {
  const std::size_t n = module.branches.size();

  // Forward with caches.
  std::vector<Matrix> up_pre(n), up_out(n), down_pre(n), down_out(n);
  Matrix fused(input.rows, input.cols);
  for (std::size_t i = 0; i < n; ++i) {
    up_out[i] = conv1d_forward_cached(input, module.branches[i].up, &up_pre[i]);
    down_out[i] =
        conv1d_forward_cached(up_out[i], module.branches[i].down, &down_pre[i]);
    for (std::size_t k = 0; k < fused.data.size(); ++k)
      fused.data[k] += down_out[i].data[k];
  }
  const double inv = 1.0 / static_cast<double>(n);
  for (double& v : fused.data) v *= inv;

  LocalConvGradients grads;
  grads.branches.resize(n);
  grads.d_input = Matrix(input.rows, input.cols);
  for (double v : fused.data) grads.loss += 0.5 * v * v;

  // dL/dO = O for L = 0.5*||O||^2; each branch sees dO scaled by 1/n.
  Matrix d_branch = fused;
  for (double& v : d_branch.data) v *= inv;

  for (std::size_t i = 0; i < n; ++i) {
    const Matrix d_up_out =
        conv1d_backward(up_out[i], module.branches[i].down, down_pre[i],
                        d_branch, grads.branches[i].down);
    const Matrix d_in = conv1d_backward(input, module.branches[i].up, up_pre[i],
                                        d_up_out, grads.branches[i].up);
    for (std::size_t k = 0; k < grads.d_input.data.size(); ++k)
      grads.d_input.data[k] += d_in.data[k];
  }
  return grads;
}

}  // namespace mtts
