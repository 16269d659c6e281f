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

#include "mtts/nn.h"

#include <algorithm>
#include <cmath>

namespace mtts {

namespace {

void layer_norm_inplace(double* x, std::size_t d, std::span<const double> gamma,
                        std::span<const double> beta, double eps) {
  double mean = 0;
  for (std::size_t i = 0; i < d; ++i) mean += x[i];
  mean /= static_cast<double>(d);
  double var = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const double c = x[i] - mean;
    var += c * c;
  }
  var /= static_cast<double>(d);
  const double scale = 1.0 / std::sqrt(var + eps);
  for (std::size_t i = 0; i < d; ++i)
    x[i] = (x[i] - mean) * scale * gamma[i] + beta[i];
}

}  // namespace

std::vector<double> layer_norm(std::span<const double> x,
                               std::span<const double> gamma,
                               std::span<const double> beta, double eps) {
  if (x.empty()) throw DomainError("layer norm over an empty row");
  if (gamma.size() != x.size() || beta.size() != x.size())
    throw DomainError("layer norm parameter width mismatch");
  std::vector<double> out(x.begin(), x.end());
  layer_norm_inplace(out.data(), out.size(), gamma, beta, eps);
  return out;
}

void layer_norm_rows(Matrix& m, std::span<const double> gamma,
                     std::span<const double> beta, double eps) {
  if (gamma.size() != m.cols || beta.size() != m.cols)
    throw DomainError("layer norm parameter width mismatch");
  for (std::size_t r = 0; r < m.rows; ++r)
    layer_norm_inplace(m.row(r), m.cols, gamma, beta, eps);
}

std::vector<double> softmax(std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  if (out.empty()) return out;
  const double hi = *std::max_element(out.begin(), out.end());
  double sum = 0;
  for (double& v : out) {
    v = std::exp(v - hi);
    sum += v;
  }
  for (double& v : out) v /= sum;
  return out;
}

void softmax_rows(Matrix& m) {
  for (std::size_t r = 0; r < m.rows; ++r) {
    double* row = m.row(r);
    const double hi = *std::max_element(row, row + m.cols);
    double sum = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
      row[c] = std::exp(row[c] - hi);
      sum += row[c];
    }
    for (std::size_t c = 0; c < m.cols; ++c) row[c] /= sum;
  }
}

Matrix sinusoidal_pe(std::size_t len, std::size_t dim) {
  if (dim == 0 || dim % 2 != 0)
    throw DomainError("positional encoding needs an even dimension");
  Matrix pe(len, dim);
  for (std::size_t t = 0; t < len; ++t) {
    for (std::size_t i = 0; i < dim / 2; ++i) {
      const double rate =
          std::pow(10000.0, 2.0 * static_cast<double>(i) / static_cast<double>(dim));
      const double angle = static_cast<double>(t) / rate;
      pe.at(t, 2 * i) = std::sin(angle);
      pe.at(t, 2 * i + 1) = std::cos(angle);
    }
  }
  return pe;
}

}  // namespace mtts
