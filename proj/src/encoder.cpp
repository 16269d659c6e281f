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

#include "mtts/encoder.h"

#include <cmath>
#include <string>

#include "mtts/nn.h"

namespace mtts {

void EmbeddingTable::init_uniform(XorShift64Star& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(weights.cols));
  for (double& v : weights.data) v = rng.uniform(-bound, bound);
}

const double* EmbeddingTable::lookup(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= weights.rows)
    throw DomainError("embedding index " + std::to_string(id) +
                      " out of range [0, " + std::to_string(weights.rows) + ")");
  return weights.row(id);
}

namespace {

Matrix init_linear(int d, XorShift64Star& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix w(d, d);
  for (double& v : w.data) v = rng.uniform(-bound, bound);
  return w;
}

}  // namespace

EncoderWeights EncoderWeights::init(const EncoderConfig& config,
                                    std::size_t phoneme_vocab_size) {
  if (config.d_model <= 0 || config.heads <= 0 || config.blocks < 0 ||
      config.ffn_hidden <= 0)
    throw DomainError("encoder dimensions must be positive");
  if (config.d_model % config.heads != 0)
    throw DomainError("d_model must be divisible by the head count");

  XorShift64Star rng(config.seed);
  EncoderWeights w;
  w.phoneme_table = EmbeddingTable(phoneme_vocab_size, config.d_model);
  w.phoneme_table.init_uniform(rng);
  w.tone_table = EmbeddingTable(6, config.d_model);
  w.tone_table.init_uniform(rng);
  w.label_table = EmbeddingTable(5, config.d_model);
  w.label_table.init_uniform(rng);

  for (int b = 0; b < config.blocks; ++b) {
    EncoderBlock block;
    block.lc_q = LocalConvModule::make(config.d_model, config.ffn_hidden,
                                       config.lc_branches);
    block.lc_q.init_uniform(rng);
    block.lc_v = LocalConvModule::make(config.d_model, config.ffn_hidden,
                                       config.lc_branches);
    block.lc_v.init_uniform(rng);
    block.k_projection = init_linear(config.d_model, rng);
    block.output_projection = init_linear(config.d_model, rng);
    block.ffn_up = Conv1dLayer(config.d_model, config.ffn_hidden,
                               config.ffn_kernel_up,
                               (config.ffn_kernel_up - 1) / 2, 1,
                               Activation::kRelu);
    block.ffn_up.init_uniform(rng);
    block.ffn_down = Conv1dLayer(config.ffn_hidden, config.d_model,
                                 config.ffn_kernel_down,
                                 (config.ffn_kernel_down - 1) / 2, 1,
                                 Activation::kIdentity);
    block.ffn_down.init_uniform(rng);
    block.ln1_gamma.assign(config.d_model, 1.0);
    block.ln1_beta.assign(config.d_model, 0.0);
    block.ln2_gamma.assign(config.d_model, 1.0);
    block.ln2_beta.assign(config.d_model, 0.0);
    w.blocks.push_back(std::move(block));
  }
  return w;
}

Matrix build_input(const PhonemeToneSeq& seq,
                   const std::vector<int>& phoneme_level_numeric,
                   const SyllableTable& vocab, const EncoderWeights& weights,
                   double ln_eps) {
  const std::size_t len = seq.phonemes.size();
  if (len == 0) throw DomainError("encoder input is empty");
  if (seq.tones.size() != len || phoneme_level_numeric.size() != len)
    throw DomainError("phoneme, tone, and label sequences differ in length");

  const std::size_t d = weights.phoneme_table.weights.cols;
  const Matrix pe = sinusoidal_pe(len, d);
  const std::vector<double> gamma(d, 1.0), beta(d, 0.0);

  Matrix h(len, d);
  for (std::size_t t = 0; t < len; ++t) {
    const double* ph = weights.phoneme_table.lookup(vocab.phoneme_id(seq.phonemes[t]));
    const double* tn = weights.tone_table.lookup(seq.tones[t]);
    const double* lb = weights.label_table.lookup(phoneme_level_numeric[t]);
    double* row = h.row(t);
    const double* perow = pe.row(t);
    for (std::size_t c = 0; c < d; ++c) row[c] = ph[c] + tn[c] + lb[c] + perow[c];
  }
  layer_norm_rows(h, gamma, beta, ln_eps);
  return h;
}

Matrix lc_attention(const Matrix& h, const EncoderBlock& block, int heads,
                    double ln_eps, EncoderTrace* trace) {
  const std::size_t t_len = h.rows;
  const std::size_t d = h.cols;
  if (d != block.k_projection.rows)
    throw DomainError("attention input width mismatch");
  if (heads <= 0 || d % heads != 0)
    throw DomainError("head count must divide the model width");
  const std::size_t dh = d / heads;

  const Matrix q = block.lc_q.forward(h);
  const Matrix v = block.lc_v.forward(h);
  const Matrix k = matmul(h, block.k_projection);

  Matrix concat(t_len, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
  for (int head = 0; head < heads; ++head) {
    const std::size_t off = head * dh;
    Matrix scores(t_len, t_len);
    for (std::size_t i = 0; i < t_len; ++i)
      for (std::size_t j = 0; j < t_len; ++j) {
        double dot = 0;
        for (std::size_t c = 0; c < dh; ++c)
          dot += q.at(i, off + c) * k.at(j, off + c);
        scores.at(i, j) = dot * scale;
      }
    softmax_rows(scores);
    for (std::size_t i = 0; i < t_len; ++i)
      for (std::size_t j = 0; j < t_len; ++j) {
        const double wgt = scores.at(i, j);
        for (std::size_t c = 0; c < dh; ++c)
          concat.at(i, off + c) += wgt * v.at(j, off + c);
      }
    if (trace) trace->attention.push_back(std::move(scores));
  }

  Matrix out = matmul(concat, block.output_projection);
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += h.data[i];
  layer_norm_rows(out, block.ln1_gamma, block.ln1_beta, ln_eps);
  if (trace) trace->ln_outputs.push_back(out);
  return out;
}

Matrix encoder_forward(const PhonemeToneSeq& seq,
                       const std::vector<int>& phoneme_level_numeric,
                       const SyllableTable& vocab, const EncoderConfig& config,
                       EncoderTrace* trace) {
  const EncoderWeights weights =
      EncoderWeights::init(config, vocab.phoneme_vocab().size());

  Matrix h = build_input(seq, phoneme_level_numeric, vocab, weights,
                         config.ln_eps);
  for (const EncoderBlock& block : weights.blocks) {
    h = lc_attention(h, block, config.heads, config.ln_eps, trace);

    Matrix ffn = conv1d_forward(conv1d_forward(h, block.ffn_up), block.ffn_down);
    if (!ffn.same_shape(h))
      throw DomainError("feed-forward block changed the sequence shape");
    for (std::size_t i = 0; i < ffn.data.size(); ++i) ffn.data[i] += h.data[i];
    layer_norm_rows(ffn, block.ln2_gamma, block.ln2_beta, config.ln_eps);
    if (trace) trace->ln_outputs.push_back(ffn);
    h = std::move(ffn);
  }
  return h;
}

}  // namespace mtts
