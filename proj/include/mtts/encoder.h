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

#ifndef MTTS_ENCODER_H_
#define MTTS_ENCODER_H_

#include <cstdint>
#include <vector>

#include "mtts/conv.h"
#include "mtts/matrix.h"
#include "mtts/pinyin.h"
#include "mtts/rng.h"

namespace mtts {

struct EmbeddingTable {
  Matrix weights;  // vocab_size x dim

  EmbeddingTable() = default;
  EmbeddingTable(std::size_t vocab_size, std::size_t dim)
      : weights(vocab_size, dim) {}

  // Uniform on (-1/sqrt(dim), +1/sqrt(dim)), rows in index order.
  void init_uniform(XorShift64Star& rng);

  const double* lookup(int id) const;
};

struct EncoderConfig {
  int d_model = 256;
  int heads = 2;
  int blocks = 4;
  int ffn_hidden = 1024;
  int ffn_kernel_up = 9;
  int ffn_kernel_down = 1;
  int lc_branches = 3;  // 1 keeps only the 9-tap branch
  // LN stabilizer. Rows here always carry O(1) positional-encoding variance,
  // so this can sit near machine epsilon and normalized rows stay at unit
  // variance to double precision.
  double ln_eps = 1e-12;
  std::uint64_t seed = 1;
};

// One block: self-attention whose query/value feature maps come from local
// convolution (key from a plain linear projection), then a two-layer
// convolutional feed-forward, each followed by residual + layer norm.
struct EncoderBlock {
  LocalConvModule lc_q;
  LocalConvModule lc_v;
  Matrix k_projection;       // d_model x d_model, applied as h * W
  Matrix output_projection;  // d_model x d_model
  Conv1dLayer ffn_up;
  Conv1dLayer ffn_down;
  std::vector<double> ln1_gamma, ln1_beta;
  std::vector<double> ln2_gamma, ln2_beta;
};

struct EncoderWeights {
  EmbeddingTable phoneme_table;  // vocab from the syllable fixture table
  EmbeddingTable tone_table;     // 6 entries, tone codes 0..5
  EmbeddingTable label_table;    // 5 entries, code 0 reserved, 1..4 = S,B,M,E
  std::vector<EncoderBlock> blocks;

  // Deterministic build from config.seed. Draw order is part of the
  // reproducibility contract: phoneme/tone/label tables, then per block
  // lc_q, lc_v, k_projection (row-major), output_projection, ffn_up,
  // ffn_down. Layer-norm parameters are constant 1/0 and consume no draws.
  static EncoderWeights init(const EncoderConfig& config,
                             std::size_t phoneme_vocab_size);
};

// Optional capture of intermediate maps for verification.
struct EncoderTrace {
  std::vector<Matrix> attention;   // one T x T map per (block, head)
  std::vector<Matrix> ln_outputs;  // every post-LN matrix in order
};

// Row t = LN(phoneme_emb + tone_emb + label_emb + positional encoding)
// with unit gamma and zero beta.
Matrix build_input(const PhonemeToneSeq& seq,
                   const std::vector<int>& phoneme_level_numeric,
                   const SyllableTable& vocab, const EncoderWeights& weights,
                   double ln_eps);

Matrix lc_attention(const Matrix& h, const EncoderBlock& block, int heads,
                    double ln_eps, EncoderTrace* trace = nullptr);

Matrix encoder_forward(const PhonemeToneSeq& seq,
                       const std::vector<int>& phoneme_level_numeric,
                       const SyllableTable& vocab, const EncoderConfig& config,
                       EncoderTrace* trace = nullptr);

}  // namespace mtts

#endif  // MTTS_ENCODER_H_
