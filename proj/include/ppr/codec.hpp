// Copyright 2026 The ppr Authors. All Rights Reserved.
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

#ifndef PPR_CODEC_HPP
#define PPR_CODEC_HPP

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string>

#include "ppr/image.hpp"

namespace ppr {

// Declared independence structure of a codec: it processes non-overlapping
// blocks of this nominal shape independently.
struct BlockShape {
  int height;
  int width;
};

// Black-box compression-decompression operator. apply() must be deterministic
// and shape-preserving; it is safe to call concurrently. Idempotence on its
// own output is not assumed.
class Codec {
 public:
  virtual ~Codec() = default;

  virtual ImageBuffer apply(const ImageBuffer& x) const = 0;

  // Block shape the codec provably respects, if any.
  virtual std::optional<BlockShape> block_structure() const { return std::nullopt; }

  virtual std::string descriptor() const = 0;
};

// Uniform mid-riser quantization of each sample: the reconstruction is the
// midpoint of the step-width cell containing the sample, optionally shifted
// by a fixed offset.
class ScalarQuantCodec : public Codec {
 public:
  explicit ScalarQuantCodec(double step, double offset = 0.0);

  ImageBuffer apply(const ImageBuffer& x) const override;
  std::optional<BlockShape> block_structure() const override { return BlockShape{1, 1}; }
  std::string descriptor() const override;

  double step() const { return step_; }

 private:
  double step_;
  double offset_;
};

// Transform coding of non-overlapping vertical pixel pairs: a 45-degree
// rotation of each pair, mid-riser quantization of both coefficients with a
// common step, and the inverse rotation. An unpaired last row (odd image
// height) is quantized as a scalar with the same step.
class PairTransformCodec : public Codec {
 public:
  explicit PairTransformCodec(double step);

  ImageBuffer apply(const ImageBuffer& x) const override;
  std::optional<BlockShape> block_structure() const override { return BlockShape{2, 1}; }
  std::string descriptor() const override;

  double step() const { return step_; }
  // The pair rotation (1/sqrt2) [[1,-1],[1,1]].
  static Eigen::Matrix2d rotation();

 private:
  double step_;
};

// JPEG-like 8x8 block coder: orthonormal 2D DCT per block, per-coefficient
// uniform quantization driven by a 64-entry table and a global scale, inverse
// DCT. No entropy coding or bitstream; this is only the compression-
// decompression map. Edge blocks smaller than 8x8 use a DCT of their true
// size and the top-left corner of the table.
class BlockDctCodec : public Codec {
 public:
  static constexpr int kBlockSize = 8;

  // Classic luminance quantization table, scale 1.
  explicit BlockDctCodec(double scale);
  BlockDctCodec(std::array<double, 64> quant_table, double scale);

  ImageBuffer apply(const ImageBuffer& x) const override;
  std::optional<BlockShape> block_structure() const override {
    return BlockShape{kBlockSize, kBlockSize};
  }
  std::string descriptor() const override;

  double scale() const { return scale_; }
  const std::array<double, 64>& quant_table() const { return quant_table_; }
  // Median table entry times the scale; a reasonable effective step size for
  // derivative estimation around this codec.
  double effective_step() const;

 private:
  std::array<double, 64> quant_table_;
  double scale_;
  std::array<Eigen::MatrixXd, kBlockSize> dct_;  // DCT matrices for sizes 1..8
};

// Step size giving an r-bit uniform cover of the [0,256) pixel range.
double scalar_step_for_rate(double bits_per_pixel);

// Step size of the pair coder at a given effective bit-rate, inverting
// rate = 16 - log2(step).
double pair_step_for_rate(double bits_per_pixel);

}  // namespace ppr

#endif  // PPR_CODEC_HPP
