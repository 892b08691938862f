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

#include "ppr/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ppr/dct.hpp"

namespace ppr {

namespace {

double midriser(double x, double step) {
  return (std::floor(x / step) + 0.5) * step;
}

std::string format_descriptor(const char* fmt, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a);
  return buf;
}

}  // namespace

ScalarQuantCodec::ScalarQuantCodec(double step, double offset)
    : step_(step), offset_(offset) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(offset)) {
    throw std::invalid_argument("ScalarQuantCodec: step must be positive and finite");
  }
}

ImageBuffer ScalarQuantCodec::apply(const ImageBuffer& x) const {
  ImageBuffer out = x;
  auto samples = out.array();
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    samples[i] = offset_ + midriser(samples[i] - offset_, step_);
  }
  return out;
}

std::string ScalarQuantCodec::descriptor() const {
  return format_descriptor("scalar-quant step=%g", step_) +
         (offset_ != 0.0 ? format_descriptor(" offset=%g", offset_) : "");
}

PairTransformCodec::PairTransformCodec(double step) : step_(step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("PairTransformCodec: step must be positive and finite");
  }
}

Eigen::Matrix2d PairTransformCodec::rotation() {
  Eigen::Matrix2d u;
  const double s = 1.0 / std::sqrt(2.0);
  u << s, -s, s, s;
  return u;
}

ImageBuffer PairTransformCodec::apply(const ImageBuffer& x) const {
  ImageBuffer out = x;
  const double s = 1.0 / std::sqrt(2.0);
  const int paired_rows = x.height() - (x.height() % 2);
  for (int c = 0; c < x.width(); ++c) {
    for (int r = 0; r < paired_rows; r += 2) {
      const double top = x(r, c);
      const double bot = x(r + 1, c);
      // coefficients of U^T [top, bot]
      const double sum = s * (top + bot);
      const double dif = s * (bot - top);
      const double qsum = midriser(sum, step_);
      const double qdif = midriser(dif, step_);
      out(r, c) = s * (qsum - qdif);
      out(r + 1, c) = s * (qsum + qdif);
    }
    if (paired_rows < x.height()) {
      out(x.height() - 1, c) = midriser(x(x.height() - 1, c), step_);
    }
  }
  return out;
}

std::string PairTransformCodec::descriptor() const {
  return format_descriptor("pair-transform step=%g", step_);
}

namespace {

// Classic 8x8 luminance quantization table.
constexpr std::array<double, 64> kLumaTable = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99};

}  // namespace

BlockDctCodec::BlockDctCodec(double scale) : BlockDctCodec(kLumaTable, scale) {}

BlockDctCodec::BlockDctCodec(std::array<double, 64> quant_table, double scale)
    : quant_table_(quant_table), scale_(scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("BlockDctCodec: scale must be positive and finite");
  }
  for (double q : quant_table_) {
    if (!(q > 0.0) || !std::isfinite(q)) {
      throw std::invalid_argument("BlockDctCodec: table entries must be positive");
    }
  }
  for (int n = 1; n <= kBlockSize; ++n) dct_[n - 1] = dct_matrix(n);
}

ImageBuffer BlockDctCodec::apply(const ImageBuffer& x) const {
  ImageBuffer out = x;
  for (int r0 = 0; r0 < x.height(); r0 += kBlockSize) {
    for (int c0 = 0; c0 < x.width(); c0 += kBlockSize) {
      const int bh = std::min(kBlockSize, x.height() - r0);
      const int bw = std::min(kBlockSize, x.width() - c0);
      Eigen::MatrixXd block(bh, bw);
      for (int r = 0; r < bh; ++r)
        for (int c = 0; c < bw; ++c) block(r, c) = x(r0 + r, c0 + c);

      const Eigen::MatrixXd& tr = dct_[bh - 1];
      const Eigen::MatrixXd& tc = dct_[bw - 1];
      Eigen::MatrixXd coef = tr * block * tc.transpose();
      for (int r = 0; r < bh; ++r) {
        for (int c = 0; c < bw; ++c) {
          const double q = scale_ * quant_table_[static_cast<std::size_t>(r) * kBlockSize + c];
          coef(r, c) = std::round(coef(r, c) / q) * q;
        }
      }
      block = tr.transpose() * coef * tc;
      for (int r = 0; r < bh; ++r)
        for (int c = 0; c < bw; ++c) out(r0 + r, c0 + c) = block(r, c);
    }
  }
  return out;
}

std::string BlockDctCodec::descriptor() const {
  return format_descriptor("block-dct 8x8 scale=%g", scale_);
}

double BlockDctCodec::effective_step() const {
  std::array<double, 64> sorted = quant_table_;
  std::nth_element(sorted.begin(), sorted.begin() + 31, sorted.end());
  std::nth_element(sorted.begin() + 32, sorted.begin() + 32, sorted.end());
  return scale_ * 0.5 * (sorted[31] + sorted[32]);
}

double scalar_step_for_rate(double bits_per_pixel) {
  if (!(bits_per_pixel > 0.0)) {
    throw std::invalid_argument("scalar_step_for_rate: rate must be positive");
  }
  return 256.0 / std::exp2(bits_per_pixel);
}

double pair_step_for_rate(double bits_per_pixel) {
  if (!(bits_per_pixel > 0.0)) {
    throw std::invalid_argument("pair_step_for_rate: rate must be positive");
  }
  return std::exp2(16.0 - bits_per_pixel);
}

}  // namespace ppr
