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

#include "ppr/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ppr {

double psnr(const ImageBuffer& ref, const ImageBuffer& test) {
  if (!ref.same_shape(test)) throw std::invalid_argument("psnr: shape mismatch");
  const double mse = (ref.array() - test.array()).square().mean();
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

namespace {

constexpr int kWindow = 11;
constexpr double kWindowSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

std::vector<double> gaussian_window() {
  std::vector<double> w(kWindow * kWindow);
  double sum = 0.0;
  const int r = kWindow / 2;
  for (int i = 0; i < kWindow; ++i) {
    for (int j = 0; j < kWindow; ++j) {
      const double di = i - r;
      const double dj = j - r;
      w[static_cast<std::size_t>(i) * kWindow + j] =
          std::exp(-(di * di + dj * dj) / (2.0 * kWindowSigma * kWindowSigma));
      sum += w[static_cast<std::size_t>(i) * kWindow + j];
    }
  }
  for (double& v : w) v /= sum;
  return w;
}

}  // namespace

double ssim(const ImageBuffer& ref, const ImageBuffer& test) {
  if (!ref.same_shape(test)) throw std::invalid_argument("ssim: shape mismatch");
  if (ref.height() < kWindow || ref.width() < kWindow) {
    throw std::invalid_argument("ssim: images must be at least 11x11");
  }
  static const std::vector<double> window = gaussian_window();

  double total = 0.0;
  long count = 0;
  for (int r0 = 0; r0 + kWindow <= ref.height(); ++r0) {
    for (int c0 = 0; c0 + kWindow <= ref.width(); ++c0) {
      double mx = 0.0, my = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        for (int j = 0; j < kWindow; ++j) {
          const double w = window[static_cast<std::size_t>(i) * kWindow + j];
          mx += w * ref(r0 + i, c0 + j);
          my += w * test(r0 + i, c0 + j);
        }
      }
      double vx = 0.0, vy = 0.0, cov = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        for (int j = 0; j < kWindow; ++j) {
          const double w = window[static_cast<std::size_t>(i) * kWindow + j];
          const double dx = ref(r0 + i, c0 + j) - mx;
          const double dy = test(r0 + i, c0 + j) - my;
          vx += w * dx * dx;
          vy += w * dy * dy;
          cov += w * dx * dy;
        }
      }
      const double num = (2.0 * mx * my + kC1) * (2.0 * cov + kC2);
      const double den = (mx * mx + my * my + kC1) * (vx + vy + kC2);
      total += num / den;
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

QualityReport compare(const ImageBuffer& ref, const ImageBuffer& test) {
  return {psnr(ref, test), ssim(ref, test)};
}

}  // namespace ppr
