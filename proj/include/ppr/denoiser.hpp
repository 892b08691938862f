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

#ifndef PPR_DENOISER_HPP
#define PPR_DENOISER_HPP

#include <Eigen/Core>

#include <filesystem>
#include <string>

#include "ppr/image.hpp"

namespace ppr {

// Gaussian denoiser interface: removes noise of standard deviation `sigma`
// (in pixel units) from the image. Implementations are deterministic and
// shape-preserving.
class Denoiser {
 public:
  virtual ~Denoiser() = default;
  virtual ImageBuffer denoise(const ImageBuffer& img, double sigma) const = 0;
  virtual std::string descriptor() const = 0;
};

class IdentityDenoiser : public Denoiser {
 public:
  ImageBuffer denoise(const ImageBuffer& img, double sigma) const override;
  std::string descriptor() const override { return "identity"; }
};

// Separable Gaussian convolution with reflective boundaries. The kernel
// standard deviation is width_factor * sigma, clamped to [0.3, 5] pixels, so
// even tiny strengths smooth a little.
class GaussianBlurDenoiser : public Denoiser {
 public:
  explicit GaussianBlurDenoiser(double width_factor = 0.5, double min_width = 0.3,
                                double max_width = 5.0);

  ImageBuffer denoise(const ImageBuffer& img, double sigma) const override;
  std::string descriptor() const override { return "gaussian-blur"; }

  double kernel_width(double sigma) const;

 private:
  double width_factor_;
  double min_width_;
  double max_width_;
};

// Sliding-window DCT shrinkage: every (stride 1) 8x8 patch is transformed,
// coefficients below threshold_factor * sigma in magnitude are zeroed (the DC
// coefficient never is), and the reconstructed patches are averaged with
// uniform weights. Images smaller than the patch use their largest fitting
// square.
class DctThresholdDenoiser : public Denoiser {
 public:
  explicit DctThresholdDenoiser(double threshold_factor = 2.7, int patch_size = 8);

  ImageBuffer denoise(const ImageBuffer& img, double sigma) const override;
  std::string descriptor() const override { return "dct-threshold"; }

 private:
  double threshold_factor_;
  int patch_size_;
};

// Denoiser backed by an external command, mirroring SubprocessCodec's PGM
// temp-file protocol with an extra {sigma} placeholder.
class SubprocessDenoiser : public Denoiser {
 public:
  explicit SubprocessDenoiser(std::string command_template,
                              std::filesystem::path workdir = {},
                              double timeout_seconds = 300.0);

  ImageBuffer denoise(const ImageBuffer& img, double sigma) const override;
  std::string descriptor() const override;

 private:
  std::string command_template_;
  std::filesystem::path workdir_;
  double timeout_seconds_;
};

}  // namespace ppr

#endif  // PPR_DENOISER_HPP
