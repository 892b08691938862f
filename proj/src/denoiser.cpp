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

#include "ppr/denoiser.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "ppr/dct.hpp"
#include "ppr/io.hpp"
#include "ppr/subprocess.hpp"

namespace ppr {

namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("denoise: sigma must be positive and finite");
  }
}

// Half-sample mirror: ... 1 0 | 0 1 2 ... n-1 | n-1 n-2 ...
int reflect(int i, int n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

}  // namespace

ImageBuffer IdentityDenoiser::denoise(const ImageBuffer& img, double sigma) const {
  require_sigma(sigma);
  return img;
}

GaussianBlurDenoiser::GaussianBlurDenoiser(double width_factor, double min_width,
                                           double max_width)
    : width_factor_(width_factor), min_width_(min_width), max_width_(max_width) {
  if (!(width_factor > 0.0) || !(min_width > 0.0) || !(max_width >= min_width)) {
    throw std::invalid_argument("GaussianBlurDenoiser: bad width parameters");
  }
}

double GaussianBlurDenoiser::kernel_width(double sigma) const {
  return std::clamp(width_factor_ * sigma, min_width_, max_width_);
}

ImageBuffer GaussianBlurDenoiser::denoise(const ImageBuffer& img, double sigma) const {
  require_sigma(sigma);
  const double w = kernel_width(sigma);
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * w)));

  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[static_cast<std::size_t>(i + radius)] = std::exp(-0.5 * i * i / (w * w));
    sum += kernel[static_cast<std::size_t>(i + radius)];
  }
  for (double& k : kernel) k /= sum;

  const int h = img.height();
  const int wd = img.width();
  ImageBuffer tmp(h, wd);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < wd; ++c) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        acc += kernel[static_cast<std::size_t>(i + radius)] * img(r, reflect(c + i, wd));
      }
      tmp(r, c) = acc;
    }
  }
  ImageBuffer out(h, wd);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < wd; ++c) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        acc += kernel[static_cast<std::size_t>(i + radius)] * tmp(reflect(r + i, h), c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

DctThresholdDenoiser::DctThresholdDenoiser(double threshold_factor, int patch_size)
    : threshold_factor_(threshold_factor), patch_size_(patch_size) {
  if (!(threshold_factor > 0.0) || patch_size < 1) {
    throw std::invalid_argument("DctThresholdDenoiser: bad parameters");
  }
}

ImageBuffer DctThresholdDenoiser::denoise(const ImageBuffer& img, double sigma) const {
  require_sigma(sigma);
  const int h = img.height();
  const int w = img.width();
  const int p = std::min({patch_size_, h, w});
  const Eigen::MatrixXd t = dct_matrix(p);
  const double threshold = threshold_factor_ * sigma;

  ImageBuffer acc(h, w, 0.0);
  ImageBuffer weight(h, w, 0.0);
  Eigen::MatrixXd patch(p, p);
  for (int r0 = 0; r0 + p <= h; ++r0) {
    for (int c0 = 0; c0 + p <= w; ++c0) {
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) patch(r, c) = img(r0 + r, c0 + c);
      Eigen::MatrixXd coef = t * patch * t.transpose();
      for (int r = 0; r < p; ++r) {
        for (int c = 0; c < p; ++c) {
          if ((r != 0 || c != 0) && std::abs(coef(r, c)) < threshold) coef(r, c) = 0.0;
        }
      }
      patch = t.transpose() * coef * t;
      for (int r = 0; r < p; ++r) {
        for (int c = 0; c < p; ++c) {
          acc(r0 + r, c0 + c) += patch(r, c);
          weight(r0 + r, c0 + c) += 1.0;
        }
      }
    }
  }
  ImageBuffer out(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      out(r, c) = acc(r, c) / weight(r, c);
    }
  }
  return out;
}

SubprocessDenoiser::SubprocessDenoiser(std::string command_template,
                                       std::filesystem::path workdir,
                                       double timeout_seconds)
    : command_template_(std::move(command_template)),
      workdir_(std::move(workdir)),
      timeout_seconds_(timeout_seconds) {
  if (command_template_.find("{in}") == std::string::npos ||
      command_template_.find("{out}") == std::string::npos) {
    throw std::invalid_argument("SubprocessDenoiser: template needs {in} and {out}");
  }
  if (!(timeout_seconds > 0.0)) {
    throw std::invalid_argument("SubprocessDenoiser: timeout must be positive");
  }
}

ImageBuffer SubprocessDenoiser::denoise(const ImageBuffer& img, double sigma) const {
  require_sigma(sigma);
  const auto in_path = unique_temp_path("-dn-in.pgm");
  const auto out_path = unique_temp_path("-dn-out.pgm");
  struct Guard {
    std::filesystem::path a, b;
    ~Guard() {
      std::error_code ec;
      std::filesystem::remove(a, ec);
      std::filesystem::remove(b, ec);
    }
  } guard{in_path, out_path};

  write_pgm(img, in_path);
  char sig[32];
  std::snprintf(sig, sizeof sig, "%.17g", sigma);
  const std::string cmd = substitute_placeholders(
      command_template_,
      {{"in", in_path.string()}, {"out", out_path.string()}, {"sigma", sig}});
  const int status = run_command(cmd, workdir_, timeout_seconds_);
  if (status != 0) {
    throw SubprocessError(SubprocessError::Kind::nonzero_exit,
                          "denoiser command exited with status " +
                              std::to_string(status) + ": " + cmd);
  }
  ImageBuffer result = [&] {
    try {
      return read_pgm(out_path);
    } catch (const IoError& e) {
      throw SubprocessError(SubprocessError::Kind::bad_output,
                            "denoiser output unreadable: " + std::string(e.what()));
    }
  }();
  if (!result.same_shape(img)) {
    throw SubprocessError(SubprocessError::Kind::shape_mismatch,
                          "denoiser changed image dimensions");
  }
  return result;
}

std::string SubprocessDenoiser::descriptor() const {
  return "subprocess \"" + command_template_ + "\"";
}

}  // namespace ppr
