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

#include "ppr/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ppr {

ImageBuffer::ImageBuffer(int height, int width, double fill)
    : height_(height), width_(width) {
  if (height <= 0 || width <= 0) {
    throw std::invalid_argument("ImageBuffer: dimensions must be positive");
  }
  if (!std::isfinite(fill)) {
    throw std::invalid_argument("ImageBuffer: non-finite fill value");
  }
  samples_.assign(static_cast<std::size_t>(height) * width, fill);
}

ImageBuffer::ImageBuffer(int height, int width, std::vector<double> samples)
    : height_(height), width_(width), samples_(std::move(samples)) {
  if (height <= 0 || width <= 0) {
    throw std::invalid_argument("ImageBuffer: dimensions must be positive");
  }
  if (samples_.size() != static_cast<std::size_t>(height) * width) {
    throw std::invalid_argument("ImageBuffer: sample count does not match dimensions");
  }
  if (!all_finite()) {
    throw std::invalid_argument("ImageBuffer: non-finite sample");
  }
}

bool ImageBuffer::all_finite() const {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](double v) { return std::isfinite(v); });
}

void ImageBuffer::clip(double lo, double hi) {
  for (double& v : samples_) v = std::clamp(v, lo, hi);
}

BlockGrid::BlockGrid(int image_height, int image_width, int block_height,
                     int block_width)
    : image_height_(image_height),
      image_width_(image_width),
      block_height_(block_height),
      block_width_(block_width),
      max_block_pixels_(0) {
  if (image_height <= 0 || image_width <= 0) {
    throw std::invalid_argument("BlockGrid: image dimensions must be positive");
  }
  if (block_height <= 0 || block_width <= 0) {
    throw std::invalid_argument("BlockGrid: block dimensions must be positive");
  }
  for (int r = 0; r < image_height; r += block_height) {
    for (int c = 0; c < image_width; c += block_width) {
      Block b{r, c, std::min(block_height, image_height - r),
              std::min(block_width, image_width - c)};
      max_block_pixels_ = std::max(max_block_pixels_, b.pixel_count());
      blocks_.push_back(b);
    }
  }
}

const Block& BlockGrid::block(std::size_t index) const {
  if (index >= blocks_.size()) {
    throw std::out_of_range("BlockGrid: block index " + std::to_string(index) +
                            " out of range");
  }
  return blocks_[index];
}

Eigen::VectorXd extract_block(const ImageBuffer& img, const BlockGrid& grid,
                              std::size_t index) {
  if (img.height() != grid.image_height() || img.width() != grid.image_width()) {
    throw std::invalid_argument("extract_block: grid does not match image");
  }
  const Block& b = grid.block(index);
  Eigen::VectorXd out(b.pixel_count());
  int k = 0;
  for (int c = 0; c < b.width; ++c) {
    for (int r = 0; r < b.height; ++r) {
      out[k++] = img(b.row + r, b.col + c);
    }
  }
  return out;
}

void insert_block(ImageBuffer& img, const BlockGrid& grid, std::size_t index,
                  const Eigen::VectorXd& data) {
  if (img.height() != grid.image_height() || img.width() != grid.image_width()) {
    throw std::invalid_argument("insert_block: grid does not match image");
  }
  const Block& b = grid.block(index);
  if (data.size() != b.pixel_count()) {
    throw std::invalid_argument("insert_block: data length does not match block size");
  }
  int k = 0;
  for (int c = 0; c < b.width; ++c) {
    for (int r = 0; r < b.height; ++r) {
      img(b.row + r, b.col + c) = data[k++];
    }
  }
}

}  // namespace ppr
