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

#ifndef PPR_IMAGE_HPP
#define PPR_IMAGE_HPP

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <vector>

namespace ppr {

// Real-valued grayscale image, row-major storage, nominal range [0,255].
// Samples are doubles throughout; rounding to integer pixels happens only
// inside codec implementations and PGM output.
class ImageBuffer {
 public:
  ImageBuffer(int height, int width, double fill = 0.0);
  ImageBuffer(int height, int width, std::vector<double> samples);

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t pixel_count() const { return samples_.size(); }

  double operator()(int row, int col) const {
    return samples_[static_cast<std::size_t>(row) * width_ + col];
  }
  double& operator()(int row, int col) {
    return samples_[static_cast<std::size_t>(row) * width_ + col];
  }

  const std::vector<double>& samples() const { return samples_; }

  Eigen::Map<const Eigen::ArrayXd> array() const {
    return {samples_.data(), static_cast<Eigen::Index>(samples_.size())};
  }
  Eigen::Map<Eigen::ArrayXd> array() {
    return {samples_.data(), static_cast<Eigen::Index>(samples_.size())};
  }

  bool same_shape(const ImageBuffer& other) const {
    return height_ == other.height_ && width_ == other.width_;
  }
  bool all_finite() const;

  // Clamps every sample into [lo, hi].
  void clip(double lo, double hi);

  friend bool operator==(const ImageBuffer& a, const ImageBuffer& b) {
    return a.height_ == b.height_ && a.width_ == b.width_ && a.samples_ == b.samples_;
  }

 private:
  int height_;
  int width_;
  std::vector<double> samples_;
};

struct Block {
  int row;
  int col;
  int height;
  int width;
  int pixel_count() const { return height * width; }
};

// Non-overlapping tiling of an image by blocks of a nominal shape, enumerated
// row-major by origin. Trailing blocks at the right/bottom edges keep their
// true (smaller) dimensions instead of being padded.
class BlockGrid {
 public:
  BlockGrid(int image_height, int image_width, int block_height, int block_width);

  int image_height() const { return image_height_; }
  int image_width() const { return image_width_; }
  int block_height() const { return block_height_; }
  int block_width() const { return block_width_; }

  std::size_t block_count() const { return blocks_.size(); }
  const Block& block(std::size_t index) const;
  const std::vector<Block>& blocks() const { return blocks_; }

  // Largest pixel count among the blocks (the nominal block size whenever at
  // least one full block exists).
  int max_block_pixels() const { return max_block_pixels_; }

 private:
  int image_height_;
  int image_width_;
  int block_height_;
  int block_width_;
  int max_block_pixels_;
  std::vector<Block> blocks_;
};

// Reads one block as a vector, column-major within the block. This is the
// vectorization convention shared by the Jacobian and solver code.
Eigen::VectorXd extract_block(const ImageBuffer& img, const BlockGrid& grid,
                              std::size_t index);

// Writes `data` (column-major within the block) back into `img`; the inverse
// of extract_block. All samples outside the block are untouched.
void insert_block(ImageBuffer& img, const BlockGrid& grid, std::size_t index,
                  const Eigen::VectorXd& data);

}  // namespace ppr

#endif  // PPR_IMAGE_HPP
