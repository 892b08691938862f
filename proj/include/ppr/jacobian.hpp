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

#ifndef PPR_JACOBIAN_HPP
#define PPR_JACOBIAN_HPP

#include <Eigen/Core>

#include <vector>

#include "ppr/codec.hpp"
#include "ppr/image.hpp"

namespace ppr {

// Step lengths for central-difference derivative estimation; the estimate is
// averaged over all of them.
class StepSet {
 public:
  explicit StepSet(std::vector<double> deltas);

  // {0.1*s, 0.2*s, ..., 0.5*s} for an effective step size s.
  static StepSet scaled_default(double effective_step);

  const std::vector<double>& deltas() const { return deltas_; }
  std::size_t size() const { return deltas_.size(); }

 private:
  std::vector<double> deltas_;
};

// Blockwise affine model of a codec around a base point:
//   evaluate(x) = base_value + J * (x - base_point),
// where J is block-diagonal over `grid` and base_value approximates (or
// equals) the codec output at the base point.
class LinearizedCodec {
 public:
  LinearizedCodec(BlockGrid grid, ImageBuffer base_point, ImageBuffer base_value,
                  std::vector<Eigen::MatrixXd> blocks);

  ImageBuffer evaluate(const ImageBuffer& x) const;

  const BlockGrid& grid() const { return grid_; }
  const ImageBuffer& base_point() const { return base_point_; }
  const ImageBuffer& base_value() const { return base_value_; }
  std::size_t block_count() const { return blocks_.size(); }
  const Eigen::MatrixXd& block(std::size_t index) const { return blocks_.at(index); }

 private:
  BlockGrid grid_;
  ImageBuffer base_point_;
  ImageBuffer base_value_;
  std::vector<Eigen::MatrixXd> blocks_;
};

// One column of the codec Jacobian at z: central differences averaged over
// the step set, as a full image-length vector. When the codec declares block
// structure, entries outside the perturbed pixel's block are exactly zero and
// are not computed.
Eigen::VectorXd estimate_column(const Codec& codec, const ImageBuffer& z,
                                std::size_t pixel, const StepSet& steps);

// Block-diagonal Jacobian around z, batched: within-block position p of every
// block is perturbed simultaneously, so the codec runs exactly
// 2 * |steps| * max_block_pixels times regardless of image size. The caller
// supplies base_value = codec.apply(z) (typically already computed).
// `threads` > 1 distributes the (position, step) batches; results are
// identical regardless of scheduling.
LinearizedCodec estimate_block_jacobian(const Codec& codec, const ImageBuffer& z,
                                        const ImageBuffer& base_value,
                                        const BlockGrid& grid, const StepSet& steps,
                                        int threads = 1);

}  // namespace ppr

#endif  // PPR_JACOBIAN_HPP
