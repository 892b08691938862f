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

#include "ppr/analytic_linearization.hpp"

#include <stdexcept>

#include "ppr/quantizer_fit.hpp"

namespace ppr {

LinearizedCodec linearize_pair_rotated(const PairTransformCodec& codec,
                                       const ImageBuffer& z, const BlockGrid& grid,
                                       const StepSet& steps) {
  if (grid.block_height() != 2 || grid.block_width() != 1) {
    throw std::invalid_argument("linearize_pair_rotated: grid must be 2x1");
  }
  if (z.height() != grid.image_height() || z.width() != grid.image_width()) {
    throw std::invalid_argument("linearize_pair_rotated: grid does not match image");
  }

  const ScalarQuantizer quant = ScalarQuantizer::uniform(codec.step());
  const Eigen::Matrix2d u = PairTransformCodec::rotation();
  const double n = static_cast<double>(steps.size());

  ImageBuffer base_value = z;
  std::vector<Eigen::MatrixXd> blocks(grid.block_count());
  for (std::size_t i = 0; i < grid.block_count(); ++i) {
    const Block& b = grid.block(i);
    const Eigen::VectorXd x0 = extract_block(z, grid, i);

    if (b.pixel_count() == 2) {
      const Eigen::Vector2d t0 = u.transpose() * x0;
      Eigen::Matrix2d a_mean = Eigen::Matrix2d::Zero();
      Eigen::Vector2d b_mean = Eigen::Vector2d::Zero();
      for (double delta : steps.deltas()) {
        Eigen::Vector2d gains, offsets;
        for (int k = 0; k < 2; ++k) {
          const LinearFit f = fit_scalar(quant, Interval(t0[k], delta));
          gains[k] = f.slope;
          offsets[k] = f.intercept;
        }
        a_mean += u * gains.asDiagonal() * u.transpose();
        b_mean += u * offsets;
      }
      a_mean /= n;
      b_mean /= n;
      blocks[i] = a_mean;
      insert_block(base_value, grid, i, a_mean * x0 + b_mean);
    } else {
      // unpaired edge pixel: the codec quantizes it as a scalar
      double a_mean = 0.0, b_mean = 0.0;
      for (double delta : steps.deltas()) {
        const LinearFit f = fit_scalar(quant, Interval(x0[0], delta));
        a_mean += f.slope;
        b_mean += f.intercept;
      }
      a_mean /= n;
      b_mean /= n;
      blocks[i] = Eigen::MatrixXd::Constant(1, 1, a_mean);
      insert_block(base_value, grid, i,
                   Eigen::VectorXd::Constant(1, a_mean * x0[0] + b_mean));
    }
  }
  return LinearizedCodec(grid, z, base_value, std::move(blocks));
}

}  // namespace ppr
