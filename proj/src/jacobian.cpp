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

#include "ppr/jacobian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace ppr {

StepSet::StepSet(std::vector<double> deltas) : deltas_(std::move(deltas)) {
  if (deltas_.empty()) throw std::invalid_argument("StepSet: empty");
  std::set<double> seen;
  for (double d : deltas_) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw std::invalid_argument("StepSet: steps must be positive and finite");
    }
    if (!seen.insert(d).second) {
      throw std::invalid_argument("StepSet: steps must be distinct");
    }
  }
}

StepSet StepSet::scaled_default(double effective_step) {
  std::vector<double> deltas;
  for (int k = 1; k <= 5; ++k) deltas.push_back(0.1 * effective_step * k);
  return StepSet(std::move(deltas));
}

LinearizedCodec::LinearizedCodec(BlockGrid grid, ImageBuffer base_point,
                                 ImageBuffer base_value,
                                 std::vector<Eigen::MatrixXd> blocks)
    : grid_(std::move(grid)),
      base_point_(std::move(base_point)),
      base_value_(std::move(base_value)),
      blocks_(std::move(blocks)) {
  if (!base_point_.same_shape(base_value_) ||
      base_point_.height() != grid_.image_height() ||
      base_point_.width() != grid_.image_width()) {
    throw std::invalid_argument("LinearizedCodec: shape mismatch");
  }
  if (blocks_.size() != grid_.block_count()) {
    throw std::invalid_argument("LinearizedCodec: wrong number of Jacobian blocks");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const int n = grid_.block(i).pixel_count();
    if (blocks_[i].rows() != n || blocks_[i].cols() != n) {
      throw std::invalid_argument("LinearizedCodec: Jacobian block has wrong size");
    }
  }
}

ImageBuffer LinearizedCodec::evaluate(const ImageBuffer& x) const {
  if (!x.same_shape(base_point_)) {
    throw std::invalid_argument("LinearizedCodec::evaluate: shape mismatch");
  }
  ImageBuffer out = base_value_;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Eigen::VectorXd diff =
        extract_block(x, grid_, i) - extract_block(base_point_, grid_, i);
    const Eigen::VectorXd upd =
        extract_block(base_value_, grid_, i) + blocks_[i] * diff;
    insert_block(out, grid_, i, upd);
  }
  return out;
}

Eigen::VectorXd estimate_column(const Codec& codec, const ImageBuffer& z,
                                std::size_t pixel, const StepSet& steps) {
  if (pixel >= z.pixel_count()) {
    throw std::out_of_range("estimate_column: pixel index out of range");
  }
  const int row = static_cast<int>(pixel) / z.width();
  const int col = static_cast<int>(pixel) % z.width();

  // Restrict to the pixel's block when the codec declares independence.
  int r0 = 0, c0 = 0, r1 = z.height(), c1 = z.width();
  if (const auto shape = codec.block_structure()) {
    r0 = (row / shape->height) * shape->height;
    c0 = (col / shape->width) * shape->width;
    r1 = std::min(r0 + shape->height, z.height());
    c1 = std::min(c0 + shape->width, z.width());
  }

  Eigen::VectorXd column = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(z.pixel_count()));
  ImageBuffer zp = z;
  ImageBuffer zm = z;
  for (double delta : steps.deltas()) {
    zp(row, col) = z(row, col) + delta;
    zm(row, col) = z(row, col) - delta;
    const ImageBuffer ip = codec.apply(zp);
    const ImageBuffer im = codec.apply(zm);
    for (int r = r0; r < r1; ++r) {
      for (int c = c0; c < c1; ++c) {
        column[static_cast<Eigen::Index>(r) * z.width() + c] +=
            (ip(r, c) - im(r, c)) / (2.0 * delta);
      }
    }
  }
  zp(row, col) = z(row, col);
  zm(row, col) = z(row, col);
  const double n = static_cast<double>(steps.size());
  for (int r = r0; r < r1; ++r) {
    for (int c = c0; c < c1; ++c) {
      column[static_cast<Eigen::Index>(r) * z.width() + c] /= n;
    }
  }
  return column;
}

LinearizedCodec estimate_block_jacobian(const Codec& codec, const ImageBuffer& z,
                                        const ImageBuffer& base_value,
                                        const BlockGrid& grid, const StepSet& steps,
                                        int threads) {
  if (z.height() != grid.image_height() || z.width() != grid.image_width()) {
    throw std::invalid_argument("estimate_block_jacobian: grid does not match image");
  }
  if (!z.same_shape(base_value)) {
    throw std::invalid_argument("estimate_block_jacobian: base value shape mismatch");
  }

  std::vector<Eigen::MatrixXd> blocks(grid.block_count());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int n = grid.block(i).pixel_count();
    blocks[i] = Eigen::MatrixXd::Zero(n, n);
  }

  const int positions = grid.max_block_pixels();
  const double n_steps = static_cast<double>(steps.size());

  // One batch per within-block position: perturbing that position of every
  // block at once fills column p of every Jacobian block from a single pair
  // of codec runs per step. Batches touch disjoint columns, so they can run
  // on separate threads without changing the result.
  auto run_position = [&](int p) {
    ImageBuffer zp = z;
    ImageBuffer zm = z;
    for (double delta : steps.deltas()) {
      for (const Block& b : grid.blocks()) {
        if (p >= b.pixel_count()) continue;
        const int r = b.row + p % b.height;
        const int c = b.col + p / b.height;
        zp(r, c) = z(r, c) + delta;
        zm(r, c) = z(r, c) - delta;
      }
      const ImageBuffer ip = codec.apply(zp);
      const ImageBuffer im = codec.apply(zm);
      for (std::size_t bi = 0; bi < grid.block_count(); ++bi) {
        const Block& b = grid.block(bi);
        if (p >= b.pixel_count()) continue;
        int k = 0;
        for (int c = 0; c < b.width; ++c) {
          for (int r = 0; r < b.height; ++r) {
            blocks[bi](k++, p) +=
                (ip(b.row + r, b.col + c) - im(b.row + r, b.col + c)) / (2.0 * delta);
          }
        }
      }
      // restore perturbed pixels for the next step
      for (const Block& b : grid.blocks()) {
        if (p >= b.pixel_count()) continue;
        const int r = b.row + p % b.height;
        const int c = b.col + p / b.height;
        zp(r, c) = z(r, c);
        zm(r, c) = z(r, c);
      }
    }
    for (std::size_t bi = 0; bi < grid.block_count(); ++bi) {
      const Block& b = grid.block(bi);
      if (p >= b.pixel_count()) continue;
      blocks[bi].col(p) /= n_steps;
    }
  };

  if (threads <= 1 || positions <= 1) {
    for (int p = 0; p < positions; ++p) run_position(p);
  } else {
    const int workers = std::min(threads, positions);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int p = w; p < positions; p += workers) run_position(p);
      });
    }
    for (auto& t : pool) t.join();
  }

  return LinearizedCodec(grid, z, base_value, std::move(blocks));
}

}  // namespace ppr
