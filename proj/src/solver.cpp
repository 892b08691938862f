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

#include "ppr/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace ppr {

void SolverConfig::validate() const {
  if (!(lambda > 0.0)) throw std::invalid_argument("SolverConfig: lambda must be positive");
  if (!(beta > 0.0)) throw std::invalid_argument("SolverConfig: beta must be positive");
  if (mu < 0.0) throw std::invalid_argument("SolverConfig: mu must be non-negative");
  if (max_iters < 1) throw std::invalid_argument("SolverConfig: max_iters must be >= 1");
  if (!(stop_threshold > 0.0)) {
    throw std::invalid_argument("SolverConfig: stop_threshold must be positive");
  }
  if (block_height < 1 || block_width < 1) {
    throw std::invalid_argument("SolverConfig: block shape must be positive");
  }
  if (!(sigma_scale > 0.0)) {
    throw std::invalid_argument("SolverConfig: sigma_scale must be positive");
  }
}

ImageBuffer x_step(const LinearizedCodec& lin, const ImageBuffer& y,
                   const ImageBuffer& x_tilde, const ImageBuffer& x_prev,
                   double lambda, double mu, int threads) {
  if (!y.same_shape(x_tilde) || !y.same_shape(x_prev) ||
      !y.same_shape(lin.base_point())) {
    throw std::invalid_argument("x_step: shape mismatch");
  }
  if (!(lambda > 0.0 || mu > 0.0) || lambda < 0.0 || mu < 0.0) {
    throw std::invalid_argument("x_step: need lambda > 0 or mu > 0");
  }

  const BlockGrid& grid = lin.grid();
  ImageBuffer out = y;

  auto solve_block = [&](std::size_t i, ImageBuffer& dst) {
    const Eigen::MatrixXd& jac = lin.block(i);
    const Eigen::VectorXd yb = extract_block(y, grid, i);
    const Eigen::VectorXd x0b = extract_block(lin.base_point(), grid, i);
    const Eigen::VectorXd v0b = extract_block(lin.base_value(), grid, i);
    const Eigen::VectorXd xtb = extract_block(x_tilde, grid, i);
    const Eigen::VectorXd xpb = extract_block(x_prev, grid, i);

    const Eigen::VectorXd d = v0b - jac * x0b;  // affine offset of the model
    Eigen::MatrixXd normal = 2.0 * jac.transpose() * jac;
    normal.diagonal().array() += lambda + 2.0 * mu;
    const Eigen::VectorXd rhs =
        2.0 * jac.transpose() * (yb - d) + lambda * xtb + 2.0 * mu * xpb;

    const Eigen::VectorXd xb = normal.ldlt().solve(rhs);
    const double resid = (normal * xb - rhs).norm();
    if (resid > 1e-9 * std::max(1.0, rhs.norm())) {
      throw std::runtime_error("x_step: normal equations solved poorly (residual " +
                               std::to_string(resid) + ")");
    }
    insert_block(dst, grid, i, xb);
  };

  const std::size_t nblocks = grid.block_count();
  if (threads <= 1 || nblocks <= 1) {
    for (std::size_t i = 0; i < nblocks; ++i) solve_block(i, out);
  } else {
    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(threads), nblocks));
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = static_cast<std::size_t>(w); i < nblocks;
               i += static_cast<std::size_t>(workers)) {
            solve_block(i, out);
          }
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  return out;
}

ImageBuffer v_step(const Denoiser& denoiser, const ImageBuffer& v_tilde,
                   double strength, double sigma_scale) {
  if (!(strength > 0.0)) throw std::invalid_argument("v_step: strength must be positive");
  ImageBuffer out = denoiser.denoise(v_tilde, sigma_scale * std::sqrt(strength));
  if (!out.same_shape(v_tilde)) {
    throw std::runtime_error("v_step: denoiser changed image dimensions");
  }
  return out;
}

RunResult run(const Codec& codec, const ImageBuffer& y, const Denoiser& denoiser,
              const SolverConfig& cfg) {
  cfg.validate();

  const BlockGrid grid(y.height(), y.width(), cfg.block_height, cfg.block_width);
  const Linearizer linearize =
      cfg.linearizer
          ? cfg.linearizer
          : Linearizer([](const Codec& c, const ImageBuffer& z,
                          const ImageBuffer& z_compressed, const BlockGrid& g,
                          const StepSet& s, int threads) {
              return estimate_block_jacobian(c, z, z_compressed, g, s, threads);
            });

  SolverState state{y, y, ImageBuffer(y.height(), y.width(), 0.0)};

  auto fail = [&state](const std::string& stage, const std::exception& e) -> SolverError {
    return SolverError(stage + ": " + e.what(), state);
  };

  for (int i = 1; i <= cfg.max_iters; ++i) {
    try {
      const ImageBuffer compressed = codec.apply(state.x_hat);
      const LinearizedCodec lin =
          linearize(codec, state.x_hat, compressed, grid, cfg.steps, cfg.threads);

      ImageBuffer x_tilde = state.v_hat;
      x_tilde.array() -= state.dual.array();

      ImageBuffer x_next =
          x_step(lin, y, x_tilde, state.x_hat, cfg.lambda, cfg.mu, cfg.threads);
      if (!x_next.all_finite()) throw std::runtime_error("non-finite data iterate");

      ImageBuffer v_tilde = x_next;
      v_tilde.array() += state.dual.array();
      ImageBuffer v_next =
          v_step(denoiser, v_tilde, cfg.beta / cfg.lambda, cfg.sigma_scale);
      if (!v_next.all_finite()) throw std::runtime_error("non-finite denoised iterate");

      ImageBuffer dual_next = state.dual;
      dual_next.array() += x_next.array() - v_next.array();

      const double delta_u =
          (dual_next.array() - state.dual.array()).abs().mean();

      state.x_hat = std::move(x_next);
      state.v_hat = std::move(v_next);
      state.dual = std::move(dual_next);
      state.iterations = i;
      state.delta_u_history.push_back(delta_u);

      const ImageBuffer recompressed = codec.apply(state.x_hat);
      state.objective_history.push_back(
          (y.array() - recompressed.array()).square().sum());

      if (cfg.record_iterates) {
        state.iterates.push_back({state.x_hat, state.v_hat, state.dual});
      }
    } catch (const SolverError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail("iteration " + std::to_string(i), e);
    }

    const auto& du = state.delta_u_history;
    if (du.back() < cfg.stop_threshold) break;
    if (du.size() >= 2 && du.back() > du[du.size() - 2]) break;
  }

  RunResult result{cfg.output_iterate == SolverConfig::Output::denoised ? state.v_hat
                                                                        : state.x_hat,
                   std::move(state)};
  if (cfg.clip_output) result.restored.clip(0.0, 255.0);
  return result;
}

}  // namespace ppr
