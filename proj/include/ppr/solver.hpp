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

#ifndef PPR_SOLVER_HPP
#define PPR_SOLVER_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ppr/codec.hpp"
#include "ppr/denoiser.hpp"
#include "ppr/image.hpp"
#include "ppr/jacobian.hpp"

namespace ppr {

// Pluggable local-linearization strategy; the default is finite-difference
// block-Jacobian estimation. An analytic alternative exists for the pair
// transform codec (see linearize_pair_rotated).
using Linearizer = std::function<LinearizedCodec(
    const Codec& codec, const ImageBuffer& z, const ImageBuffer& z_compressed,
    const BlockGrid& grid, const StepSet& steps, int threads)>;

struct SolverConfig {
  double lambda = 0.01;  // weight of the split coupling term
  double beta = 1.0;     // regularization weight
  double mu = 0.0;       // proximity weight tying the solution to the
                         // linearization point
  StepSet steps{std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5}};
  int max_iters = 6;
  double stop_threshold = 0.05;  // on the mean absolute dual change
  int block_height = 1;          // Jacobian block shape
  int block_width = 1;
  bool clip_output = true;  // clamp the final image (never the iterates)

  // Which iterate is returned: the denoised estimate (the conventional
  // choice) or the data-fidelity estimate.
  enum class Output { denoised, data };
  Output output_iterate = Output::denoised;

  // Denoiser strength mapping: sigma = sigma_scale * sqrt(beta / lambda).
  double sigma_scale = 1.0;

  // Keep per-iteration snapshots of the three iterates (for logs and tests).
  bool record_iterates = false;

  int threads = 1;

  Linearizer linearizer;  // empty = finite differences

  void validate() const;
};

struct IterationRecord {
  ImageBuffer x_hat;
  ImageBuffer v_hat;
  ImageBuffer dual;  // the value after this iteration's update
};

struct SolverState {
  ImageBuffer x_hat;
  ImageBuffer v_hat;
  ImageBuffer dual;
  int iterations = 0;
  std::vector<double> delta_u_history;    // mean absolute dual change, per iteration
  std::vector<double> objective_history;  // ||y - C(x_hat)||^2, per iteration
  std::vector<IterationRecord> iterates;  // filled when record_iterates is set
};

// A sub-step failure, carrying the last consistent state.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, SolverState state)
      : std::runtime_error(what), state_(std::move(state)) {}
  const SolverState& state() const { return state_; }

 private:
  SolverState state_;
};

// Data-fidelity step: the unique minimizer of
//   ||y - lin(x)||^2 + (lambda/2)||x - x_tilde||^2 + mu ||x - x_prev||^2,
// solved blockwise through the normal equations
//   (2 J^T J + (lambda + 2 mu) I) x = 2 J^T (y - d) + lambda x_tilde + 2 mu x_prev
// with d the affine offset of the linearization. Requires lambda > 0 or
// mu > 0 so the system stays positive definite even for zero Jacobian blocks.
ImageBuffer x_step(const LinearizedCodec& lin, const ImageBuffer& y,
                   const ImageBuffer& x_tilde, const ImageBuffer& x_prev,
                   double lambda, double mu, int threads = 1);

// Regularization step: denoising at noise level sigma_scale * sqrt(strength),
// where strength is beta / lambda.
ImageBuffer v_step(const Denoiser& denoiser, const ImageBuffer& v_tilde,
                   double strength, double sigma_scale = 1.0);

struct RunResult {
  ImageBuffer restored;
  SolverState state;
};

// The full postprocessing loop: starting from x = v = y and a zero dual,
// each iteration re-linearizes the codec around the previous data estimate,
// solves the data-fidelity step, denoises, and updates the dual. Terminates
// when the mean absolute dual change drops below the threshold, fails to
// decrease (from the second iteration on), or max_iters is reached.
RunResult run(const Codec& codec, const ImageBuffer& y, const Denoiser& denoiser,
              const SolverConfig& cfg);

}  // namespace ppr

#endif  // PPR_SOLVER_HPP
