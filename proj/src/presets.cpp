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

#include "ppr/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "ppr/codec.hpp"

namespace ppr {

double preset_step_scale(CodecKind kind, double bitrate) {
  if (!(bitrate > 0.0)) throw std::invalid_argument("preset: rate must be positive");
  switch (kind) {
    case CodecKind::scalar:
      return scalar_step_for_rate(bitrate);
    case CodecKind::pair:
      return pair_step_for_rate(bitrate);
    case CodecKind::dct:
      return 135.0 / bitrate;
  }
  throw std::invalid_argument("preset: unknown codec kind");
}

SolverConfig preset(CodecKind kind, double bitrate, bool rotated_area) {
  if (!(bitrate > 0.0)) throw std::invalid_argument("preset: rate must be positive");

  SolverConfig cfg;
  cfg.steps = StepSet::scaled_default(preset_step_scale(kind, bitrate));
  switch (kind) {
    case CodecKind::scalar:
      cfg.max_iters = 6;
      cfg.lambda = 0.01;
      cfg.beta = 500.0 * std::exp2(-2.0 * bitrate);
      cfg.mu = 5e-4 * std::exp2(0.6 * bitrate);
      cfg.block_height = 1;
      cfg.block_width = 1;
      break;
    case CodecKind::pair:
      cfg.max_iters = 10;
      cfg.lambda = 0.03;
      cfg.beta = (rotated_area ? 500.0 : 200.0) * std::exp2(-0.5 * bitrate);
      cfg.mu = 5e-5 * std::exp2(0.8 * bitrate);
      cfg.block_height = 2;
      cfg.block_width = 1;
      break;
    case CodecKind::dct:
      cfg.max_iters = 8;
      cfg.lambda = 0.15;
      cfg.beta = 2.0 / bitrate;
      cfg.mu = 0.01 * std::exp2(bitrate);
      cfg.block_height = 8;
      cfg.block_width = 8;
      break;
  }
  return cfg;
}

}  // namespace ppr
