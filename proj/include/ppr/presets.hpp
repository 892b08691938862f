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

#ifndef PPR_PRESETS_HPP
#define PPR_PRESETS_HPP

#include "ppr/solver.hpp"

namespace ppr {

enum class CodecKind { scalar, pair, dct };

// Tuned solver settings per bundled codec at a given bit-rate (bits per
// pixel; the pair codec uses its effective rate 16 - log2(step)). Covers
// lambda, beta, mu, the derivative step set, iteration budget, and the
// Jacobian block shape. For the pair codec the regularization weight depends
// on the approximation-area variant; rotated_area selects the rotated one.
SolverConfig preset(CodecKind kind, double bitrate, bool rotated_area = false);

// The step-set scale behind preset(): quantizer step for the scalar and pair
// codecs, 135 / rate for the 8x8 DCT codec.
double preset_step_scale(CodecKind kind, double bitrate);

}  // namespace ppr

#endif  // PPR_PRESETS_HPP
