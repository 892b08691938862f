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

#ifndef PPR_ANALYTIC_LINEARIZATION_HPP
#define PPR_ANALYTIC_LINEARIZATION_HPP

#include "ppr/codec.hpp"
#include "ppr/jacobian.hpp"

namespace ppr {

// Analytic local-linear model of the pair transform codec: each 2x1 block is
// fitted in the transform domain (one scalar quantizer fit per coefficient
// over an interval of half-width delta, i.e. over a transform-aligned
// neighborhood), mapped back to the signal domain, and averaged over the step
// set to match the averaging of the finite-difference route. Unpaired
// single-pixel edge blocks get the scalar fit directly.
LinearizedCodec linearize_pair_rotated(const PairTransformCodec& codec,
                                       const ImageBuffer& z, const BlockGrid& grid,
                                       const StepSet& steps);

}  // namespace ppr

#endif  // PPR_ANALYTIC_LINEARIZATION_HPP
