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

#ifndef PPR_QUANTIZER_FIT_HPP
#define PPR_QUANTIZER_FIT_HPP

#include <iosfwd>
#include <vector>

#include "ppr/quantizer.hpp"

namespace ppr {

// Optimal least-squares line for q over the interval, with the mean squared
// deviation it attains. Everything is computed by exact piecewise integration
// over the quantizer's decision regions: q is piecewise constant, so the
// moment integrals reduce to closed-form sums.
LinearFit fit_scalar(const ScalarQuantizer& q, const Interval& iv);

// Brute-force fitter: ordinary least squares over n_samples midpoint-rule
// samples of q. Converges to fit_scalar as n_samples grows; kept as an
// independent verification route.
LinearFit fit_scalar_sampled(const ScalarQuantizer& q, const Interval& iv,
                             long n_samples);

// Mean squared deviation of an arbitrary line (slope, intercept) from q over
// the interval, by exact piecewise integration.
double quantizer_lmse(const ScalarQuantizer& q, const Interval& iv,
                      double slope, double intercept);

// Closed-form optimum for the normalized two-level quantizer. Flat fit
// (0, +-1/2, 0) when the interval stays inside one decision region.
LinearFit two_level_closed_form(const Interval& iv);

// Closed-form optimum for a uniform mid-riser quantizer with the given step,
// assembled by summing shifted two-level solutions over the decision
// boundaries that intersect the interval; boundaries outside contribute a
// locally constant offset which is accumulated exactly. The attained error is
// integrated directly (per-term errors do not add because of cross terms).
LinearFit uniform_closed_form(double step, const Interval& iv);

// One fit per (x0, delta) grid point, streamed as CSV with header
// "x0,delta,a,b,lmse" and %.12g formatting.
void sweep_quantizer(const ScalarQuantizer& q, const std::vector<double>& x0_values,
                     const std::vector<double>& delta_values, std::ostream& out);

}  // namespace ppr

#endif  // PPR_QUANTIZER_FIT_HPP
