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

#include "ppr/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppr {

ScalarQuantizer ScalarQuantizer::two_level() {
  ScalarQuantizer q;
  q.kind_ = Kind::two_level;
  return q;
}

ScalarQuantizer ScalarQuantizer::uniform(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("ScalarQuantizer::uniform: step must be positive");
  }
  ScalarQuantizer q;
  q.kind_ = Kind::uniform;
  q.step_ = step;
  return q;
}

ScalarQuantizer ScalarQuantizer::general(std::vector<double> boundaries,
                                         std::vector<double> levels) {
  if (levels.size() != boundaries.size() + 1) {
    throw std::invalid_argument("ScalarQuantizer::general: need one more level than boundaries");
  }
  if (!std::is_sorted(boundaries.begin(), boundaries.end(),
                      [](double a, double b) { return a <= b; })) {
    throw std::invalid_argument("ScalarQuantizer::general: boundaries must be strictly increasing");
  }
  for (double b : boundaries) {
    if (!std::isfinite(b)) throw std::invalid_argument("ScalarQuantizer::general: non-finite boundary");
  }
  for (double r : levels) {
    if (!std::isfinite(r)) throw std::invalid_argument("ScalarQuantizer::general: non-finite level");
  }
  ScalarQuantizer q;
  q.kind_ = Kind::general;
  q.boundaries_ = std::move(boundaries);
  q.levels_ = std::move(levels);
  return q;
}

double ScalarQuantizer::operator()(double x) const {
  switch (kind_) {
    case Kind::two_level:
      return x <= 0.0 ? -0.5 : 0.5;
    case Kind::uniform:
      return (std::floor(x / step_) + 0.5) * step_;
    case Kind::general: {
      // boundary point maps to the lower region: level i serves (b_{i-1}, b_i]
      auto it = std::lower_bound(boundaries_.begin(), boundaries_.end(), x);
      return levels_[static_cast<std::size_t>(it - boundaries_.begin())];
    }
  }
  return 0.0;  // unreachable
}

std::vector<double> ScalarQuantizer::boundaries_in(double lo, double hi) const {
  std::vector<double> out;
  if (hi < lo) return out;
  switch (kind_) {
    case Kind::two_level:
      if (lo <= 0.0 && 0.0 <= hi) out.push_back(0.0);
      break;
    case Kind::uniform: {
      const long long k_lo = static_cast<long long>(std::ceil(lo / step_));
      const long long k_hi = static_cast<long long>(std::floor(hi / step_));
      for (long long k = k_lo; k <= k_hi; ++k) {
        const double b = static_cast<double>(k) * step_;
        if (lo <= b && b <= hi) out.push_back(b);
      }
      break;
    }
    case Kind::general: {
      auto first = std::lower_bound(boundaries_.begin(), boundaries_.end(), lo);
      auto last = std::upper_bound(boundaries_.begin(), boundaries_.end(), hi);
      out.assign(first, last);
      break;
    }
  }
  return out;
}

Interval::Interval(double center, double half_width)
    : center(center), half_width(half_width) {
  if (!std::isfinite(center) || !std::isfinite(half_width) || !(half_width > 0.0)) {
    throw std::invalid_argument("Interval: half_width must be positive and finite");
  }
}

}  // namespace ppr
