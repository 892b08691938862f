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

#ifndef PPR_QUANTIZER_HPP
#define PPR_QUANTIZER_HPP

#include <cstdint>
#include <vector>

namespace ppr {

// Piecewise-constant scalar quantizer q(x). Three flavors:
//   two_level  : -1/2 for x <= 0, +1/2 for x > 0
//   uniform    : mid-riser with step d, q(x) = (floor(x/d) + 1/2) * d
//   general    : sorted decision boundaries b_0 < ... < b_{m-1} and m+1
//                representation levels; a boundary point belongs to the
//                lower region, matching the two-level convention.
class ScalarQuantizer {
 public:
  enum class Kind : std::uint8_t { two_level, uniform, general };

  static ScalarQuantizer two_level();
  static ScalarQuantizer uniform(double step);
  static ScalarQuantizer general(std::vector<double> boundaries,
                                 std::vector<double> levels);

  double operator()(double x) const;

  Kind kind() const { return kind_; }
  double step() const { return step_; }  // uniform only

  // Decision boundaries falling inside [lo, hi], ascending.
  std::vector<double> boundaries_in(double lo, double hi) const;

 private:
  ScalarQuantizer() = default;

  Kind kind_ = Kind::two_level;
  double step_ = 0.0;
  std::vector<double> boundaries_;
  std::vector<double> levels_;
};

// Symmetric interval [center - half_width, center + half_width].
struct Interval {
  double center;
  double half_width;

  Interval(double center, double half_width);
  double lo() const { return center - half_width; }
  double hi() const { return center + half_width; }
};

// An affine approximation q(x) ~ slope*x + intercept together with the mean
// squared deviation it attains over the fitted interval.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double lmse = 0.0;
};

}  // namespace ppr

#endif  // PPR_QUANTIZER_HPP
