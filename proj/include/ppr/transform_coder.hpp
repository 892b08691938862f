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

#ifndef PPR_TRANSFORM_CODER_HPP
#define PPR_TRANSFORM_CODER_HPP

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "ppr/quantizer.hpp"

namespace ppr {

// Coder that scalar-quantizes the coefficients of a unitary transform:
// C(x) = U Q(U^T x), one quantizer per coefficient.
class TransformCoder {
 public:
  TransformCoder(Eigen::MatrixXd unitary, std::vector<ScalarQuantizer> quantizers);

  int dimension() const { return static_cast<int>(unitary_.rows()); }
  const Eigen::MatrixXd& transform() const { return unitary_; }
  const ScalarQuantizer& quantizer(int i) const { return quantizers_[static_cast<std::size_t>(i)]; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

 private:
  Eigen::MatrixXd unitary_;
  std::vector<ScalarQuantizer> quantizers_;
};

// Neighborhood shape for the multidimensional fit: a cube aligned with the
// signal axes, or one aligned with the transform axes (separable in the
// transform domain).
enum class ApproxArea { aligned, rotated };

// Affine approximation C(x) ~ A x + b with its mean squared deviation over
// the fitted neighborhood.
struct VectorLinearFit {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd offset;
  double lmse = 0.0;
};

// Optimal local affine fit of the coder around x0 over a cube of half-width
// delta. The rotated area factorizes: each transform coefficient gets its
// scalar optimum, the diagonal solution maps back as A = U diag(a) U^T,
// b = U b~, and the error is the sum of the scalar errors. The aligned area
// has no such closed form and is fitted by seeded Monte-Carlo least squares.
VectorLinearFit fit_transform_coder(const TransformCoder& tc, const Eigen::VectorXd& x0,
                                    double delta, ApproxArea area,
                                    std::uint64_t seed = 12345,
                                    int mc_samples = 200000);

// Per-coefficient pass gain of the rotated-area fit (the diagonal of the
// transform-domain matrix), which acts as a frequency response when U is a
// frequency transform.
Eigen::VectorXd filter_response(const TransformCoder& tc, const Eigen::VectorXd& x0,
                                double delta);

}  // namespace ppr

#endif  // PPR_TRANSFORM_CODER_HPP
