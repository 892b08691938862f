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

#include "ppr/transform_coder.hpp"

#include <Eigen/Dense>

#include <random>
#include <stdexcept>

#include "ppr/quantizer_fit.hpp"

namespace ppr {

TransformCoder::TransformCoder(Eigen::MatrixXd unitary,
                               std::vector<ScalarQuantizer> quantizers)
    : unitary_(std::move(unitary)), quantizers_(std::move(quantizers)) {
  if (unitary_.rows() != unitary_.cols() || unitary_.rows() == 0) {
    throw std::invalid_argument("TransformCoder: transform must be square");
  }
  if (quantizers_.size() != static_cast<std::size_t>(unitary_.rows())) {
    throw std::invalid_argument("TransformCoder: need one quantizer per coefficient");
  }
  const Eigen::MatrixXd gram = unitary_.transpose() * unitary_;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(unitary_.rows(), unitary_.cols());
  if (((gram - eye).cwiseAbs().maxCoeff()) > 1e-12) {
    throw std::invalid_argument("TransformCoder: matrix is not unitary");
  }
}

Eigen::VectorXd TransformCoder::apply(const Eigen::VectorXd& x) const {
  if (x.size() != unitary_.rows()) {
    throw std::invalid_argument("TransformCoder::apply: dimension mismatch");
  }
  Eigen::VectorXd coeffs = unitary_.transpose() * x;
  for (int i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = quantizers_[static_cast<std::size_t>(i)](coeffs[i]);
  }
  return unitary_ * coeffs;
}

namespace {

VectorLinearFit fit_rotated(const TransformCoder& tc, const Eigen::VectorXd& x0,
                            double delta) {
  const int n = tc.dimension();
  const Eigen::VectorXd t0 = tc.transform().transpose() * x0;

  Eigen::VectorXd gains(n);
  Eigen::VectorXd offsets(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const LinearFit f = fit_scalar(tc.quantizer(i), Interval(t0[i], delta));
    gains[i] = f.slope;
    offsets[i] = f.intercept;
    total += f.lmse;
  }

  VectorLinearFit fit;
  fit.matrix = tc.transform() * gains.asDiagonal() * tc.transform().transpose();
  fit.offset = tc.transform() * offsets;
  fit.lmse = total;
  return fit;
}

VectorLinearFit fit_aligned(const TransformCoder& tc, const Eigen::VectorXd& x0,
                            double delta, std::uint64_t seed, int mc_samples) {
  if (mc_samples < 100) {
    throw std::invalid_argument("fit_transform_coder: too few Monte-Carlo samples");
  }
  const int n = tc.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-delta, delta);

  // Least squares on the augmented regressor [x; 1] shared by every output
  // coordinate: G = sum z z^T, H = sum z y^T, params = G^{-1} H.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n + 1, n + 1);
  Eigen::MatrixXd cross = Eigen::MatrixXd::Zero(n + 1, n);
  double sum_yy = 0.0;
  Eigen::VectorXd z(n + 1);
  z[n] = 1.0;
  for (int s = 0; s < mc_samples; ++s) {
    for (int i = 0; i < n; ++i) z[i] = x0[i] + unif(rng);
    const Eigen::VectorXd y = tc.apply(z.head(n));
    gram.selfadjointView<Eigen::Lower>().rankUpdate(z);
    cross.noalias() += z * y.transpose();
    sum_yy += y.squaredNorm();
  }
  gram = gram.selfadjointView<Eigen::Lower>();

  const Eigen::MatrixXd params = gram.ldlt().solve(cross);  // (n+1) x n

  VectorLinearFit fit;
  fit.matrix = params.topRows(n).transpose();
  fit.offset = params.row(n).transpose();
  // Mean residual energy via the normal-equation identity
  // sum ||y - P^T z||^2 = sum ||y||^2 - trace(P^T H).
  const double resid = sum_yy - (params.transpose() * cross).trace();
  fit.lmse = std::max(0.0, resid / static_cast<double>(mc_samples));
  return fit;
}

}  // namespace

VectorLinearFit fit_transform_coder(const TransformCoder& tc, const Eigen::VectorXd& x0,
                                    double delta, ApproxArea area, std::uint64_t seed,
                                    int mc_samples) {
  if (x0.size() != tc.dimension()) {
    throw std::invalid_argument("fit_transform_coder: dimension mismatch");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("fit_transform_coder: delta must be positive");
  }
  return area == ApproxArea::rotated ? fit_rotated(tc, x0, delta)
                                     : fit_aligned(tc, x0, delta, seed, mc_samples);
}

Eigen::VectorXd filter_response(const TransformCoder& tc, const Eigen::VectorXd& x0,
                                double delta) {
  if (x0.size() != tc.dimension()) {
    throw std::invalid_argument("filter_response: dimension mismatch");
  }
  const Eigen::VectorXd t0 = tc.transform().transpose() * x0;
  Eigen::VectorXd gains(tc.dimension());
  for (int i = 0; i < tc.dimension(); ++i) {
    gains[i] = fit_scalar(tc.quantizer(i), Interval(t0[i], delta)).slope;
  }
  return gains;
}

}  // namespace ppr
