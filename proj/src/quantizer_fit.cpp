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

#include "ppr/quantizer_fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ppr {

namespace {

// Segment endpoints of the piecewise-constant structure of q over [lo, hi]:
// lo, every decision boundary inside, hi.
std::vector<double> segment_points(const ScalarQuantizer& q, double lo, double hi) {
  std::vector<double> pts;
  pts.push_back(lo);
  for (double b : q.boundaries_in(lo, hi)) {
    if (b > pts.back() && b < hi) pts.push_back(b);
  }
  pts.push_back(hi);
  return pts;
}

// Integral of (v - slope*x - intercept)^2 over [s, e] for constant level v.
double residual_integral(double s, double e, double v, double slope, double intercept) {
  const double c = v - intercept;
  const double len = e - s;
  const double m2 = (e * e - s * s);        // integral of 2x
  const double m3 = (e * e * e - s * s * s);  // integral of 3x^2
  return c * c * len - slope * c * m2 + slope * slope * m3 / 3.0;
}

}  // namespace

LinearFit fit_scalar(const ScalarQuantizer& q, const Interval& iv) {
  const double lo = iv.lo();
  const double hi = iv.hi();
  const std::vector<double> pts = segment_points(q, lo, hi);

  // Moment integrals of q: I_b = int q dx, I_a = int x q dx.
  double int_q = 0.0;
  double int_xq = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double s = pts[i];
    const double e = pts[i + 1];
    if (!(e > s)) continue;
    const double v = q(0.5 * (s + e));
    int_q += v * (e - s);
    int_xq += v * 0.5 * (e * e - s * s);
  }
  const double inv2d = 1.0 / (2.0 * iv.half_width);
  const double mean_q = int_q * inv2d;
  const double mean_xq = int_xq * inv2d;

  LinearFit fit;
  fit.slope = 3.0 / (iv.half_width * iv.half_width) * (mean_xq - mean_q * iv.center);
  fit.intercept = mean_q - fit.slope * iv.center;
  fit.lmse = quantizer_lmse(q, iv, fit.slope, fit.intercept);
  return fit;
}

double quantizer_lmse(const ScalarQuantizer& q, const Interval& iv,
                      double slope, double intercept) {
  const double lo = iv.lo();
  const double hi = iv.hi();
  const std::vector<double> pts = segment_points(q, lo, hi);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double s = pts[i];
    const double e = pts[i + 1];
    if (!(e > s)) continue;
    acc += residual_integral(s, e, q(0.5 * (s + e)), slope, intercept);
  }
  return std::max(0.0, acc / (2.0 * iv.half_width));
}

LinearFit fit_scalar_sampled(const ScalarQuantizer& q, const Interval& iv,
                             long n_samples) {
  if (n_samples < 1000) {
    throw std::invalid_argument("fit_scalar_sampled: need at least 1000 samples");
  }
  // Least squares in coordinates centered at x0 to avoid cancellation when
  // the interval sits far from the origin.
  const double h = 2.0 * iv.half_width / static_cast<double>(n_samples);
  double st = 0.0, stt = 0.0, sq = 0.0, sqq = 0.0, stq = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    const double t = (static_cast<double>(i) + 0.5) * h - iv.half_width;
    const double v = q(iv.center + t);
    st += t;
    stt += t * t;
    sq += v;
    sqq += v * v;
    stq += t * v;
  }
  const double n = static_cast<double>(n_samples);
  const double denom = n * stt - st * st;
  const double slope = (n * stq - st * sq) / denom;
  const double b_t = (sq - slope * st) / n;

  LinearFit fit;
  fit.slope = slope;
  fit.intercept = b_t - slope * iv.center;
  fit.lmse = std::max(0.0, (sqq - 2.0 * slope * stq - 2.0 * b_t * sq +
                            slope * slope * stt + 2.0 * slope * b_t * st +
                            n * b_t * b_t) /
                               n);
  return fit;
}

namespace {

// Optimal line for the normalized two-level step located at the origin,
// fitted over an interval centered at c with half-width d. Valid whenever
// d >= |c|; continuous with the flat solution at d == |c|.
void two_level_spanning(double c, double d, double& slope, double& intercept) {
  const double rho = c / d;
  slope = 3.0 / (4.0 * d) * (1.0 - rho * rho);
  intercept = 3.0 * c / (4.0 * d) * (rho * rho - 1.0 / 3.0);
}

}  // namespace

LinearFit two_level_closed_form(const Interval& iv) {
  LinearFit fit;
  if (iv.half_width <= std::abs(iv.center)) {
    fit.slope = 0.0;
    fit.intercept = iv.center > 0.0 ? 0.5 : -0.5;
    fit.lmse = 0.0;
    return fit;
  }
  two_level_spanning(iv.center, iv.half_width, fit.slope, fit.intercept);
  const double rho = iv.center / iv.half_width;
  fit.lmse = (1.0 + 3.0 * rho * rho) * (1.0 - rho * rho) / 16.0;
  return fit;
}

LinearFit uniform_closed_form(double step, const Interval& iv) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("uniform_closed_form: step must be positive");
  }
  const ScalarQuantizer q = ScalarQuantizer::uniform(step);
  const double lo = iv.lo();
  const double hi = iv.hi();
  const std::vector<double> inside = q.boundaries_in(lo, hi);

  // Each boundary tau inside the interval contributes a shifted, step-scaled
  // two-level solution; the shift moves tau to the origin, so the slope is
  // unchanged and the intercept picks up -slope*tau.
  double slope = 0.0;
  double intercept = 0.0;
  for (double tau : inside) {
    double a2 = 0.0, b2 = 0.0;
    two_level_spanning(iv.center - tau, iv.half_width, a2, b2);
    slope += step * a2;
    intercept += step * (b2 - a2 * tau);
  }

  // Boundaries beyond the interval make the remaining summands locally
  // constant; evaluate that net constant at a probe point strictly inside one
  // decision region (midpoint of the widest segment).
  const std::vector<double> pts = segment_points(q, lo, hi);
  double probe = 0.5 * (pts[0] + pts[1]);
  double widest = pts[1] - pts[0];
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double w = pts[i + 1] - pts[i];
    if (w > widest) {
      widest = w;
      probe = 0.5 * (pts[i] + pts[i + 1]);
    }
  }
  double covered = 0.0;
  for (double tau : inside) {
    covered += step * (probe - tau <= 0.0 ? -0.5 : 0.5);
  }
  intercept += q(probe) - covered;

  LinearFit fit;
  fit.slope = slope;
  fit.intercept = intercept;
  fit.lmse = quantizer_lmse(q, iv, slope, intercept);
  return fit;
}

void sweep_quantizer(const ScalarQuantizer& q, const std::vector<double>& x0_values,
                     const std::vector<double>& delta_values, std::ostream& out) {
  if (x0_values.empty() || delta_values.empty()) {
    throw std::invalid_argument("sweep_quantizer: empty range");
  }
  out << "x0,delta,a,b,lmse\n";
  char buf[160];
  for (double x0 : x0_values) {
    for (double d : delta_values) {
      const LinearFit fit = fit_scalar(q, Interval(x0, d));
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g\n", x0, d,
                    fit.slope, fit.intercept, fit.lmse);
      out << buf;
    }
  }
}

}  // namespace ppr
