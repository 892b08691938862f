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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <sstream>

#include "ppr/quantizer.hpp"
#include "ppr/quantizer_fit.hpp"
#include "ppr/transform_coder.hpp"

using namespace ppr;

namespace {

// Fine midpoint-rule quadrature of the squared deviation; an independent
// check of the exact integrator.
double quadrature_lmse(const ScalarQuantizer& q, const Interval& iv, double a,
                       double b, long n = 2'000'000) {
  const double h = 2.0 * iv.half_width / static_cast<double>(n);
  double acc = 0.0;
  for (long i = 0; i < n; ++i) {
    const double x = iv.lo() + (static_cast<double>(i) + 0.5) * h;
    const double r = q(x) - a * x - b;
    acc += r * r;
  }
  return acc * h / (2.0 * iv.half_width);
}

}  // namespace

TEST_CASE("quantizer evaluation follows the stated conventions") {
  const auto q2 = ScalarQuantizer::two_level();
  CHECK(q2(-3.0) == -0.5);
  CHECK(q2(0.0) == -0.5);  // boundary belongs to the lower region
  CHECK(q2(1e-9) == 0.5);

  const auto qu = ScalarQuantizer::uniform(1.0);
  CHECK(qu(0.3) == 0.5);
  CHECK(qu(1.0) == 1.5);  // floor convention: boundary goes up
  CHECK(qu(-0.2) == -0.5);

  const auto qg = ScalarQuantizer::general({0.0, 1.0}, {-1.0, 0.25, 2.0});
  CHECK(qg(-5.0) == -1.0);
  CHECK(qg(0.0) == -1.0);
  CHECK(qg(0.5) == 0.25);
  CHECK(qg(1.0) == 0.25);
  CHECK(qg(1.5) == 2.0);

  CHECK_THROWS_AS(ScalarQuantizer::uniform(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ScalarQuantizer::general({1.0, 1.0}, {0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ScalarQuantizer::general({0.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Interval(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("two-level fit inside one region is flat and exact") {
  const auto fit = fit_scalar(ScalarQuantizer::two_level(), Interval(2.0, 1.0));
  CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(fit.intercept == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fit.lmse == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("two-level fit across the step at the origin") {
  const auto fit = fit_scalar(ScalarQuantizer::two_level(), Interval(0.0, 1.0));
  CHECK(fit.slope == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(fit.intercept == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(fit.lmse == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("uniform fit inside one cell is flat") {
  const auto fit =
      fit_scalar(ScalarQuantizer::uniform(1.0), Interval(0.5, 0.4999999));
  CHECK(fit.slope == 0.0);
  CHECK(fit.intercept == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fit.lmse == 0.0);
}

TEST_CASE("worst two-level error is 1/12 on the critical ray") {
  for (double x0 : {0.5, -0.8, 1.7}) {
    const auto fit =
        fit_scalar(ScalarQuantizer::two_level(), Interval(x0, std::sqrt(3.0) * std::abs(x0)));
    CHECK(fit.lmse == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  }
}

TEST_CASE("closed form matches the direct substitution example") {
  const auto fit = two_level_closed_form(Interval(0.5, 1.0));
  CHECK(fit.slope == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK(fit.intercept == doctest::Approx(-0.03125).epsilon(1e-15));
}

TEST_CASE("two-level parameters vanish in the wide-interval limit") {
  const auto fit = two_level_closed_form(Interval(0.0, 1e4));
  CHECK(std::abs(fit.slope) < 1e-3);
  CHECK(std::abs(fit.intercept) < 1e-3);
  const auto general = fit_scalar(ScalarQuantizer::two_level(), Interval(0.3, 1e4));
  CHECK(std::abs(general.slope) < 1e-3);
  CHECK(std::abs(general.intercept) < 1e-3);
}

TEST_CASE("closed form agrees with the integrator on a 50x50 grid") {
  const auto q2 = ScalarQuantizer::two_level();
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double x0 = 2.0 * i / 49.0;
      const double d = 3.0 * (j + 1) / 50.0;
      const Interval iv(x0, d);
      const auto closed = two_level_closed_form(iv);
      const auto direct = fit_scalar(q2, iv);
      CHECK(std::abs(closed.slope - direct.slope) < 1e-12);
      CHECK(std::abs(closed.intercept - direct.intercept) < 1e-12);
      CHECK(std::abs(closed.lmse - direct.lmse) < 1e-12);
    }
  }
}

TEST_CASE("sampled fitter approaches the exact fit") {
  const auto q2 = ScalarQuantizer::two_level();
  const auto sampled = fit_scalar_sampled(q2, Interval(0.0, 1.0), 1'000'000);
  CHECK(std::abs(sampled.slope - 0.75) < 1e-3);
  CHECK(std::abs(sampled.intercept) < 1e-3);

  // flat region: exact even when sampled
  const auto flat = fit_scalar_sampled(q2, Interval(2.0, 1.0), 1000);
  CHECK(flat.slope == 0.0);
  CHECK(flat.intercept == 0.5);
  CHECK(flat.lmse == 0.0);

  // multi-step interval of a unit-step quantizer
  const Interval iv(0.25, 2.0);
  const auto exact = fit_scalar(ScalarQuantizer::uniform(1.0), iv);
  const auto mc = fit_scalar_sampled(ScalarQuantizer::uniform(1.0), iv, 1'000'000);
  CHECK(std::abs(exact.slope - mc.slope) < 1e-3);
  CHECK(std::abs(exact.intercept - mc.intercept) < 1e-3);
  CHECK(std::abs(exact.lmse - mc.lmse) < 1e-4);

  CHECK_THROWS_AS(fit_scalar_sampled(q2, Interval(0.0, 1.0), 999),
                  std::invalid_argument);
}

TEST_CASE("no tested line beats the fitted optimum") {
  std::mt19937 rng(7);
  std::normal_distribution<double> perturb(0.0, 0.05);
  const auto qu = ScalarQuantizer::uniform(1.0);
  const Interval iv(0.4, 1.3);
  const auto best = fit_scalar(qu, iv);
  for (int k = 0; k < 100; ++k) {
    const double a = best.slope + perturb(rng);
    const double b = best.intercept + perturb(rng);
    CHECK(quantizer_lmse(qu, iv, a, b) >= best.lmse - 1e-15);
  }
}

TEST_CASE("scaling the output levels scales the fit linearly, the error quadratically") {
  const double s = 3.7;
  const auto base = ScalarQuantizer::general({-0.4, 0.9}, {-1.0, 0.5, 2.0});
  const auto scaled = ScalarQuantizer::general({-0.4, 0.9}, {-s, 0.5 * s, 2.0 * s});
  const Interval iv(0.1, 1.6);
  const auto f0 = fit_scalar(base, iv);
  const auto f1 = fit_scalar(scaled, iv);
  CHECK(f1.slope == doctest::Approx(s * f0.slope).epsilon(1e-12));
  CHECK(f1.intercept == doctest::Approx(s * f0.intercept).epsilon(1e-12));
  CHECK(f1.lmse == doctest::Approx(s * s * f0.lmse).epsilon(1e-12));
}

TEST_CASE("uniform decomposition matches direct integration") {
  const auto qu = ScalarQuantizer::uniform(1.0);
  for (int i = 0; i < 40; ++i) {
    for (int j = 1; j <= 40; ++j) {
      const double x0 = -1.0 + 3.0 * i / 39.0;
      const double d = 2.6 * j / 40.0;
      const Interval iv(x0, d);
      const auto dec = uniform_closed_form(1.0, iv);
      const auto direct = fit_scalar(qu, iv);
      CHECK(std::abs(dec.slope - direct.slope) < 1e-10);
      CHECK(std::abs(dec.intercept - direct.intercept) < 1e-10);
      CHECK(std::abs(dec.lmse - direct.lmse) < 1e-10);
    }
  }
  // non-unit step
  const auto q16 = ScalarQuantizer::uniform(16.0);
  for (double x0 : {3.0, 8.0, 100.5}) {
    for (double d : {2.0, 10.0, 37.0}) {
      const Interval iv(x0, d);
      const auto dec = uniform_closed_form(16.0, iv);
      const auto direct = fit_scalar(q16, iv);
      CHECK(std::abs(dec.slope - direct.slope) < 1e-9);
      CHECK(std::abs(dec.intercept - direct.intercept) < 1e-9);
    }
  }
}

TEST_CASE("uniform worst case near 0.106 at the documented spot") {
  const auto fit = uniform_closed_form(1.0, Interval(0.5, 0.67));
  CHECK(std::abs(fit.lmse - 0.106) < 5e-3);
}

TEST_CASE("uniform fit tends to the identity for wide intervals") {
  const auto fit = uniform_closed_form(1.0, Interval(0.3, 1e4));
  CHECK(std::abs(fit.slope - 1.0) < 1e-3);
  CHECK(std::abs(fit.intercept) < 1e-3);
}

TEST_CASE("exact integrator agrees with brute-force quadrature") {
  const auto qu = ScalarQuantizer::uniform(1.0);
  const Interval iv(0.4, 1.7);
  const auto fit = fit_scalar(qu, iv);
  const double quad = quadrature_lmse(qu, iv, fit.slope, fit.intercept);
  CHECK(fit.lmse == doctest::Approx(quad).epsilon(1e-6));
}

TEST_CASE("sweep output has the documented structural properties") {
  std::ostringstream out;
  sweep_quantizer(ScalarQuantizer::two_level(), {0.5, 1.0}, {0.25, 0.5}, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "x0,delta,a,b,lmse");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);

  // constant error along rays delta = c|x0|
  const double c = 1.9;
  const auto q2 = ScalarQuantizer::two_level();
  const double ref = fit_scalar(q2, Interval(0.3, c * 0.3)).lmse;
  for (double x0 : {0.6, 1.1, 1.9}) {
    CHECK(fit_scalar(q2, Interval(x0, c * x0)).lmse ==
          doctest::Approx(ref).epsilon(1e-12));
  }
  // zero strictly below the diagonal ray
  for (double x0 : {0.5, 1.0, 2.0}) {
    CHECK(fit_scalar(q2, Interval(x0, 0.95 * x0)).lmse == 0.0);
  }
  // periodicity of the uniform sweep in the interval center
  const auto qu = ScalarQuantizer::uniform(1.0);
  for (double x0 : {0.1, 0.37, 0.5}) {
    for (double d : {0.4, 0.9, 2.3}) {
      const auto f0 = fit_scalar(qu, Interval(x0, d));
      const auto f1 = fit_scalar(qu, Interval(x0 + 1.0, d));
      CHECK(f0.slope == doctest::Approx(f1.slope).epsilon(1e-12));
      CHECK(f0.lmse == doctest::Approx(f1.lmse).epsilon(1e-12));
      // the intercept shifts with the cell level
      CHECK(f1.intercept - f0.intercept ==
            doctest::Approx(1.0 - f0.slope * 1.0).epsilon(1e-10));
    }
  }

  CHECK_THROWS_AS(sweep_quantizer(q2, {}, {0.5}, out), std::invalid_argument);
}

TEST_CASE("transform coder validates unitarity") {
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 0, 0, 2;
  CHECK_THROWS_AS(TransformCoder(bad, {ScalarQuantizer::two_level(),
                                       ScalarQuantizer::two_level()}),
                  std::invalid_argument);
}

TEST_CASE("rotated-area fit of the 45-degree two-level pair") {
  Eigen::Matrix2d u;
  u << 1.0, -1.0, 1.0, 1.0;
  u /= std::sqrt(2.0);
  TransformCoder tc(u, {ScalarQuantizer::two_level(), ScalarQuantizer::two_level()});

  // transform-domain center (0, 15): first coefficient straddles the step,
  // second sits deep inside the upper region
  const Eigen::Vector2d t0(0.0, 15.0);
  const Eigen::Vector2d x0 = u * t0;
  const auto fit = fit_transform_coder(tc, x0, 1.0, ApproxArea::rotated);

  const Eigen::Matrix2d a_t = u.transpose() * fit.matrix * u;
  CHECK(a_t(0, 0) == doctest::Approx(0.75).epsilon(1e-13));
  CHECK(a_t(1, 1) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(std::abs(a_t(0, 1)) < 1e-13);
  CHECK(std::abs(a_t(1, 0)) < 1e-13);

  const Eigen::Vector2d b_t = u.transpose() * fit.offset;
  CHECK(b_t[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(b_t[1] == doctest::Approx(0.5).epsilon(1e-13));

  // signal-domain values: A = (3/8) ones, b = (-(1/2), 1/2)/sqrt(2)
  CHECK(fit.matrix(0, 0) == doctest::Approx(0.375).epsilon(1e-13));
  CHECK(fit.matrix(0, 1) == doctest::Approx(0.375).epsilon(1e-13));
  CHECK(fit.offset[0] == doctest::Approx(-0.5 / std::sqrt(2.0)).epsilon(1e-13));
  CHECK(fit.offset[1] == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-13));

  CHECK(fit.lmse == doctest::Approx(1.0 / 16.0).epsilon(1e-13));
}

TEST_CASE("identity transform reduces to per-component scalar fits") {
  const int n = 3;
  std::vector<ScalarQuantizer> quants{ScalarQuantizer::uniform(1.0),
                                      ScalarQuantizer::uniform(2.0),
                                      ScalarQuantizer::two_level()};
  TransformCoder tc(Eigen::MatrixXd::Identity(n, n), quants);
  const Eigen::Vector3d x0(0.3, 1.1, -0.2);
  const double d = 0.8;
  const auto fit = fit_transform_coder(tc, x0, d, ApproxArea::rotated);
  for (int i = 0; i < n; ++i) {
    const auto scalar = fit_scalar(quants[static_cast<std::size_t>(i)], Interval(x0[i], d));
    CHECK(fit.matrix(i, i) == doctest::Approx(scalar.slope).epsilon(1e-14));
    CHECK(fit.offset[i] == doctest::Approx(scalar.intercept).epsilon(1e-14));
  }
}

TEST_CASE("rotated-area error decomposes over coefficients") {
  // random unitary via QR of a fixed random matrix
  std::mt19937 rng(11);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = normal(rng);
  const Eigen::MatrixXd u = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();

  std::vector<ScalarQuantizer> quants(4, ScalarQuantizer::uniform(1.0));
  TransformCoder tc(u, quants);
  const Eigen::Vector4d t0(0.2, -0.7, 1.4, 0.05);
  const Eigen::VectorXd x0 = u * t0;
  const double d = 0.9;
  const auto fit = fit_transform_coder(tc, x0, d, ApproxArea::rotated);

  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    sum += fit_scalar(quants[static_cast<std::size_t>(i)], Interval(t0[i], d)).lmse;
  }
  CHECK(fit.lmse == doctest::Approx(sum).epsilon(1e-12));

  // independent check: fine 1D quadrature per transform coefficient
  double quad_total = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto scalar = fit_scalar(quants[static_cast<std::size_t>(i)], Interval(t0[i], d));
    quad_total += quadrature_lmse(quants[static_cast<std::size_t>(i)], Interval(t0[i], d),
                                  scalar.slope, scalar.intercept, 400'000);
  }
  CHECK(fit.lmse == doctest::Approx(quad_total).epsilon(1e-5));

  // Monte-Carlo integration of the residual in the signal domain over the
  // rotated cube; unitary energy preservation makes the two domains agree.
  std::mt19937_64 mc(99);
  std::uniform_real_distribution<double> unif(-d, d);
  double acc = 0.0;
  const int samples = 200'000;
  for (int s = 0; s < samples; ++s) {
    Eigen::Vector4d t;
    for (int i = 0; i < 4; ++i) t[i] = t0[i] + unif(mc);
    const Eigen::VectorXd x = u * t;
    const Eigen::VectorXd r = tc.apply(x) - (fit.matrix * x + fit.offset);
    acc += r.squaredNorm();
  }
  CHECK(acc / samples == doctest::Approx(fit.lmse).epsilon(2e-2));
}

TEST_CASE("aligned-area fit is reproducible and consistent for identity transforms") {
  // For U = I the aligned and rotated areas coincide, so the Monte-Carlo
  // fit must approach the analytic one.
  TransformCoder tc(Eigen::MatrixXd::Identity(2, 2),
                    {ScalarQuantizer::uniform(1.0), ScalarQuantizer::uniform(1.0)});
  const Eigen::Vector2d x0(0.45, 0.1);
  const auto analytic = fit_transform_coder(tc, x0, 0.8, ApproxArea::rotated);
  const auto mc = fit_transform_coder(tc, x0, 0.8, ApproxArea::aligned, 2024, 400'000);
  CHECK(mc.matrix(0, 0) == doctest::Approx(analytic.matrix(0, 0)).epsilon(2e-2));
  CHECK(mc.matrix(1, 1) == doctest::Approx(analytic.matrix(1, 1)).epsilon(2e-2));
  CHECK(std::abs(mc.matrix(0, 1)) < 2e-2);
  CHECK(mc.lmse == doctest::Approx(analytic.lmse).epsilon(5e-2));

  // fixed seed implies bit-identical repetition
  const auto again = fit_transform_coder(tc, x0, 0.8, ApproxArea::aligned, 2024, 400'000);
  CHECK(again.matrix == mc.matrix);
  CHECK(again.offset == mc.offset);
  CHECK(again.lmse == mc.lmse);
}

TEST_CASE("filter response sweeps from all-stop to all-pass") {
  const int n = 32;
  std::vector<ScalarQuantizer> quants;
  Eigen::VectorXd mid(n);
  for (int i = 1; i <= n; ++i) {
    const double step = std::exp2(i / 4.0);
    quants.push_back(ScalarQuantizer::uniform(step));
    mid[i - 1] = step / 2.0;
  }
  // any unitary transform works here; use the identity so x0 is mid-cell
  TransformCoder tc(Eigen::MatrixXd::Identity(n, n), quants);

  const Eigen::VectorXd stop = filter_response(tc, mid, 0.5);
  CHECK(stop.maxCoeff() < 0.05);

  const Eigen::VectorXd pass = filter_response(tc, mid, 500.0);
  CHECK(pass.minCoeff() > 0.95);

  const Eigen::VectorXd mixed = filter_response(tc, mid, 50.0);
  double first = 0.0, last = 0.0;
  for (int i = 0; i < 8; ++i) first += mixed[i];
  for (int i = 24; i < 32; ++i) last += mixed[i];
  CHECK(first / 8.0 > 0.9);
  CHECK(last / 8.0 < 0.3);
  CHECK(first > last);
}
