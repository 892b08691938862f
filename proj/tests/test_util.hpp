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

#ifndef PPR_TESTS_TEST_UTIL_HPP
#define PPR_TESTS_TEST_UTIL_HPP

#include <Eigen/Dense>

#include <atomic>
#include <optional>
#include <random>
#include <string>

#include "ppr/codec.hpp"
#include "ppr/image.hpp"
#include "ppr/io.hpp"

namespace ppr::test {

inline ImageBuffer random_image(int h, int w, unsigned seed, double lo = 0.0,
                                double hi = 255.0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(lo, hi);
  ImageBuffer img(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) img(r, c) = unif(rng);
  return img;
}

inline ImageBuffer gradient_image(int h, int w, double lo = 20.0, double hi = 235.0) {
  ImageBuffer img(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double t = static_cast<double>(r + c) / (h + w - 2);
      img(r, c) = lo + t * (hi - lo);
    }
  }
  return img;
}

inline ImageBuffer natural_crop() {
  return read_pgm(std::string(PPR_TEST_DATA_DIR) + "/natural64.pgm");
}

// Linear map C(x) = M x as a codec; M must be block-diagonal w.r.t. any grid
// used with it for block estimation to be meaningful.
class LinearCodec : public Codec {
 public:
  explicit LinearCodec(Eigen::MatrixXd m, std::optional<BlockShape> shape = {})
      : m_(std::move(m)), shape_(shape) {}

  ImageBuffer apply(const ImageBuffer& x) const override {
    Eigen::VectorXd v(static_cast<Eigen::Index>(x.pixel_count()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = x.samples()[static_cast<std::size_t>(i)];
    const Eigen::VectorXd y = m_ * v;
    std::vector<double> out(y.data(), y.data() + y.size());
    return ImageBuffer(x.height(), x.width(), std::move(out));
  }
  std::optional<BlockShape> block_structure() const override { return shape_; }
  std::string descriptor() const override { return "linear-test"; }

  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
  std::optional<BlockShape> shape_;
};

// Forwards to another codec, counting applications.
class CountingCodec : public Codec {
 public:
  explicit CountingCodec(const Codec& inner) : inner_(inner) {}

  ImageBuffer apply(const ImageBuffer& x) const override {
    ++calls_;
    return inner_.apply(x);
  }
  std::optional<BlockShape> block_structure() const override {
    return inner_.block_structure();
  }
  std::string descriptor() const override { return inner_.descriptor(); }

  long calls() const { return calls_.load(); }
  void reset() { calls_ = 0; }

 private:
  const Codec& inner_;
  mutable std::atomic<long> calls_{0};
};

}  // namespace ppr::test

#endif  // PPR_TESTS_TEST_UTIL_HPP
