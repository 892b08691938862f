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

#include "ppr/dct.hpp"

#include <cmath>
#include <stdexcept>

namespace ppr {

Eigen::MatrixXd dct_matrix(int n) {
  if (n <= 0) throw std::invalid_argument("dct_matrix: size must be positive");
  Eigen::MatrixXd t(n, n);
  const double c0 = std::sqrt(1.0 / n);
  const double ck = std::sqrt(2.0 / n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      t(k, j) = (k == 0 ? c0 : ck) *
                std::cos(M_PI * (2.0 * j + 1.0) * k / (2.0 * n));
    }
  }
  return t;
}

}  // namespace ppr
