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

#ifndef PPR_DCT_HPP
#define PPR_DCT_HPP

#include <Eigen/Core>

namespace ppr {

// Orthonormal DCT-II matrix T of size n, T(k, j) = c_k cos(pi (2j+1) k / 2n)
// with c_0 = sqrt(1/n) and c_k = sqrt(2/n). T * T^T = I, so the inverse
// transform is the transpose.
Eigen::MatrixXd dct_matrix(int n);

}  // namespace ppr

#endif  // PPR_DCT_HPP
