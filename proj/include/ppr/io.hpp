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

#ifndef PPR_IO_HPP
#define PPR_IO_HPP

#include <Eigen/Core>

#include <filesystem>
#include <stdexcept>

#include "ppr/image.hpp"

namespace ppr {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary PGM (P5, maxval 255). Samples are rounded to nearest integer and
// clamped to [0,255] on write; comments in the header are skipped on read.
ImageBuffer read_pgm(const std::filesystem::path& path);
void write_pgm(const ImageBuffer& img, const std::filesystem::path& path);

// Plain-text matrix format for exact-precision fixtures: first line
// "rows cols", then one row of space-separated reals per line. Values are
// written with 17 significant digits so the round-trip is bit-exact.
Eigen::MatrixXd read_matrix_text(const std::filesystem::path& path);
void write_matrix_text(const Eigen::MatrixXd& m, const std::filesystem::path& path);

}  // namespace ppr

#endif  // PPR_IO_HPP
