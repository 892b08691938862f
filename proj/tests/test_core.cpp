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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "ppr/image.hpp"
#include "ppr/io.hpp"
#include "test_util.hpp"

using namespace ppr;

TEST_CASE("image construction validates invariants") {
  CHECK_THROWS_AS(ImageBuffer(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(ImageBuffer(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(ImageBuffer(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(ImageBuffer(2, 2, {1.0, 2.0, 3.0, std::nan("")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ImageBuffer(2, 2, {1.0, 2.0, 3.0, INFINITY}), std::invalid_argument);

  ImageBuffer img(2, 3, 7.0);
  CHECK(img.pixel_count() == 6);
  CHECK(img(1, 2) == 7.0);
}

TEST_CASE("block grid tiles with true-sized edge blocks") {
  BlockGrid grid(10, 10, 4, 4);
  CHECK(grid.block_count() == 9);
  CHECK(grid.max_block_pixels() == 16);
  // row-major enumeration by origin
  CHECK(grid.block(0).row == 0);
  CHECK(grid.block(0).col == 0);
  CHECK(grid.block(1).col == 4);
  CHECK(grid.block(2).col == 8);
  CHECK(grid.block(2).width == 2);   // trailing partial column
  CHECK(grid.block(8).height == 2);  // bottom-right corner
  CHECK(grid.block(8).width == 2);

  int covered = 0;
  for (const Block& b : grid.blocks()) covered += b.pixel_count();
  CHECK(covered == 100);

  CHECK_THROWS_AS(grid.block(9), std::out_of_range);
}

TEST_CASE("single-pixel block extraction") {
  ImageBuffer img(2, 2, {1, 2, 3, 4});
  BlockGrid grid(2, 2, 1, 1);
  const Eigen::VectorXd v = extract_block(img, grid, 0);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == 1.0);
}

TEST_CASE("within-block vectorization is column-major") {
  ImageBuffer img(2, 2, {1, 2, 3, 4});
  BlockGrid grid(2, 2, 2, 2);
  const Eigen::VectorXd v = extract_block(img, grid, 0);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == 1.0);
  CHECK(v[1] == 3.0);
  CHECK(v[2] == 2.0);
  CHECK(v[3] == 4.0);
}

TEST_CASE("extract then insert is the identity on every block") {
  const ImageBuffer img = test::random_image(16, 16, 42);
  BlockGrid grid(16, 16, 8, 8);
  ImageBuffer copy = img;
  for (std::size_t i = 0; i < grid.block_count(); ++i) {
    insert_block(copy, grid, i, extract_block(img, grid, i));
  }
  CHECK(copy == img);

  // also with partial edge blocks
  const ImageBuffer odd = test::random_image(24, 24, 43);
  BlockGrid ogrid(24, 24, 8, 8);
  ImageBuffer ocopy = odd;
  for (std::size_t i = 0; i < ogrid.block_count(); ++i) {
    insert_block(ocopy, ogrid, i, extract_block(odd, ogrid, i));
  }
  CHECK(ocopy == odd);
}

TEST_CASE("insert_block replaces exactly one block") {
  ImageBuffer img(8, 8, 1.0);
  BlockGrid grid(8, 8, 4, 4);
  insert_block(img, grid, 0, Eigen::VectorXd::Zero(16));
  int zeros = 0;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (img(r, c) == 0.0) {
        ++zeros;
        CHECK(r < 4);
        CHECK(c < 4);
      }
    }
  }
  CHECK(zeros == 16);

  CHECK_THROWS_AS(insert_block(img, grid, 0, Eigen::VectorXd::Zero(15)),
                  std::invalid_argument);
  CHECK_THROWS_AS(insert_block(img, grid, 99, Eigen::VectorXd::Zero(16)),
                  std::out_of_range);
}

TEST_CASE("pgm round-trip preserves 8-bit images exactly") {
  const auto path = std::filesystem::temp_directory_path() / "ppr-test-core.pgm";
  ImageBuffer img(5, 7);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 7; ++c) img(r, c) = (r * 37 + c * 11) % 256;
  write_pgm(img, path);
  const ImageBuffer back = read_pgm(path);
  CHECK(back == img);
  std::filesystem::remove(path);
}

TEST_CASE("pgm write clamps and rounds") {
  const auto path = std::filesystem::temp_directory_path() / "ppr-test-clamp.pgm";
  ImageBuffer img(1, 4, {-3.0, 12.4, 12.6, 300.0});
  write_pgm(img, path);
  const ImageBuffer back = read_pgm(path);
  CHECK(back(0, 0) == 0.0);
  CHECK(back(0, 1) == 12.0);
  CHECK(back(0, 2) == 13.0);
  CHECK(back(0, 3) == 255.0);
  std::filesystem::remove(path);
}

TEST_CASE("matrix text format round-trips bit-exactly") {
  const auto path = std::filesystem::temp_directory_path() / "ppr-test-mat.txt";
  Eigen::MatrixXd m(3, 2);
  m << 1.0 / 3.0, -2.7182818284590452, 1e-300, 255.0, -0.0, 3.14159265358979;
  write_matrix_text(m, path);
  const Eigen::MatrixXd back = read_matrix_text(path);
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 2);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) CHECK(back(r, c) == m(r, c));
  std::filesystem::remove(path);
}

TEST_CASE("pgm reader rejects malformed input") {
  const auto path = std::filesystem::temp_directory_path() / "ppr-test-bad.pgm";
  {
    std::ofstream f(path, std::ios::binary);
    f << "P5\n4 4\n255\nab";  // truncated pixels
  }
  CHECK_THROWS_AS(read_pgm(path), IoError);
  {
    std::ofstream f(path, std::ios::binary);
    f << "P2\n1 1\n255\n0\n";
  }
  CHECK_THROWS_AS(read_pgm(path), IoError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_pgm(path), IoError);  // missing file
}
