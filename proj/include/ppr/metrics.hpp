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

#ifndef PPR_METRICS_HPP
#define PPR_METRICS_HPP

#include "ppr/image.hpp"

namespace ppr {

// Peak signal-to-noise ratio in dB against peak 255; +infinity for identical
// images.
double psnr(const ImageBuffer& ref, const ImageBuffer& test);

// Mean structural similarity index with the reference constants: K1 = 0.01,
// K2 = 0.03, L = 255, 11x11 Gaussian window with sigma 1.5, averaged over all
// fully-contained window positions. Requires images of at least 11x11.
double ssim(const ImageBuffer& ref, const ImageBuffer& test);

struct QualityReport {
  double psnr;
  double ssim;
};

QualityReport compare(const ImageBuffer& ref, const ImageBuffer& test);

}  // namespace ppr

#endif  // PPR_METRICS_HPP
