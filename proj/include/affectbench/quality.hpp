// Copyright 2026 The Affectbench Authors
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

#ifndef AFFECTBENCH_QUALITY_HPP_
#define AFFECTBENCH_QUALITY_HPP_

#include <vector>

#include "affectbench/image.hpp"

namespace affectbench {

// Root-mean-square difference over all pixel-channel elements. Zero iff the
// images are identical; at most 1 for images in [0,1]. Symmetric.
double RawL2Distance(const Image& x, const Image& cx);

// Per-image visibility normalization: v_j = 1 - raw_j / max(raw). The worst
// corruption gets exactly 0; an entry is 1 only when its raw distance is 0.
// Typically called with the 85 per-variant distances of one source image.
// Throws DegenerateInputError when every distance is zero.
std::vector<double> NormalizeVisibility(const std::vector<double>& raw);

struct SsimConfig {
  int window = 11;         // odd, >= 3
  double alpha = 1.0;      // luminance exponent
  double beta = 1.0;       // contrast exponent
  double gamma = 1.0;      // structure exponent
  double c1 = 1e-4;        // (0.01)^2 for unit dynamic range
  double c2 = 9e-4;        // (0.03)^2
};

// Mean structural similarity over dense sliding windows of the luma plane.
// Returns a value in [-1, 1]; 1 for identical images. The documented
// alternative to the L2 visibility measure.
double Ssim(const Image& x, const Image& cx, const SsimConfig& cfg = {});

// Distance form used when visibility is measured with SSIM instead of L2.
double SsimDistance(const Image& x, const Image& cx,
                    const SsimConfig& cfg = {});

}  // namespace affectbench

#endif  // AFFECTBENCH_QUALITY_HPP_
