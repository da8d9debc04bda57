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

#ifndef AFFECTBENCH_TESTS_FIXTURES_HPP_
#define AFFECTBENCH_TESTS_FIXTURES_HPP_

#include <cmath>
#include <cstdint>

#include "affectbench/image.hpp"
#include "affectbench/rng.hpp"

namespace affectbench::testing {

// Synthetic stand-in for a natural photo: smooth color gradients, a few
// soft blobs and mild texture. Enough structure for blur/compression
// corruptions to have something to destroy.
inline Image MakeTestImage(int height, int width, std::uint64_t seed) {
  CounterRng rng(DeriveStreamKey(seed, 0xf1c7u));
  constexpr double kTau = 6.283185307179586;

  // Low-frequency sinusoid parameters per channel.
  double freq_y[3], freq_x[3], phase[3], base[3], amp[3];
  for (int c = 0; c < 3; ++c) {
    freq_y[c] = rng.NextUniform(0.5, 2.5);
    freq_x[c] = rng.NextUniform(0.5, 2.5);
    phase[c] = rng.NextUniform(0.0, kTau);
    base[c] = rng.NextUniform(0.35, 0.65);
    amp[c] = rng.NextUniform(0.10, 0.22);
  }
  // Three blobs with random position, radius and color.
  double by[3], bx[3], br[3], bc[3][3];
  for (int i = 0; i < 3; ++i) {
    by[i] = rng.NextUniform(0.15, 0.85);
    bx[i] = rng.NextUniform(0.15, 0.85);
    br[i] = rng.NextUniform(0.08, 0.25);
    for (int c = 0; c < 3; ++c) bc[i][c] = rng.NextUniform(-0.35, 0.35);
  }

  Image img(height, width);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double fy = static_cast<double>(y) / height;
      const double fx = static_cast<double>(x) / width;
      const double texture = 0.03 * rng.NextUniform(-1.0, 1.0);
      for (int c = 0; c < 3; ++c) {
        double v = base[c] +
                   amp[c] * std::sin(kTau * (freq_y[c] * fy + phase[c])) *
                       std::cos(kTau * (freq_x[c] * fx + phase[c]));
        for (int i = 0; i < 3; ++i) {
          const double dy = fy - by[i], dx = fx - bx[i];
          v += bc[i][c] * std::exp(-(dy * dy + dx * dx) / (br[i] * br[i]));
        }
        v += texture;
        img.At(y, x, c) = static_cast<float>(std::min(1.0, std::max(0.0, v)));
      }
    }
  }
  return img;
}

inline Image ConstantImage(int height, int width, float value) {
  return Image(height, width, value);
}

}  // namespace affectbench::testing

#endif  // AFFECTBENCH_TESTS_FIXTURES_HPP_
