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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "affectbench/corrupt.hpp"
#include "affectbench/errors.hpp"
#include "affectbench/quality.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using affectbench::DegenerateInputError;
using affectbench::Image;
using affectbench::NormalizeVisibility;
using affectbench::RawL2Distance;
using affectbench::Ssim;
using affectbench::SsimConfig;
using affectbench::SsimDistance;
using affectbench::testing::ConstantImage;
using affectbench::testing::MakeTestImage;

TEST_CASE("raw L2 of an image with itself is zero") {
  const Image img = MakeTestImage(16, 16, 1);
  CHECK(RawL2Distance(img, img) == 0.0);
}

TEST_CASE("raw L2 of all-zeros vs all-ones is one") {
  const Image zeros = ConstantImage(8, 8, 0.0f);
  const Image ones = ConstantImage(8, 8, 1.0f);
  CHECK(RawL2Distance(zeros, ones) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("raw L2 with half the elements at 0.5") {
  // 1x2 image: 6 elements, set exactly 3 of them to 0.5.
  Image zeros(1, 2, 0.0f);
  Image half(1, 2, 0.0f);
  half.At(0, 0, 0) = 0.5f;
  half.At(0, 0, 1) = 0.5f;
  half.At(0, 0, 2) = 0.5f;
  // RMS = sqrt(3 * 0.25 / 6) = sqrt(0.125)
  CHECK(RawL2Distance(zeros, half) ==
        doctest::Approx(std::sqrt(0.125)).epsilon(1e-12));
}

TEST_CASE("raw L2 is symmetric") {
  const Image a = MakeTestImage(12, 10, 2);
  const Image b = MakeTestImage(12, 10, 3);
  CHECK(RawL2Distance(a, b) == RawL2Distance(b, a));
}

TEST_CASE("raw L2 rejects mismatched shapes") {
  const Image a = MakeTestImage(8, 8, 1);
  const Image b = MakeTestImage(8, 9, 1);
  CHECK_THROWS_AS(RawL2Distance(a, b), std::invalid_argument);
}

TEST_CASE("visibility normalization is linear in the worst distance") {
  const double d = 0.173;
  const std::vector<double> v = NormalizeVisibility({0.0, d, 2.0 * d});
  CHECK(v[0] == 1.0);
  CHECK(v[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[2] == 0.0);
}

TEST_CASE("all-equal distances make every variant the worst") {
  const std::vector<double> v = NormalizeVisibility({0.4, 0.4, 0.4});
  for (double x : v) CHECK(x == 0.0);
}

TEST_CASE("all-zero distances are degenerate") {
  CHECK_THROWS_AS(NormalizeVisibility({0.0, 0.0}), DegenerateInputError);
}

TEST_CASE("visibility minimum is exactly zero and all values in [0,1]") {
  std::vector<double> raw(85);
  affectbench::CounterRng rng(5);
  for (double& d : raw) d = rng.NextUniform(0.01, 0.9);
  const std::vector<double> v = NormalizeVisibility(raw);
  double min_v = 1.0;
  for (double x : v) {
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    min_v = std::min(min_v, x);
  }
  CHECK(min_v == 0.0);
}

TEST_CASE("scaling every raw distance leaves visibilities unchanged") {
  std::vector<double> raw(85);
  affectbench::CounterRng rng(6);
  for (double& d : raw) d = rng.NextUniform(0.01, 0.9);
  std::vector<double> scaled = raw;
  for (double& d : scaled) d *= 3.7;
  const std::vector<double> a = NormalizeVisibility(raw);
  const std::vector<double> b = NormalizeVisibility(scaled);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  }
}

TEST_CASE("ssim of an image with itself is one") {
  const Image img = MakeTestImage(32, 32, 9);
  CHECK(Ssim(img, img) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ssim approaches one as a constant shift vanishes") {
  const Image base = ConstantImage(24, 24, 0.5f);
  double prev = -1.0;
  for (float delta : {0.2f, 0.1f, 0.05f, 0.01f}) {
    const Image shifted = ConstantImage(24, 24, 0.5f + delta);
    const double s = Ssim(base, shifted);
    CHECK(s < 1.0);
    CHECK(s > prev);
    prev = s;
  }
  CHECK(prev > 0.99);
}

TEST_CASE("ssim rejects undersized images and bad windows") {
  const Image small = MakeTestImage(8, 8, 4);
  CHECK_THROWS_AS(Ssim(small, small), std::invalid_argument);  // window 11
  SsimConfig cfg;
  cfg.window = 4;
  const Image img = MakeTestImage(32, 32, 4);
  CHECK_THROWS_AS(Ssim(img, img, cfg), std::invalid_argument);
}

TEST_CASE("L2 and SSIM rank the corruption suite differently somewhere") {
  const Image img = MakeTestImage(48, 48, 21);
  const auto suite = affectbench::CorruptionSuite(img, 77);

  std::vector<double> l2(suite.size()), sd(suite.size());
  for (std::size_t i = 0; i < suite.size(); ++i) {
    l2[i] = RawL2Distance(img, suite[i].second);
    sd[i] = SsimDistance(img, suite[i].second);
  }
  // Look for one pair ordered one way by L2 and the other way by SSIM.
  bool diverged = false;
  for (std::size_t i = 0; i < suite.size() && !diverged; ++i) {
    for (std::size_t j = i + 1; j < suite.size() && !diverged; ++j) {
      if ((l2[i] < l2[j] && sd[i] > sd[j]) ||
          (l2[i] > l2[j] && sd[i] < sd[j])) {
        diverged = true;
      }
    }
  }
  CHECK(diverged);
}
