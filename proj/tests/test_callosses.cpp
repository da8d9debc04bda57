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

#include <cmath>
#include <vector>

#include "affectbench/callosses.hpp"
#include "affectbench/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using affectbench::CombinedLoss;
using affectbench::CounterRng;
using affectbench::FocalLoss;
using affectbench::LossOutput;
using affectbench::MaxEntConfig;
using affectbench::MaxEntLoss;
using affectbench::MblsLoss;
using affectbench::SoftLabel;
using affectbench::Softmax;

namespace {

// Random simplex target.
SoftLabel RandomTarget(CounterRng& rng, int k) {
  SoftLabel t(k);
  double sum = 0.0;
  for (double& v : t) {
    v = -std::log(1.0 - rng.NextUnit() + 1e-12);
    sum += v;
  }
  for (double& v : t) v /= sum;
  return t;
}

double RelError(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-6});
}

}  // namespace

TEST_CASE("softmax of equal logits is uniform") {
  const SoftLabel p = Softmax({2.5, 2.5, 2.5, 2.5});
  for (double v : p) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("softmax is shift invariant") {
  const SoftLabel a = Softmax({0.3, -1.2, 2.0});
  const SoftLabel b = Softmax({0.3 + 7.0, -1.2 + 7.0, 2.0 + 7.0});
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-12));
  }
}

TEST_CASE("softmax survives huge logits") {
  const SoftLabel p = Softmax({1000.0, 0.0});
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(0.0));
  CHECK(std::isfinite(p[0]));
}

TEST_CASE("focal loss vanishes on a saturated correct prediction") {
  const LossOutput out = FocalLoss({1000.0, 0.0}, {1.0, 0.0}, 0.0);
  CHECK(out.value == 0.0);
}

TEST_CASE("focal loss at gamma 0 is the sample NLL") {
  CounterRng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng.NextBelow(5));
    std::vector<double> z(k);
    for (double& v : z) v = rng.NextUniform(-3.0, 3.0);
    const SoftLabel target = RandomTarget(rng, k);
    const SoftLabel p = Softmax(z);
    double nll = 0.0;
    for (int i = 0; i < k; ++i) {
      nll -= target[i] * std::log(std::max(p[i], 1e-12));
    }
    CHECK(FocalLoss(z, target, 0.0).value ==
          doctest::Approx(nll).epsilon(1e-12));
  }
}

TEST_CASE("focal loss hand example at gamma 2") {
  // Logits chosen so the softmax lands on (0.7, 0.3).
  const std::vector<double> z = {std::log(0.7), std::log(0.3)};
  const SoftLabel p = Softmax(z);
  const double expected = std::pow(1.0 - p[0], 2.0) * (-std::log(p[0]));
  const LossOutput out = FocalLoss(z, {1.0, 0.0}, 2.0);
  CHECK(out.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(out.value == doctest::Approx(0.0321).epsilon(1e-2));
}

TEST_CASE("maxent with lambda 0 equals focal") {
  CounterRng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + static_cast<int>(rng.NextBelow(5));
    std::vector<double> z(k);
    for (double& v : z) v = rng.NextUniform(-3.0, 3.0);
    const SoftLabel target = RandomTarget(rng, k);
    MaxEntConfig cfg;
    cfg.gamma = 2.0;
    cfg.lambda_mu = 0.0;
    const LossOutput me = MaxEntLoss(z, target, cfg);
    const LossOutput fo = FocalLoss(z, target, 2.0);
    CHECK(me.value == fo.value);
    for (std::size_t i = 0; i < me.grad.size(); ++i) {
      CHECK(me.grad[i] == fo.grad[i]);
    }
  }
}

TEST_CASE("maxent constraint term under a uniform posterior") {
  // Equal logits over 8 classes: expectation of 1..8 is 4.5.
  const std::vector<double> z(8, 0.0);
  const SoftLabel target = affectbench::OneHot(0, 8);
  MaxEntConfig cfg;
  cfg.gamma = 0.0;
  cfg.lambda_mu = 2.0;

  // Default mu_g is the uniform expectation, so the constraint vanishes.
  CHECK(cfg.MuGFor(8) == doctest::Approx(4.5).epsilon(1e-12));
  const double baseline = FocalLoss(z, target, 0.0).value;
  CHECK(MaxEntLoss(z, target, cfg).value ==
        doctest::Approx(baseline).epsilon(1e-12));

  // With an overridden target mean the signed term is lambda * (4.5 - mu_g).
  cfg.mu_g = 3.6;
  CHECK(MaxEntLoss(z, target, cfg).value ==
        doctest::Approx(baseline + 2.0 * (4.5 - 3.6)).epsilon(1e-12));

  // The printed form is signed: a mean above the target lowers the loss.
  cfg.mu_g = 5.0;
  CHECK(MaxEntLoss(z, target, cfg).value < baseline);
}

TEST_CASE("maxent absolute-constraint mode penalizes both directions") {
  const std::vector<double> z(8, 0.0);
  const SoftLabel target = affectbench::OneHot(0, 8);
  MaxEntConfig cfg;
  cfg.lambda_mu = 2.0;
  cfg.mu_g = 5.0;
  cfg.absolute_constraint = true;
  const double baseline = FocalLoss(z, target, 0.0).value;
  CHECK(MaxEntLoss(z, target, cfg).value ==
        doctest::Approx(baseline + 2.0 * 0.5).epsilon(1e-12));
}

TEST_CASE("mbls is zero when logits sit inside the margin") {
  CHECK(MblsLoss({1.0, 1.0, 1.0}, 0.0).value == 0.0);
  CHECK(MblsLoss({3.0, 1.0, 2.0}, 10.0).value == 0.0);
}

TEST_CASE("mbls hand example") {
  const LossOutput out = MblsLoss({12.0, 0.0, 5.0}, 10.0);
  CHECK(out.value == 2.0);
  CHECK(out.grad[0] == 1.0);   // one active hinge pulls the max down
  CHECK(out.grad[1] == -1.0);
  CHECK(out.grad[2] == 0.0);
}

TEST_CASE("mbls is shift invariant") {
  CounterRng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> z(4);
    for (double& v : z) v = rng.NextUniform(-10.0, 10.0);
    std::vector<double> shifted = z;
    const double c = rng.NextUniform(-50.0, 50.0);
    for (double& v : shifted) v += c;
    CHECK(MblsLoss(z, 3.0).value ==
          doctest::Approx(MblsLoss(shifted, 3.0).value).epsilon(1e-9));
  }
}

TEST_CASE("focal and maxent values are shift invariant") {
  CounterRng rng(53);
  std::vector<double> z = {0.4, -1.0, 2.3};
  std::vector<double> shifted = {0.4 + 11.0, -1.0 + 11.0, 2.3 + 11.0};
  const SoftLabel target = RandomTarget(rng, 3);
  CHECK(FocalLoss(z, target, 2.0).value ==
        doctest::Approx(FocalLoss(shifted, target, 2.0).value)
            .epsilon(1e-9));
  MaxEntConfig cfg;
  cfg.gamma = 1.0;
  cfg.lambda_mu = 0.5;
  CHECK(MaxEntLoss(z, target, cfg).value ==
        doctest::Approx(MaxEntLoss(shifted, target, cfg).value)
            .epsilon(1e-9));
}

TEST_CASE("combined loss is the sum of its parts and vanishes when all do") {
  CounterRng rng(59);
  MaxEntConfig cfg;
  cfg.gamma = 1.5;
  cfg.lambda_mu = 0.7;
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + static_cast<int>(rng.NextBelow(5));
    std::vector<double> z(k);
    for (double& v : z) v = rng.NextUniform(-4.0, 4.0);
    const SoftLabel target = RandomTarget(rng, k);
    const LossOutput combined = CombinedLoss(z, target, cfg, 2.0);
    const double expected =
        MaxEntLoss(z, target, cfg).value + MblsLoss(z, 2.0).value;
    CHECK(combined.value == doctest::Approx(expected).epsilon(1e-12));
  }
  MaxEntConfig zero_cfg;  // gamma 0, lambda 0
  const LossOutput silent =
      CombinedLoss({1000.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, zero_cfg, 2000.0);
  CHECK(silent.value == 0.0);
}

TEST_CASE("non-negativity of focal and mbls") {
  CounterRng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + static_cast<int>(rng.NextBelow(5));
    std::vector<double> z(k);
    for (double& v : z) v = rng.NextUniform(-5.0, 5.0);
    const SoftLabel target = RandomTarget(rng, k);
    CHECK(FocalLoss(z, target, rng.NextUniform(0.0, 3.0)).value >= 0.0);
    CHECK(MblsLoss(z, rng.NextUniform(0.0, 5.0)).value >= 0.0);
  }
}

TEST_CASE("analytic gradients match central finite differences") {
  CounterRng rng(67);
  const double kinks_margin = 1e-3;
  int checked = 0;
  while (checked < 100) {
    const int k = 2 + static_cast<int>(rng.NextBelow(5));
    std::vector<double> z(k);
    for (double& v : z) v = rng.NextUniform(-3.0, 3.0);
    const SoftLabel target = RandomTarget(rng, k);
    MaxEntConfig cfg;
    cfg.gamma = std::vector<double>{0.0, 0.5, 1.0, 2.0,
                                    3.0}[rng.NextBelow(5)];
    cfg.lambda_mu = rng.NextUniform(0.0, 1.0);
    const double margin = rng.NextUniform(0.5, 4.0);

    // Stay away from the hinge kinks and argmax ties.
    const double zmax = *std::max_element(z.begin(), z.end());
    bool near_kink = false;
    int at_max = 0;
    for (double v : z) {
      if (std::abs(zmax - v - margin) < kinks_margin) near_kink = true;
      if (zmax - v < kinks_margin) ++at_max;
    }
    if (near_kink || at_max > 1) continue;
    ++checked;

    const auto check_grad = [&](const LossOutput& out, auto value_of,
                                const char* name) {
      const std::vector<double> fd =
          affectbench::testing::FiniteDifferenceGrad(z, value_of);
      for (int j = 0; j < k; ++j) {
        CAPTURE(name);
        CAPTURE(j);
        CHECK(RelError(out.grad[j], fd[j]) < 1e-5);
      }
    };
    check_grad(FocalLoss(z, target, cfg.gamma),
               [&](const std::vector<double>& zz) {
                 return FocalLoss(zz, target, cfg.gamma).value;
               },
               "focal");
    check_grad(MaxEntLoss(z, target, cfg),
               [&](const std::vector<double>& zz) {
                 return MaxEntLoss(zz, target, cfg).value;
               },
               "maxent");
    check_grad(MblsLoss(z, margin),
               [&](const std::vector<double>& zz) {
                 return MblsLoss(zz, margin).value;
               },
               "mbls");
    check_grad(CombinedLoss(z, target, cfg, margin),
               [&](const std::vector<double>& zz) {
                 return CombinedLoss(zz, target, cfg, margin).value;
               },
               "combined");
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Softmax({}), std::invalid_argument);
  CHECK_THROWS_AS(FocalLoss({1.0, 2.0}, {0.5, 0.5}, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(FocalLoss({1.0, 2.0}, {0.7, 0.7}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(MblsLoss({1.0, 2.0}, -0.5), std::invalid_argument);
  MaxEntConfig bad;
  bad.class_values = {2.0, 1.0};
  CHECK_THROWS_AS(MaxEntLoss({1.0, 2.0}, {0.5, 0.5}, bad),
                  std::invalid_argument);
}
