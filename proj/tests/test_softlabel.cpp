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
#include <cstdio>
#include <vector>

#include "affectbench/errors.hpp"
#include "affectbench/rng.hpp"
#include "affectbench/softlabel.hpp"
#include "doctest.h"
#include "oracles.hpp"

using affectbench::Argmax;
using affectbench::CounterRng;
using affectbench::FitGmm;
using affectbench::FuseLabels;
using affectbench::GaussianComponent;
using affectbench::GmmParams;
using affectbench::GmmPosterior;
using affectbench::InjectLabelNoise;
using affectbench::InsufficientDataError;
using affectbench::IsSimplex;
using affectbench::LabeledVAPoint;
using affectbench::OneHot;
using affectbench::SmoothingAlpha;
using affectbench::SmoothingConfig;
using affectbench::Soften;
using affectbench::SoftLabel;
using affectbench::VAPoint;

namespace {

// Gaussian VA samples clipped into the valid square by rejection.
VAPoint SampleGaussianVA(CounterRng& rng, double mv, double ma, double sd) {
  for (;;) {
    const VAPoint p{mv + sd * rng.NextGaussian(),
                    ma + sd * rng.NextGaussian()};
    if (p.Valid()) return p;
  }
}

}  // namespace

TEST_CASE("priors are class frequencies") {
  std::vector<LabeledVAPoint> points;
  for (int i = 0; i < 6; ++i) {
    points.push_back({{0.1 * i - 0.2, 0.05 * i}, i % 2});
  }
  const GmmParams params = FitGmm(points, 2);
  CHECK(params.components[0].prior == 0.5);
  CHECK(params.components[1].prior == 0.5);
}

TEST_CASE("a degenerate cluster keeps its mean and gets the floored cov") {
  std::vector<LabeledVAPoint> points;
  for (int i = 0; i < 5; ++i) points.push_back({{0.3, -0.2}, 0});
  for (int i = 0; i < 5; ++i) {
    points.push_back({{-0.5 + 0.1 * i, 0.4 - 0.05 * i}, 1});
  }
  std::vector<std::string> warnings;
  const GmmParams params = FitGmm(points, 2, &warnings);
  CHECK(params.components[0].mean[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(params.components[0].mean[1] == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(params.components[0].cov[0][0] == doctest::Approx(1e-6));
  CHECK(params.components[0].cov[1][1] == doctest::Approx(1e-6));
  CHECK(!warnings.empty());
}

TEST_CASE("too few points per class is an error") {
  std::vector<LabeledVAPoint> points = {
      {{0.1, 0.1}, 0}, {{0.2, 0.1}, 0}, {{0.15, 0.2}, 0}, {{-0.6, 0.0}, 1},
  };
  CHECK_THROWS_AS(FitGmm(points, 2), InsufficientDataError);
}

TEST_CASE("refit recovers the generating means") {
  CounterRng rng(101);
  const double true_means[3][2] = {{-0.45, 0.35}, {0.4, 0.4}, {0.05, -0.5}};
  std::vector<LabeledVAPoint> points;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 1000; ++i) {
      points.push_back(
          {SampleGaussianVA(rng, true_means[k][0], true_means[k][1], 0.12),
           k});
    }
  }
  const GmmParams params = FitGmm(points, 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(params.components[k].mean[0] - true_means[k][0]) < 0.05);
    CHECK(std::abs(params.components[k].mean[1] - true_means[k][1]) < 0.05);
  }
}

TEST_CASE("single-component posterior is certain") {
  GmmParams params;
  params.components.push_back({1.0, {0.0, 0.0}, {{{0.1, 0.0}, {0.0, 0.1}}}});
  const SoftLabel post = GmmPosterior(params, {0.4, -0.3});
  CHECK(post.size() == 1);
  CHECK(post[0] == 1.0);
}

TEST_CASE("equidistant symmetric components split evenly") {
  GmmParams params;
  params.components.push_back({0.5, {-0.3, 0.0}, {{{0.05, 0.0}, {0.0, 0.05}}}});
  params.components.push_back({0.5, {0.3, 0.0}, {{{0.05, 0.0}, {0.0, 0.05}}}});
  const SoftLabel post = GmmPosterior(params, {0.0, 0.22});
  CHECK(post[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(post[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("posterior matches the direct density oracle") {
  CounterRng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng.NextBelow(4));
    GmmParams params;
    double prior_sum = 0.0;
    for (int i = 0; i < k; ++i) {
      GaussianComponent c;
      c.prior = rng.NextUniform(0.1, 1.0);
      prior_sum += c.prior;
      c.mean = {rng.NextUniform(-0.6, 0.6), rng.NextUniform(-0.6, 0.6)};
      const double sx = rng.NextUniform(0.05, 0.4);
      const double sy = rng.NextUniform(0.05, 0.4);
      const double rho = rng.NextUniform(-0.6, 0.6);
      c.cov = {{{sx * sx, rho * sx * sy}, {rho * sx * sy, sy * sy}}};
      params.components.push_back(c);
    }
    for (auto& c : params.components) c.prior /= prior_sum;

    const VAPoint p{rng.NextUniform(-1.0, 1.0), rng.NextUniform(-1.0, 1.0)};
    const SoftLabel fast = GmmPosterior(params, p);
    const std::vector<double> slow =
        affectbench::testing::OracleGmmPosterior(params, p);
    for (int i = 0; i < k; ++i) {
      CHECK(std::abs(fast[i] - slow[i]) < 1e-10);
    }
    CHECK(IsSimplex(fast, 1e-9));
  }
}

TEST_CASE("fusion boundary cases") {
  const SoftLabel onehot = {1.0, 0.0};
  const SoftLabel gmm = {0.6, 0.4};
  CHECK(FuseLabels(onehot, gmm, 1.0) == onehot);
  CHECK(FuseLabels(onehot, gmm, 0.0) == gmm);
  const SoftLabel mid = FuseLabels(onehot, gmm, 0.5);
  CHECK(mid[0] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(mid[1] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK_THROWS_AS(FuseLabels({1.0}, gmm, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(FuseLabels(onehot, gmm, 1.5), std::invalid_argument);
}

TEST_CASE("smoothing alpha endpoints and curve") {
  const SmoothingConfig cfg{2.0, 8, 0.5};
  CHECK(SmoothingAlpha(1.0, cfg) == 0.0);
  CHECK(SmoothingAlpha(0.0, cfg) == 0.875);
  CHECK(SmoothingAlpha(0.5, cfg) == 0.21875);
  // Non-increasing in visibility.
  double prev = 1.0;
  for (double v = 0.0; v <= 1.0; v += 0.05) {
    const double a = SmoothingAlpha(v, cfg);
    CHECK(a <= prev + 1e-15);
    CHECK(a >= 0.0);
    CHECK(a <= 1.0 - cfg.PMin());
    prev = a;
  }
  CHECK_THROWS_AS(SmoothingAlpha(1.5, cfg), std::invalid_argument);
}

TEST_CASE("soften at the extremes") {
  const SoftLabel fused = {0.2, 0.5, 0.3};
  CHECK(Soften(fused, 0.0, 3) == fused);

  const SoftLabel onehot = OneHot(2, 8);
  const SoftLabel worst = Soften(onehot, 0.875, 8);
  CHECK(worst[2] == 0.234375);
  for (int k = 0; k < 8; ++k) {
    if (k != 2) CHECK(worst[k] == 0.109375);
  }

  const SoftLabel uniform(4, 0.25);
  const SoftLabel smoothed = Soften(uniform, 0.6, 4);
  for (double v : smoothed) CHECK(v == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(Soften(uniform, 0.9, 4), std::invalid_argument);
  CHECK_THROWS_AS(Soften(uniform, -0.1, 4), std::invalid_argument);
}

TEST_CASE("soften floors entries, keeps the argmax, decays the max") {
  CounterRng rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng.NextBelow(7));
    SoftLabel fused(k);
    double sum = 0.0;
    for (double& v : fused) {
      v = rng.NextUnit() + 1e-3;
      sum += v;
    }
    for (double& v : fused) v /= sum;

    const double alpha_max = 1.0 - 1.0 / k;
    double prev_max = 2.0;
    for (double frac : {0.0, 0.3, 0.7, 1.0}) {
      const double alpha = frac * alpha_max;
      const SoftLabel out = Soften(fused, alpha, k);
      CHECK(IsSimplex(out, 1e-9));
      for (double v : out) CHECK(v >= alpha / k - 1e-12);
      CHECK(Argmax(out) == Argmax(fused));
      const double mx = out[Argmax(out)];
      CHECK(mx < prev_max);
      prev_max = mx;
    }
  }
}

TEST_CASE("label noise: no-op, forced binary flip, exact count") {
  CounterRng rng(109);
  std::vector<int> labels(1000);
  for (int& l : labels) l = static_cast<int>(rng.NextBelow(8));

  CHECK(InjectLabelNoise(labels, 0.0, 8, 5) == labels);

  std::vector<int> binary(100);
  for (int i = 0; i < 100; ++i) binary[i] = i % 2;
  const std::vector<int> flipped = InjectLabelNoise(binary, 1.0, 2, 5);
  for (int i = 0; i < 100; ++i) CHECK(flipped[i] == 1 - binary[i]);

  const std::vector<int> noisy = InjectLabelNoise(labels, 0.3, 8, 99);
  int changed = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (noisy[i] != labels[i]) ++changed;
    CHECK(noisy[i] >= 0);
    CHECK(noisy[i] < 8);
  }
  CHECK(changed == 300);
  CHECK(InjectLabelNoise(labels, 0.3, 8, 99) == noisy);  // deterministic
  CHECK(InjectLabelNoise(labels, 0.3, 8, 100) != noisy);

  CHECK_THROWS_AS(InjectLabelNoise(labels, 1.5, 8, 0), std::invalid_argument);
  CHECK_THROWS_AS(InjectLabelNoise(binary, 0.5, 1, 0), std::invalid_argument);
}

TEST_CASE("gmm params file round-trips exactly") {
  std::vector<LabeledVAPoint> points;
  CounterRng rng(113);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 20; ++i) {
      points.push_back(
          {SampleGaussianVA(rng, -0.3 + 0.3 * k, 0.2 - 0.2 * k, 0.15), k});
    }
  }
  const GmmParams params = FitGmm(points, 3);
  const std::string path = "/tmp/affectbench_gmm_test.json";
  SaveGmmParams(params, path);
  const GmmParams loaded = affectbench::LoadGmmParams(path);
  CHECK(loaded.ClassCount() == params.ClassCount());
  CHECK(loaded.fit_config_digest == params.fit_config_digest);
  for (int k = 0; k < 3; ++k) {
    CHECK(loaded.components[k].prior == params.components[k].prior);
    CHECK(loaded.components[k].mean == params.components[k].mean);
    CHECK(loaded.components[k].cov == params.components[k].cov);
  }
  std::remove(path.c_str());
}

TEST_CASE("one-hot and simplex helpers") {
  const SoftLabel oh = OneHot(1, 3);
  CHECK(oh == SoftLabel{0.0, 1.0, 0.0});
  CHECK(IsSimplex(oh));
  CHECK(!IsSimplex({0.5, 0.6}));
  CHECK(!IsSimplex({-0.1, 1.1}));
  CHECK(Argmax({0.1, 0.5, 0.4}) == 1);
  CHECK(Argmax({0.5, 0.5}) == 0);
  CHECK_THROWS_AS(OneHot(3, 3), std::invalid_argument);
}
