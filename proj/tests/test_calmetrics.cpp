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
#include <cstdio>
#include <vector>

#include "affectbench/calmetrics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using affectbench::Accuracy;
using affectbench::AdaEce;
using affectbench::Cece;
using affectbench::CounterRng;
using affectbench::Ece;
using affectbench::EvalConfig;
using affectbench::EvalReport;
using affectbench::Evaluate;
using affectbench::Kse;
using affectbench::MacroF1;
using affectbench::Nll;
using affectbench::PredictionSet;
using affectbench::ReliabilityBins;

namespace {

PredictionSet MakeSet(std::vector<std::vector<double>> probs,
                      std::vector<int> targets) {
  PredictionSet p;
  p.class_count = static_cast<int>(probs[0].size());
  p.probs = std::move(probs);
  p.hard_targets = std::move(targets);
  return p;
}

// The 4-sample reliability example used across the binned metrics:
// confidences {0.9, 0.8, 0.6, 0.55}, correctness {1, 0, 1, 0}.
PredictionSet FourSampleSet() {
  return MakeSet({{0.9, 0.1}, {0.2, 0.8}, {0.6, 0.4}, {0.45, 0.55}},
                 {0, 0, 0, 0});
}

}  // namespace

TEST_CASE("accuracy counts argmax hits") {
  CHECK(Accuracy(MakeSet({{1, 0}, {0, 1}}, {0, 1})) == 1.0);
  CHECK(Accuracy(MakeSet({{1, 0}, {0, 1}}, {1, 0})) == 0.0);
  CHECK(Accuracy(MakeSet({{1, 0}, {0, 1}, {0.7, 0.3}, {0.2, 0.8}},
                         {0, 1, 0, 0})) == 0.75);
}

TEST_CASE("argmax ties break to the lowest class index") {
  const PredictionSet p = MakeSet({{0.5, 0.5}}, {0});
  CHECK(Accuracy(p) == 1.0);
}

TEST_CASE("macro F1 on a small confusion matrix") {
  // Actual/predicted pairs giving the confusion matrix [[2,0],[1,1]].
  const PredictionSet p =
      MakeSet({{1, 0}, {1, 0}, {1, 0}, {0, 1}}, {0, 0, 1, 1});
  // class 0: PRC 2/3, TPR 1 -> 0.8; class 1: PRC 1, TPR 0.5 -> 2/3.
  CHECK(MacroF1(p) == doctest::Approx((0.8 + 2.0 / 3.0) / 2).epsilon(1e-12));
}

TEST_CASE("macro F1 is 1 for perfect predictions") {
  CHECK(MacroF1(MakeSet({{1, 0}, {0, 1}}, {0, 1})) == 1.0);
}

TEST_CASE("a class absent everywhere still divides the macro average") {
  // 3 classes but only classes 0 and 1 appear.
  const PredictionSet p =
      MakeSet({{1, 0, 0}, {0, 1, 0}}, {0, 1});
  CHECK(MacroF1(p) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("NLL of exact one-hot predictions is zero") {
  CHECK(Nll(MakeSet({{1, 0}, {0, 1}}, {0, 1})) == 0.0);
}

TEST_CASE("NLL of uniform predictions is log K") {
  PredictionSet p = MakeSet({{0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125,
                              0.125}},
                            {3});
  CHECK(Nll(p) == doctest::Approx(std::log(8.0)).epsilon(1e-12));
}

TEST_CASE("NLL with a soft target") {
  PredictionSet p = MakeSet({{0.8, 0.2}}, {0});
  p.soft_targets = {{0.5, 0.5}};
  const double expected = -(0.5 * std::log(0.8) + 0.5 * std::log(0.2));
  CHECK(Nll(p) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("ECE of confidently correct predictions is zero") {
  CHECK(Ece(MakeSet({{1, 0}, {1, 0}}, {0, 0}), 15) == 0.0);
}

TEST_CASE("ECE hand example with two bins") {
  // All four confidences fall in (0.5, 1]: acc 0.5, conf 0.7125.
  CHECK(Ece(FourSampleSet(), 2) == doctest::Approx(0.2125).epsilon(1e-12));
}

TEST_CASE("ECE rejects zero bins and fills reliability data") {
  CHECK_THROWS_AS(Ece(FourSampleSet(), 0), std::invalid_argument);
  ReliabilityBins bins;
  Ece(FourSampleSet(), 2, &bins);
  CHECK(bins.bins.size() == 2);
  CHECK(bins.bins[0].count == 0);  // empty bin contributes nothing
  CHECK(bins.bins[1].count == 4);
  CHECK(bins.total == 4);
  CHECK(bins.bins[1].mean_confidence == doctest::Approx(0.7125));
  CHECK(bins.bins[1].mean_accuracy == doctest::Approx(0.5));
}

TEST_CASE("single-bin ECE is the confidence-accuracy gap") {
  CounterRng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const PredictionSet p = affectbench::testing::RandomPredictionSet(rng);
    double conf_sum = 0.0;
    for (const auto& row : p.probs) {
      conf_sum += row[affectbench::Argmax(row)];
    }
    const double expected =
        std::abs(conf_sum / p.probs.size() - Accuracy(p));
    CHECK(Ece(p, 1) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(AdaEce(p, 1) == doctest::Approx(Ece(p, 1)).epsilon(1e-12));
  }
}

TEST_CASE("AdaECE hand example with two equal-mass bins") {
  // Sorted: {0.55, 0.6} and {0.8, 0.9}; gaps 0.075 and 0.35.
  CHECK(AdaEce(FourSampleSet(), 2) == doctest::Approx(0.2125).epsilon(1e-12));
}

TEST_CASE("AdaECE needs at least one sample per bin") {
  CHECK_THROWS_AS(AdaEce(FourSampleSet(), 5), std::invalid_argument);
}

TEST_CASE("CECE is zero for one-hot-perfect and classwise-calibrated sets") {
  CHECK(Cece(MakeSet({{1, 0}, {0, 1}}, {0, 1}), 15) == 0.0);
  // Constant {0.7, 0.3} predictions with 70% of targets class 0.
  std::vector<std::vector<double>> probs(10, {0.7, 0.3});
  std::vector<int> targets(10, 0);
  for (int i = 7; i < 10; ++i) targets[i] = 1;
  CHECK(Cece(MakeSet(std::move(probs), std::move(targets)), 1) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("KSE endpoints") {
  CHECK(Kse(MakeSet({{1, 0}, {1, 0}}, {0, 0})) == 0.0);
  CHECK(Kse(MakeSet({{1, 0}, {1, 0}}, {1, 1})) == 1.0);
}

TEST_CASE("binned metrics match the brute-force oracles") {
  CounterRng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const PredictionSet p = affectbench::testing::RandomPredictionSet(rng);
    const int bins = 1 + static_cast<int>(rng.NextBelow(5));
    CAPTURE(trial);
    CHECK(Ece(p, bins) ==
          doctest::Approx(affectbench::testing::OracleEce(p, bins))
              .epsilon(1e-12));
    if (p.Size() >= static_cast<std::size_t>(bins)) {
      CHECK(AdaEce(p, bins) ==
            doctest::Approx(affectbench::testing::OracleAdaEce(p, bins))
                .epsilon(1e-12));
    }
    CHECK(Cece(p, bins) ==
          doctest::Approx(affectbench::testing::OracleCece(p, bins))
              .epsilon(1e-12));
    CHECK(Kse(p) ==
          doctest::Approx(affectbench::testing::OracleKse(p)).epsilon(1e-12));
  }
}

TEST_CASE("metrics are invariant under sample reordering") {
  CounterRng rng(29);
  const PredictionSet p = affectbench::testing::RandomPredictionSet(rng, 30);
  PredictionSet reversed = p;
  std::reverse(reversed.probs.begin(), reversed.probs.end());
  std::reverse(reversed.hard_targets.begin(), reversed.hard_targets.end());
  CHECK(Accuracy(p) == Accuracy(reversed));
  CHECK(MacroF1(p) == doctest::Approx(MacroF1(reversed)).epsilon(1e-12));
  CHECK(Nll(p) == doctest::Approx(Nll(reversed)).epsilon(1e-12));
  CHECK(Ece(p, 3) == doctest::Approx(Ece(reversed, 3)).epsilon(1e-12));
  CHECK(AdaEce(p, 3) == doctest::Approx(AdaEce(reversed, 3)).epsilon(1e-12));
  CHECK(Cece(p, 3) == doctest::Approx(Cece(reversed, 3)).epsilon(1e-12));
  CHECK(Kse(p) == doctest::Approx(Kse(reversed)).epsilon(1e-12));
}

TEST_CASE("metric ranges hold on random sets") {
  CounterRng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PredictionSet p = affectbench::testing::RandomPredictionSet(rng);
    for (double m : {Ece(p, 4), Cece(p, 4), Kse(p)}) {
      CHECK(m >= 0.0);
      CHECK(m <= 1.0);
    }
    CHECK(Nll(p) >= 0.0);
    CHECK(Accuracy(p) >= 0.0);
    CHECK(Accuracy(p) <= 1.0);
    CHECK(MacroF1(p) >= 0.0);
    CHECK(MacroF1(p) <= 1.0);
  }
}

TEST_CASE("evaluate on perfect predictions and report round-trip") {
  PredictionSet p = MakeSet({{1, 0}, {0, 1}, {1, 0}, {0, 1}}, {0, 1, 0, 1});
  EvalConfig config;
  config.ece_bins = 2;
  config.dataset_id = "toy";
  config.corruption_filter = "all";
  config.manifest_sha256 = "feed";
  const EvalReport report = Evaluate(p, config);
  CHECK(report.accuracy == 1.0);
  CHECK(report.macro_f1 == 1.0);
  CHECK(report.nll == 0.0);
  CHECK(report.ece == 0.0);
  CHECK(report.ada_ece == 0.0);
  CHECK(report.cece == 0.0);
  CHECK(report.kse == 0.0);
  CHECK(report.sample_count == 4);

  const std::string path = "/tmp/affectbench_report_test.json";
  affectbench::SaveEvalReport(report, path);
  const EvalReport loaded = affectbench::LoadEvalReport(path);
  CHECK(loaded.accuracy == report.accuracy);
  CHECK(loaded.macro_f1 == report.macro_f1);
  CHECK(loaded.nll == report.nll);
  CHECK(loaded.ece == report.ece);
  CHECK(loaded.ada_ece == report.ada_ece);
  CHECK(loaded.cece == report.cece);
  CHECK(loaded.kse == report.kse);
  CHECK(loaded.kse_expected == report.kse_expected);
  CHECK(loaded.sample_count == report.sample_count);
  CHECK(loaded.config.dataset_id == report.config.dataset_id);
  CHECK(loaded.config.corruption_filter == report.config.corruption_filter);
  CHECK(loaded.config.manifest_sha256 == report.config.manifest_sha256);
  CHECK(loaded.config.ece_bins == report.config.ece_bins);
  CHECK(loaded.reliability.bins.size() == report.reliability.bins.size());
  for (std::size_t i = 0; i < loaded.reliability.bins.size(); ++i) {
    CHECK(loaded.reliability.bins[i].count ==
          report.reliability.bins[i].count);
    CHECK(loaded.reliability.bins[i].mean_confidence ==
          report.reliability.bins[i].mean_confidence);
    CHECK(loaded.reliability.bins[i].mean_accuracy ==
          report.reliability.bins[i].mean_accuracy);
  }
  std::remove(path.c_str());
}

TEST_CASE("prediction set validation") {
  PredictionSet bad = MakeSet({{0.5, 0.6}}, {0});  // does not sum to 1
  CHECK_THROWS_AS(bad.Validate(), std::invalid_argument);
  PredictionSet ok = MakeSet({{0.5, 0.5}}, {0});
  CHECK_NOTHROW(ok.Validate());
  PredictionSet range = MakeSet({{0.5, 0.5}}, {2});
  CHECK_THROWS_AS(range.Validate(), std::invalid_argument);
}
