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

#ifndef AFFECTBENCH_CALMETRICS_HPP_
#define AFFECTBENCH_CALMETRICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "affectbench/softlabel.hpp"

namespace affectbench {

// Model predictions and their targets. Targets are either hard class indices
// or soft distributions; with soft targets the binned calibration metrics and
// accuracy use the target argmax for correctness, while NLL uses the full
// distribution.
struct PredictionSet {
  std::vector<SoftLabel> probs;        // N rows, each on the simplex
  std::vector<int> hard_targets;       // N entries (argmax when soft)
  std::vector<SoftLabel> soft_targets; // empty for hard-labeled sets
  std::vector<std::string> ids;        // optional sample identifiers

  int class_count = 0;
  bool HasSoftTargets() const { return !soft_targets.empty(); }
  std::size_t Size() const { return probs.size(); }
  // Throws invalid_argument on shape or simplex violations.
  void Validate() const;
};

struct ReliabilityBin {
  std::int64_t count = 0;
  double mean_confidence = 0.0;
  double mean_accuracy = 0.0;
  double lower_edge = 0.0;
  double upper_edge = 0.0;
};

struct ReliabilityBins {
  std::vector<ReliabilityBin> bins;
  std::int64_t total = 0;
};

// Top-1 accuracy; argmax ties break to the lowest class index.
double Accuracy(const PredictionSet& p);

// Unweighted mean of per-class F1; a class absent from both targets and
// predictions contributes 0.
double MacroF1(const PredictionSet& p);

// -(1/N) sum_i sum_k y_ik log p_ik, probabilities floored at 1e-12.
double Nll(const PredictionSet& p);

// Equal-width confidence bins over (0,1]; empty bins contribute 0.
double Ece(const PredictionSet& p, int bins,
           ReliabilityBins* reliability = nullptr);

// Equal-mass bins after sorting by confidence; sizes differ by at most one
// (lower-confidence bins take the extra samples). Requires N >= bins.
double AdaEce(const PredictionSet& p, int bins);

// Classwise calibration error: bins every sample by its class-k probability
// for each class, averages the weighted gaps over classes.
double Cece(const PredictionSet& p, int bins);

// Binning-free calibration error: maximum absolute difference between the
// cumulative confidence and cumulative correctness curves (samples sorted by
// confidence, both cumulative sums divided by N).
double Kse(const PredictionSet& p);

// Expectation reading of the same discrepancy: the mean absolute difference
// between the two cumulative curves.
double KseExpected(const PredictionSet& p);

struct EvalConfig {
  int ece_bins = 15;
  std::string dataset_id;
  std::string corruption_filter;  // "all", "clean", a kind, or "severity=N"
  std::string manifest_sha256;
  std::string predictions_sha256;
};

struct EvalReport {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  double nll = 0.0;
  double ece = 0.0;
  double ada_ece = 0.0;
  double cece = 0.0;
  double kse = 0.0;
  double kse_expected = 0.0;
  std::int64_t sample_count = 0;
  ReliabilityBins reliability;
  EvalConfig config;
};

// Runs the whole metric suite once over a shared preprocessing pass.
EvalReport Evaluate(const PredictionSet& p, const EvalConfig& config);

// Structured-text report with stable key order; loads back field-by-field
// identical.
void SaveEvalReport(const EvalReport& report, const std::string& path);
EvalReport LoadEvalReport(const std::string& path);
std::string EvalReportToJson(const EvalReport& report);

// Reliability bins as delimited text for plotting.
void SaveReliabilityTable(const ReliabilityBins& bins,
                          const std::string& path);

}  // namespace affectbench

#endif  // AFFECTBENCH_CALMETRICS_HPP_
