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

#include "affectbench/calmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "affectbench/errors.hpp"
#include "json.hpp"

namespace affectbench {

namespace {

constexpr double kLogFloor = 1e-12;

// Top-1 confidence and correctness of every sample, shared by the binned
// metrics.
struct TopStats {
  std::vector<double> confidence;
  std::vector<char> correct;
};

TopStats ComputeTopStats(const PredictionSet& p) {
  TopStats stats;
  const std::size_t n = p.Size();
  stats.confidence.resize(n);
  stats.correct.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int pred = Argmax(p.probs[i]);
    stats.confidence[i] = p.probs[i][pred];
    stats.correct[i] = pred == p.hard_targets[i] ? 1 : 0;
  }
  return stats;
}

// Equal-width bin over (0,1]: bin b covers ((b-1)/B, b/B].
int WidthBinIndex(double value, int bins) {
  int idx = static_cast<int>(std::ceil(value * bins)) - 1;
  if (idx < 0) idx = 0;
  if (idx >= bins) idx = bins - 1;
  return idx;
}

// Indices sorted ascending by (confidence, correctness). Breaking confidence
// ties on correctness keeps every sorted-order metric invariant under sample
// reordering.
std::vector<std::size_t> SortedByConfidence(const TopStats& stats) {
  std::vector<std::size_t> order(stats.confidence.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&stats](std::size_t a, std::size_t b) {
                     if (stats.confidence[a] != stats.confidence[b]) {
                       return stats.confidence[a] < stats.confidence[b];
                     }
                     return stats.correct[a] < stats.correct[b];
                   });
  return order;
}

}  // namespace

void PredictionSet::Validate() const {
  if (probs.empty()) {
    throw std::invalid_argument("prediction set: no samples");
  }
  if (class_count < 1) {
    throw std::invalid_argument("prediction set: class_count not set");
  }
  if (hard_targets.size() != probs.size()) {
    throw std::invalid_argument("prediction set: target count mismatch");
  }
  if (!soft_targets.empty() && soft_targets.size() != probs.size()) {
    throw std::invalid_argument("prediction set: soft target count mismatch");
  }
  if (!ids.empty() && ids.size() != probs.size()) {
    throw std::invalid_argument("prediction set: id count mismatch");
  }
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (static_cast<int>(probs[i].size()) != class_count) {
      throw std::invalid_argument("prediction set: row length != K");
    }
    if (!IsSimplex(probs[i], 1e-6)) {
      throw std::invalid_argument("prediction set: row " + std::to_string(i) +
                                  " is not a probability vector");
    }
    if (hard_targets[i] < 0 || hard_targets[i] >= class_count) {
      throw std::invalid_argument("prediction set: target out of range");
    }
  }
}

double Accuracy(const PredictionSet& p) {
  std::int64_t hits = 0;
  for (std::size_t i = 0; i < p.Size(); ++i) {
    if (Argmax(p.probs[i]) == p.hard_targets[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(p.Size());
}

double MacroF1(const PredictionSet& p) {
  const int k_count = p.class_count;
  std::vector<std::int64_t> tp(k_count, 0), fp(k_count, 0), fn(k_count, 0);
  for (std::size_t i = 0; i < p.Size(); ++i) {
    const int pred = Argmax(p.probs[i]);
    const int truth = p.hard_targets[i];
    if (pred == truth) {
      ++tp[pred];
    } else {
      ++fp[pred];
      ++fn[truth];
    }
  }
  double f1_sum = 0.0;
  for (int k = 0; k < k_count; ++k) {
    const double denom_prc = static_cast<double>(tp[k] + fp[k]);
    const double denom_tpr = static_cast<double>(tp[k] + fn[k]);
    if (denom_prc == 0.0 || denom_tpr == 0.0 || tp[k] == 0) {
      continue;  // contributes 0
    }
    const double prc = static_cast<double>(tp[k]) / denom_prc;
    const double tpr = static_cast<double>(tp[k]) / denom_tpr;
    f1_sum += 2.0 * tpr * prc / (tpr + prc);
  }
  return f1_sum / static_cast<double>(k_count);
}

double Nll(const PredictionSet& p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.Size(); ++i) {
    if (p.HasSoftTargets()) {
      for (int k = 0; k < p.class_count; ++k) {
        const double y = p.soft_targets[i][k];
        if (y > 0.0) {
          total -= y * std::log(std::max(p.probs[i][k], kLogFloor));
        }
      }
    } else {
      total -= std::log(
          std::max(p.probs[i][p.hard_targets[i]], kLogFloor));
    }
  }
  return total / static_cast<double>(p.Size());
}

double Ece(const PredictionSet& p, int bins, ReliabilityBins* reliability) {
  if (bins < 1) throw std::invalid_argument("ece: bins must be >= 1");
  const TopStats stats = ComputeTopStats(p);
  const std::size_t n = p.Size();

  std::vector<std::int64_t> count(bins, 0);
  std::vector<double> conf_sum(bins, 0.0), acc_sum(bins, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const int b = WidthBinIndex(stats.confidence[i], bins);
    ++count[b];
    conf_sum[b] += stats.confidence[i];
    acc_sum[b] += stats.correct[i];
  }
  double ece = 0.0;
  for (int b = 0; b < bins; ++b) {
    if (count[b] == 0) continue;
    const double conf = conf_sum[b] / static_cast<double>(count[b]);
    const double acc = acc_sum[b] / static_cast<double>(count[b]);
    ece += (static_cast<double>(count[b]) / static_cast<double>(n)) *
           std::abs(acc - conf);
  }
  if (reliability) {
    reliability->bins.clear();
    reliability->total = static_cast<std::int64_t>(n);
    for (int b = 0; b < bins; ++b) {
      ReliabilityBin rb;
      rb.count = count[b];
      rb.lower_edge = static_cast<double>(b) / bins;
      rb.upper_edge = static_cast<double>(b + 1) / bins;
      if (count[b] > 0) {
        rb.mean_confidence = conf_sum[b] / static_cast<double>(count[b]);
        rb.mean_accuracy = acc_sum[b] / static_cast<double>(count[b]);
      }
      reliability->bins.push_back(rb);
    }
  }
  return ece;
}

double AdaEce(const PredictionSet& p, int bins) {
  if (bins < 1) throw std::invalid_argument("ada_ece: bins must be >= 1");
  const std::size_t n = p.Size();
  if (n < static_cast<std::size_t>(bins)) {
    throw std::invalid_argument("ada_ece: need at least one sample per bin");
  }
  const TopStats stats = ComputeTopStats(p);
  const std::vector<std::size_t> order = SortedByConfidence(stats);

  const std::size_t base = n / static_cast<std::size_t>(bins);
  const std::size_t extra = n % static_cast<std::size_t>(bins);
  double ada = 0.0;
  std::size_t pos = 0;
  for (int b = 0; b < bins; ++b) {
    // The first (n mod B) bins take one extra sample.
    const std::size_t size =
        base + (static_cast<std::size_t>(b) < extra ? 1 : 0);
    double conf_sum = 0.0, acc_sum = 0.0;
    for (std::size_t i = 0; i < size; ++i, ++pos) {
      conf_sum += stats.confidence[order[pos]];
      acc_sum += stats.correct[order[pos]];
    }
    const double conf = conf_sum / static_cast<double>(size);
    const double acc = acc_sum / static_cast<double>(size);
    ada += (static_cast<double>(size) / static_cast<double>(n)) *
           std::abs(acc - conf);
  }
  return ada;
}

double Cece(const PredictionSet& p, int bins) {
  if (bins < 1) throw std::invalid_argument("cece: bins must be >= 1");
  const std::size_t n = p.Size();
  double total = 0.0;
  std::vector<std::int64_t> count(bins);
  std::vector<double> prob_sum(bins), hit_sum(bins);
  for (int k = 0; k < p.class_count; ++k) {
    std::fill(count.begin(), count.end(), 0);
    std::fill(prob_sum.begin(), prob_sum.end(), 0.0);
    std::fill(hit_sum.begin(), hit_sum.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double q = p.probs[i][k];
      const int b = WidthBinIndex(q, bins);
      ++count[b];
      prob_sum[b] += q;
      hit_sum[b] += p.hard_targets[i] == k ? 1.0 : 0.0;
    }
    for (int b = 0; b < bins; ++b) {
      if (count[b] == 0) continue;
      const double conf = prob_sum[b] / static_cast<double>(count[b]);
      const double freq = hit_sum[b] / static_cast<double>(count[b]);
      total += (static_cast<double>(count[b]) / static_cast<double>(n)) *
               std::abs(freq - conf);
    }
  }
  return total / static_cast<double>(p.class_count);
}

namespace {

double KseCumulative(const PredictionSet& p, bool expectation) {
  const TopStats stats = ComputeTopStats(p);
  const std::vector<std::size_t> order = SortedByConfidence(stats);
  const double n = static_cast<double>(p.Size());
  double cum_conf = 0.0, cum_correct = 0.0;
  double max_gap = 0.0, gap_sum = 0.0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    cum_conf += stats.confidence[order[pos]] / n;
    cum_correct += static_cast<double>(stats.correct[order[pos]]) / n;
    const double gap = std::abs(cum_conf - cum_correct);
    max_gap = std::max(max_gap, gap);
    gap_sum += gap;
  }
  return expectation ? gap_sum / n : max_gap;
}

}  // namespace

double Kse(const PredictionSet& p) { return KseCumulative(p, false); }

double KseExpected(const PredictionSet& p) { return KseCumulative(p, true); }

EvalReport Evaluate(const PredictionSet& p, const EvalConfig& config) {
  p.Validate();
  EvalReport report;
  report.config = config;
  report.sample_count = static_cast<std::int64_t>(p.Size());
  report.accuracy = Accuracy(p);
  report.macro_f1 = MacroF1(p);
  report.nll = Nll(p);
  report.ece = Ece(p, config.ece_bins, &report.reliability);
  report.ada_ece = AdaEce(p, config.ece_bins);
  report.cece = Cece(p, config.ece_bins);
  report.kse = Kse(p);
  report.kse_expected = KseExpected(p);
  return report;
}

std::string EvalReportToJson(const EvalReport& report) {
  nlohmann::ordered_json doc;
  doc["format"] = "affectbench-eval-report";
  doc["version"] = 1;
  doc["dataset_id"] = report.config.dataset_id;
  doc["corruption_filter"] = report.config.corruption_filter;
  doc["manifest_sha256"] = report.config.manifest_sha256;
  doc["predictions_sha256"] = report.config.predictions_sha256;
  doc["ece_bins"] = report.config.ece_bins;
  doc["sample_count"] = report.sample_count;
  nlohmann::ordered_json metrics;
  metrics["accuracy"] = report.accuracy;
  metrics["macro_f1"] = report.macro_f1;
  metrics["nll"] = report.nll;
  metrics["ece"] = report.ece;
  metrics["ada_ece"] = report.ada_ece;
  metrics["cece"] = report.cece;
  metrics["kse"] = report.kse;
  metrics["kse_expected"] = report.kse_expected;
  doc["metrics"] = metrics;
  nlohmann::ordered_json bins = nlohmann::ordered_json::array();
  for (const ReliabilityBin& b : report.reliability.bins) {
    nlohmann::ordered_json entry;
    entry["lower"] = b.lower_edge;
    entry["upper"] = b.upper_edge;
    entry["count"] = b.count;
    entry["mean_confidence"] = b.mean_confidence;
    entry["mean_accuracy"] = b.mean_accuracy;
    bins.push_back(entry);
  }
  doc["reliability_bins"] = bins;
  return doc.dump(2) + "\n";
}

void SaveEvalReport(const EvalReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write report: " + path);
  out << EvalReportToJson(report);
}

EvalReport LoadEvalReport(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open report: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("eval report: " + std::string(e.what()));
  }
  if (doc.value("format", "") != "affectbench-eval-report") {
    throw ParseError("eval report: unrecognized format field");
  }
  EvalReport report;
  report.config.dataset_id = doc.value("dataset_id", "");
  report.config.corruption_filter = doc.value("corruption_filter", "");
  report.config.manifest_sha256 = doc.value("manifest_sha256", "");
  report.config.predictions_sha256 = doc.value("predictions_sha256", "");
  report.config.ece_bins = doc.value("ece_bins", 15);
  report.sample_count = doc.value("sample_count", std::int64_t{0});
  const auto& metrics = doc.at("metrics");
  report.accuracy = metrics.at("accuracy").get<double>();
  report.macro_f1 = metrics.at("macro_f1").get<double>();
  report.nll = metrics.at("nll").get<double>();
  report.ece = metrics.at("ece").get<double>();
  report.ada_ece = metrics.at("ada_ece").get<double>();
  report.cece = metrics.at("cece").get<double>();
  report.kse = metrics.at("kse").get<double>();
  report.kse_expected = metrics.at("kse_expected").get<double>();
  report.reliability.total = report.sample_count;
  for (const auto& entry : doc.at("reliability_bins")) {
    ReliabilityBin b;
    b.lower_edge = entry.at("lower").get<double>();
    b.upper_edge = entry.at("upper").get<double>();
    b.count = entry.at("count").get<std::int64_t>();
    b.mean_confidence = entry.at("mean_confidence").get<double>();
    b.mean_accuracy = entry.at("mean_accuracy").get<double>();
    report.reliability.bins.push_back(b);
  }
  return report;
}

void SaveReliabilityTable(const ReliabilityBins& bins,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write reliability table: " + path);
  out << "lower\tupper\tcount\tmean_confidence\tmean_accuracy\n";
  char buf[128];
  for (const ReliabilityBin& b : bins.bins) {
    std::snprintf(buf, sizeof(buf), "%.17g\t%.17g\t%lld\t%.17g\t%.17g\n",
                  b.lower_edge, b.upper_edge,
                  static_cast<long long>(b.count), b.mean_confidence,
                  b.mean_accuracy);
    out << buf;
  }
}

}  // namespace affectbench
