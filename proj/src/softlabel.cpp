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

#include "affectbench/softlabel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "affectbench/errors.hpp"
#include "affectbench/hash.hpp"
#include "affectbench/rng.hpp"
#include "json.hpp"

namespace affectbench {

namespace {

constexpr double kCovDiagFloor = 1e-6;
constexpr double kDetEpsilon = 1e-12;

double Det2x2(const std::array<std::array<double, 2>, 2>& m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

std::string FitConfigDigest(int class_count) {
  const std::string desc =
      "affectbench-gmm-fit-v1;trim=1std-per-dim;cov=mle;cov_floor=1e-6;"
      "det_eps=1e-12;K=" +
      std::to_string(class_count);
  return Sha256Hex(desc);
}

}  // namespace

bool IsSimplex(const SoftLabel& label, double tol) {
  if (label.empty()) return false;
  double sum = 0.0;
  for (double v : label) {
    if (!(v >= 0.0) || !std::isfinite(v)) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

SoftLabel OneHot(int cls, int class_count) {
  if (class_count < 1 || cls < 0 || cls >= class_count) {
    throw std::invalid_argument("one-hot: class out of range");
  }
  SoftLabel label(class_count, 0.0);
  label[cls] = 1.0;
  return label;
}

int Argmax(const SoftLabel& label) {
  if (label.empty()) throw std::invalid_argument("argmax of empty vector");
  int best = 0;
  for (int i = 1; i < static_cast<int>(label.size()); ++i) {
    if (label[i] > label[best]) best = i;
  }
  return best;
}

void GmmParams::Validate() const {
  if (components.empty()) {
    throw std::invalid_argument("gmm: no components");
  }
  double prior_sum = 0.0;
  for (const GaussianComponent& comp : components) {
    if (!(comp.prior > 0.0)) {
      throw std::invalid_argument("gmm: priors must be positive");
    }
    prior_sum += comp.prior;
    if (std::abs(comp.cov[0][1] - comp.cov[1][0]) > 1e-12) {
      throw std::invalid_argument("gmm: covariance must be symmetric");
    }
    if (comp.cov[0][0] <= 0.0 || comp.cov[1][1] <= 0.0 ||
        Det2x2(comp.cov) <= 0.0) {
      throw std::invalid_argument(
          "gmm: covariance must be positive-definite");
    }
  }
  if (std::abs(prior_sum - 1.0) > 1e-9) {
    throw std::invalid_argument("gmm: priors must sum to 1");
  }
}

GmmParams FitGmm(const std::vector<LabeledVAPoint>& points, int class_count,
                 std::vector<std::string>* warnings) {
  if (class_count < 1) {
    throw std::invalid_argument("fit_gmm: class_count must be positive");
  }
  std::vector<std::vector<VAPoint>> by_class(class_count);
  for (const LabeledVAPoint& p : points) {
    if (p.cls < 0 || p.cls >= class_count) {
      throw std::invalid_argument("fit_gmm: class index out of range");
    }
    if (!p.va.Valid()) {
      throw std::invalid_argument(
          "fit_gmm: valence/arousal outside [-1,1]");
    }
    by_class[p.cls].push_back(p.va);
  }

  GmmParams params;
  params.components.resize(class_count);
  params.fit_config_digest = FitConfigDigest(class_count);

  for (int k = 0; k < class_count; ++k) {
    const std::vector<VAPoint>& cls_points = by_class[k];
    if (cls_points.size() < 3) {
      throw InsufficientDataError("fit_gmm: class " + std::to_string(k) +
                                  " has " +
                                  std::to_string(cls_points.size()) +
                                  " points, need at least 3");
    }

    // Pass 1: untrimmed mean and per-dimension standard deviation.
    double mean[2] = {0.0, 0.0};
    for (const VAPoint& p : cls_points) {
      mean[0] += p.valence;
      mean[1] += p.arousal;
    }
    const double n_all = static_cast<double>(cls_points.size());
    mean[0] /= n_all;
    mean[1] /= n_all;
    double var[2] = {0.0, 0.0};
    for (const VAPoint& p : cls_points) {
      var[0] += (p.valence - mean[0]) * (p.valence - mean[0]);
      var[1] += (p.arousal - mean[1]) * (p.arousal - mean[1]);
    }
    var[0] /= n_all;
    var[1] /= n_all;
    const double sd[2] = {std::sqrt(var[0]), std::sqrt(var[1])};

    // Pass 2: keep points within one standard deviation in both dimensions.
    std::vector<VAPoint> kept;
    kept.reserve(cls_points.size());
    for (const VAPoint& p : cls_points) {
      if (std::abs(p.valence - mean[0]) <= sd[0] &&
          std::abs(p.arousal - mean[1]) <= sd[1]) {
        kept.push_back(p);
      }
    }
    if (kept.empty()) {
      if (warnings) {
        warnings->push_back("fit_gmm: class " + std::to_string(k) +
                            ": one-std trim removed every point; using "
                            "untrimmed moments");
      }
      kept = cls_points;
    }

    GaussianComponent& comp = params.components[k];
    comp.prior = n_all / static_cast<double>(points.size());
    const double n = static_cast<double>(kept.size());
    comp.mean = {0.0, 0.0};
    for (const VAPoint& p : kept) {
      comp.mean[0] += p.valence;
      comp.mean[1] += p.arousal;
    }
    comp.mean[0] /= n;
    comp.mean[1] /= n;
    double cxx = 0.0, cyy = 0.0, cxy = 0.0;
    for (const VAPoint& p : kept) {
      const double dv = p.valence - comp.mean[0];
      const double da = p.arousal - comp.mean[1];
      cxx += dv * dv;
      cyy += da * da;
      cxy += dv * da;
    }
    comp.cov = {{{cxx / n, cxy / n}, {cxy / n, cyy / n}}};

    if (Det2x2(comp.cov) < kDetEpsilon || comp.cov[0][0] <= 0.0 ||
        comp.cov[1][1] <= 0.0) {
      if (warnings) {
        warnings->push_back("fit_gmm: class " + std::to_string(k) +
                            ": near-singular covariance, applying diagonal "
                            "floor");
      }
      while (Det2x2(comp.cov) < kDetEpsilon) {
        comp.cov[0][0] += kCovDiagFloor;
        comp.cov[1][1] += kCovDiagFloor;
      }
    }
  }
  params.Validate();
  return params;
}

SoftLabel GmmPosterior(const GmmParams& params, const VAPoint& p) {
  params.Validate();
  if (!p.Valid()) {
    throw std::invalid_argument("gmm_posterior: point outside [-1,1]^2");
  }
  const int k_count = params.ClassCount();
  std::vector<double> log_w(k_count);
  double max_log = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < k_count; ++k) {
    const GaussianComponent& comp = params.components[k];
    const double det = Det2x2(comp.cov);
    const double inv00 = comp.cov[1][1] / det;
    const double inv11 = comp.cov[0][0] / det;
    const double inv01 = -comp.cov[0][1] / det;
    const double dv = p.valence - comp.mean[0];
    const double da = p.arousal - comp.mean[1];
    const double quad = dv * (inv00 * dv + inv01 * da) +
                        da * (inv01 * dv + inv11 * da);
    log_w[k] = std::log(comp.prior) -
               std::log(2.0 * 3.14159265358979323846) - 0.5 * std::log(det) -
               0.5 * quad;
    max_log = std::max(max_log, log_w[k]);
  }
  SoftLabel posterior(k_count);
  double sum = 0.0;
  for (int k = 0; k < k_count; ++k) {
    posterior[k] = std::exp(log_w[k] - max_log);
    sum += posterior[k];
  }
  for (double& v : posterior) v /= sum;
  return posterior;
}

SoftLabel FuseLabels(const SoftLabel& onehot, const SoftLabel& gmm_post,
                     double beta) {
  if (onehot.size() != gmm_post.size()) {
    throw std::invalid_argument("fuse_labels: length mismatch");
  }
  if (beta < 0.0 || beta > 1.0) {
    throw std::invalid_argument("fuse_labels: beta must be in [0,1]");
  }
  if (!IsSimplex(onehot, 1e-6) || !IsSimplex(gmm_post, 1e-6)) {
    throw std::invalid_argument("fuse_labels: inputs must lie on the simplex");
  }
  SoftLabel fused(onehot.size());
  for (std::size_t k = 0; k < onehot.size(); ++k) {
    fused[k] = beta * onehot[k] + (1.0 - beta) * gmm_post[k];
  }
  return fused;
}

double SmoothingAlpha(double visibility, const SmoothingConfig& cfg) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw std::invalid_argument("smoothing_alpha: visibility must be in [0,1]");
  }
  if (cfg.kappa <= 0.0 || cfg.class_count < 1) {
    throw std::invalid_argument("smoothing_alpha: invalid config");
  }
  return (1.0 - cfg.PMin()) * std::pow(1.0 - visibility, cfg.kappa);
}

SoftLabel Soften(const SoftLabel& fused, double alpha, int class_count) {
  if (static_cast<int>(fused.size()) != class_count) {
    throw std::invalid_argument("soften: label length != class count");
  }
  const double alpha_max = 1.0 - 1.0 / class_count;
  if (alpha < -1e-12 || alpha > alpha_max + 1e-12) {
    throw std::invalid_argument("soften: alpha outside [0, 1 - 1/K]");
  }
  if (!IsSimplex(fused, 1e-6)) {
    throw std::invalid_argument("soften: input must lie on the simplex");
  }
  SoftLabel out(fused.size());
  const double uniform_share = alpha / class_count;
  for (std::size_t k = 0; k < fused.size(); ++k) {
    out[k] = (1.0 - alpha) * fused[k] + uniform_share;
  }
  return out;
}

std::vector<int> InjectLabelNoise(const std::vector<int>& labels, double ratio,
                                  int class_count, std::uint64_t seed) {
  if (ratio < 0.0 || ratio > 1.0) {
    throw std::invalid_argument("inject_label_noise: ratio must be in [0,1]");
  }
  if (class_count < 2 && ratio > 0.0) {
    throw std::invalid_argument(
        "inject_label_noise: need at least 2 classes to flip labels");
  }
  for (int label : labels) {
    if (label < 0 || label >= class_count) {
      throw std::invalid_argument("inject_label_noise: label out of range");
    }
  }
  const std::size_t n = labels.size();
  const auto flips = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(n)));

  std::vector<int> out = labels;
  if (flips == 0) return out;

  CounterRng rng(DeriveStreamKey(seed, 0x1abe1ULL));
  // Partial Fisher-Yates selects exactly `flips` indices w/o replacement.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = 0; i < flips; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.NextBelow(n - i));
    std::swap(order[i], order[j]);
  }
  for (std::size_t i = 0; i < flips; ++i) {
    const std::size_t idx = order[i];
    const int offset =
        1 + static_cast<int>(rng.NextBelow(
                static_cast<std::uint64_t>(class_count - 1)));
    out[idx] = (labels[idx] + offset) % class_count;
  }
  return out;
}

void SaveGmmParams(const GmmParams& params, const std::string& path) {
  params.Validate();
  nlohmann::ordered_json doc;
  doc["format"] = "affectbench-gmm-params";
  doc["version"] = 1;
  doc["class_count"] = params.ClassCount();
  doc["fit_config_digest"] = params.fit_config_digest;
  doc["source_sha256"] = params.source_sha256;
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (int k = 0; k < params.ClassCount(); ++k) {
    const GaussianComponent& c = params.components[k];
    nlohmann::ordered_json entry;
    entry["class"] = k;
    entry["prior"] = c.prior;
    entry["mean"] = {c.mean[0], c.mean[1]};
    entry["cov"] = {{c.cov[0][0], c.cov[0][1]}, {c.cov[1][0], c.cov[1][1]}};
    comps.push_back(entry);
  }
  doc["components"] = comps;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write GMM params: " + path);
  out << doc.dump(2) << "\n";
}

GmmParams LoadGmmParams(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open GMM params: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("GMM params: " + std::string(e.what()));
  }
  if (doc.value("format", "") != "affectbench-gmm-params") {
    throw ParseError("GMM params: unrecognized format field");
  }
  GmmParams params;
  params.fit_config_digest = doc.value("fit_config_digest", "");
  params.source_sha256 = doc.value("source_sha256", "");
  const int k_count = doc.at("class_count").get<int>();
  params.components.resize(k_count);
  for (const auto& entry : doc.at("components")) {
    const int k = entry.at("class").get<int>();
    if (k < 0 || k >= k_count) {
      throw ParseError("GMM params: component class out of range");
    }
    GaussianComponent& c = params.components[k];
    c.prior = entry.at("prior").get<double>();
    c.mean[0] = entry.at("mean")[0].get<double>();
    c.mean[1] = entry.at("mean")[1].get<double>();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        c.cov[i][j] = entry.at("cov")[i][j].get<double>();
  }
  params.Validate();
  return params;
}

}  // namespace affectbench
