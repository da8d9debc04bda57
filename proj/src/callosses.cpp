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

#include "affectbench/callosses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace affectbench {

namespace {

constexpr double kLogFloor = 1e-12;

void CheckLogits(const std::vector<double>& logits) {
  if (logits.empty()) throw std::invalid_argument("empty logit vector");
  for (double z : logits) {
    if (!std::isfinite(z)) {
      throw std::invalid_argument("logits must be finite");
    }
  }
}

void CheckTarget(const SoftLabel& target, std::size_t k) {
  if (target.size() != k) {
    throw std::invalid_argument("target length != logit length");
  }
  if (!IsSimplex(target, 1e-6)) {
    throw std::invalid_argument("target must lie on the simplex");
  }
}

// dL/dz_j from dL/dp via the softmax Jacobian:
// dp_k/dz_j = p_k (delta_kj - p_j).
std::vector<double> ChainThroughSoftmax(const SoftLabel& p,
                                        const std::vector<double>& grad_p) {
  double dot = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) dot += grad_p[k] * p[k];
  std::vector<double> grad_z(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    grad_z[j] = p[j] * (grad_p[j] - dot);
  }
  return grad_z;
}

// Focal value and dL/dp, shared by FocalLoss and MaxEntLoss.
double FocalValueAndGradP(const SoftLabel& p, const SoftLabel& target,
                          double gamma, std::vector<double>* grad_p) {
  double value = 0.0;
  grad_p->assign(p.size(), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (target[k] == 0.0) continue;
    const double pk = p[k];
    const double log_pk = std::log(std::max(pk, kLogFloor));
    const double onemp = 1.0 - pk;
    const double mod = gamma == 0.0 ? 1.0 : std::pow(onemp, gamma);
    value -= mod * target[k] * log_pk;
    if (gamma == 0.0) {
      (*grad_p)[k] = -target[k] / pk;
    } else {
      (*grad_p)[k] = target[k] * (gamma * std::pow(onemp, gamma - 1.0) *
                                      log_pk -
                                  mod / pk);
    }
  }
  return value;
}

}  // namespace

SoftLabel Softmax(const std::vector<double>& logits) {
  CheckLogits(logits);
  const double zmax = *std::max_element(logits.begin(), logits.end());
  SoftLabel p(logits.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < logits.size(); ++k) {
    p[k] = std::exp(logits[k] - zmax);
    sum += p[k];
  }
  for (double& v : p) v /= sum;
  return p;
}

std::vector<double> MaxEntConfig::ClassValuesFor(int class_count) const {
  if (!class_values.empty()) {
    if (static_cast<int>(class_values.size()) != class_count) {
      throw std::invalid_argument("class_values length != K");
    }
    for (std::size_t k = 1; k < class_values.size(); ++k) {
      if (!(class_values[k] > class_values[k - 1])) {
        throw std::invalid_argument("class_values must be strictly increasing");
      }
    }
    return class_values;
  }
  std::vector<double> values(class_count);
  for (int k = 0; k < class_count; ++k) values[k] = k + 1.0;
  return values;
}

double MaxEntConfig::MuGFor(int class_count) const {
  if (mu_g.has_value()) return *mu_g;
  const std::vector<double> values = ClassValuesFor(class_count);
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

LossOutput FocalLoss(const std::vector<double>& logits,
                     const SoftLabel& target, double gamma) {
  CheckLogits(logits);
  CheckTarget(target, logits.size());
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  const SoftLabel p = Softmax(logits);
  std::vector<double> grad_p;
  LossOutput out;
  out.value = FocalValueAndGradP(p, target, gamma, &grad_p);
  out.grad = ChainThroughSoftmax(p, grad_p);
  return out;
}

LossOutput MaxEntLoss(const std::vector<double>& logits,
                      const SoftLabel& target, const MaxEntConfig& cfg) {
  CheckLogits(logits);
  CheckTarget(target, logits.size());
  if (cfg.gamma < 0.0 || cfg.lambda_mu < 0.0) {
    throw std::invalid_argument("gamma and lambda_mu must be >= 0");
  }
  const int k_count = static_cast<int>(logits.size());
  const std::vector<double> values = cfg.ClassValuesFor(k_count);
  const double mu_g = cfg.MuGFor(k_count);

  const SoftLabel p = Softmax(logits);
  std::vector<double> grad_p;
  LossOutput out;
  out.value = FocalValueAndGradP(p, target, cfg.gamma, &grad_p);

  double expectation = 0.0;
  for (int k = 0; k < k_count; ++k) expectation += values[k] * p[k];
  const double constraint = expectation - mu_g;
  if (cfg.absolute_constraint) {
    out.value += cfg.lambda_mu * std::abs(constraint);
    const double sign =
        constraint > 0.0 ? 1.0 : (constraint < 0.0 ? -1.0 : 0.0);
    for (int k = 0; k < k_count; ++k) {
      grad_p[k] += cfg.lambda_mu * sign * values[k];
    }
  } else {
    out.value += cfg.lambda_mu * constraint;
    for (int k = 0; k < k_count; ++k) {
      grad_p[k] += cfg.lambda_mu * values[k];
    }
  }
  out.grad = ChainThroughSoftmax(p, grad_p);
  return out;
}

LossOutput MblsLoss(const std::vector<double>& logits, double margin) {
  CheckLogits(logits);
  if (margin < 0.0) throw std::invalid_argument("margin must be >= 0");
  const std::size_t k_count = logits.size();
  std::size_t top = 0;
  for (std::size_t k = 1; k < k_count; ++k) {
    if (logits[k] > logits[top]) top = k;
  }
  const double zmax = logits[top];

  LossOutput out;
  out.grad.assign(k_count, 0.0);
  int active = 0;
  for (std::size_t k = 0; k < k_count; ++k) {
    const double gap = zmax - logits[k] - margin;
    if (gap > 0.0) {
      out.value += gap;
      out.grad[k] -= 1.0;
      ++active;
    }
  }
  out.grad[top] += static_cast<double>(active);
  return out;
}

LossOutput CombinedLoss(const std::vector<double>& logits,
                        const SoftLabel& target, const MaxEntConfig& cfg,
                        double margin) {
  LossOutput maxent = MaxEntLoss(logits, target, cfg);
  const LossOutput mbls = MblsLoss(logits, margin);
  maxent.value += mbls.value;
  for (std::size_t k = 0; k < maxent.grad.size(); ++k) {
    maxent.grad[k] += mbls.grad[k];
  }
  return maxent;
}

}  // namespace affectbench
