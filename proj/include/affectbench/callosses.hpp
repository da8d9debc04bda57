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

#ifndef AFFECTBENCH_CALLOSSES_HPP_
#define AFFECTBENCH_CALLOSSES_HPP_

#include <optional>
#include <vector>

#include "affectbench/softlabel.hpp"

namespace affectbench {

// Per-sample loss value with analytic partial derivatives w.r.t. the logits,
// so any training framework can cross-check its own implementation.
struct LossOutput {
  double value = 0.0;
  std::vector<double> grad;
};

// Numerically stable (max-subtracted) softmax.
SoftLabel Softmax(const std::vector<double>& logits);

struct MaxEntConfig {
  double gamma = 0.0;      // focal exponent, >= 0
  double lambda_mu = 0.0;  // constraint strength, >= 0
  // Strictly increasing class constants; defaults to 1..K when empty.
  std::vector<double> class_values;
  // Target global mean; defaults to the mean of class_values (the uniform
  // prior expectation).
  std::optional<double> mu_g;
  // The constraint as printed is signed; this switches to |.| for users who
  // want a true penalty.
  bool absolute_constraint = false;

  std::vector<double> ClassValuesFor(int class_count) const;
  double MuGFor(int class_count) const;
};

// -(sum_k (1-p_k)^gamma * y_k * log p_k); equals the sample NLL at gamma=0.
LossOutput FocalLoss(const std::vector<double>& logits, const SoftLabel& target,
                     double gamma);

// Focal term plus lambda_mu * (sum_k Y_k p_k - mu_G).
LossOutput MaxEntLoss(const std::vector<double>& logits,
                      const SoftLabel& target, const MaxEntConfig& cfg);

// sum_k max(0, max_j z_j - z_k - margin); zero when all logits lie within
// the margin of the maximum. Subgradient 0 at the hinge kinks.
LossOutput MblsLoss(const std::vector<double>& logits, double margin);

// MaxEnt + MBLS, values and gradients.
LossOutput CombinedLoss(const std::vector<double>& logits,
                        const SoftLabel& target, const MaxEntConfig& cfg,
                        double margin);

}  // namespace affectbench

#endif  // AFFECTBENCH_CALLOSSES_HPP_
