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

#ifndef AFFECTBENCH_SOFTLABEL_HPP_
#define AFFECTBENCH_SOFTLABEL_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace affectbench {

// A probability vector over the K expression classes.
using SoftLabel = std::vector<double>;

bool IsSimplex(const SoftLabel& label, double tol = 1e-9);
SoftLabel OneHot(int cls, int class_count);
int Argmax(const SoftLabel& label);  // ties resolve to the lowest index

// A point in valence-arousal space, both coordinates in [-1, 1].
struct VAPoint {
  double valence = 0.0;
  double arousal = 0.0;
  bool Valid() const {
    return valence >= -1.0 && valence <= 1.0 && arousal >= -1.0 &&
           arousal <= 1.0;
  }
};

struct LabeledVAPoint {
  VAPoint va;
  int cls = 0;
};

struct GaussianComponent {
  double prior = 0.0;
  std::array<double, 2> mean = {0.0, 0.0};
  std::array<std::array<double, 2>, 2> cov = {{{1.0, 0.0}, {0.0, 1.0}}};
};

// Per-class Gaussians over valence-arousal. Component k models class k.
struct GmmParams {
  std::vector<GaussianComponent> components;
  std::string fit_config_digest;
  std::string source_sha256;  // hash of the annotation file, when fitted by
                              // the CLI

  int ClassCount() const { return static_cast<int>(components.size()); }
  // Throws invalid_argument when priors do not sum to 1 or a covariance is
  // not symmetric positive-definite.
  void Validate() const;
};

// Fits one Gaussian per class: priors are class frequencies over all points;
// mean and covariance are recomputed after discarding points farther than one
// standard deviation from the class mean in either VA dimension (two-pass
// trim). Covariances with near-zero determinant get a 1e-6 diagonal floor.
// Classes with fewer than 3 points raise InsufficientDataError.
GmmParams FitGmm(const std::vector<LabeledVAPoint>& points, int class_count,
                 std::vector<std::string>* warnings = nullptr);

// Bayes posterior over classes at a VA point, computed in log space.
SoftLabel GmmPosterior(const GmmParams& params, const VAPoint& p);

// beta * onehot + (1 - beta) * gmm_post, elementwise.
SoftLabel FuseLabels(const SoftLabel& onehot, const SoftLabel& gmm_post,
                     double beta);

struct SmoothingConfig {
  double kappa = 2.0;   // > 0
  int class_count = 0;  // K; the uniform prior is 1/K
  double beta = 0.5;    // fusion weight in [0, 1]
  double PMin() const { return 1.0 / class_count; }
};

// alpha(v, kappa) = (1 - 1/K) * (1 - v)^kappa. Non-increasing in visibility;
// 0 for a pristine image, 1 - 1/K for the worst corruption.
double SmoothingAlpha(double visibility, const SmoothingConfig& cfg);

// (1 - alpha) * fused + alpha / K. Preserves the argmax and floors every
// entry at alpha / K.
SoftLabel Soften(const SoftLabel& fused, double alpha, int class_count);

// Flips exactly round(ratio * N) labels, chosen uniformly without
// replacement, each to a uniformly chosen *different* class.
std::vector<int> InjectLabelNoise(const std::vector<int>& labels, double ratio,
                                  int class_count, std::uint64_t seed);

// Human-readable params file with the fitting-config digest.
void SaveGmmParams(const GmmParams& params, const std::string& path);
GmmParams LoadGmmParams(const std::string& path);

}  // namespace affectbench

#endif  // AFFECTBENCH_SOFTLABEL_HPP_
