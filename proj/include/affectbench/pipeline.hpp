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

#ifndef AFFECTBENCH_PIPELINE_HPP_
#define AFFECTBENCH_PIPELINE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "affectbench/calmetrics.hpp"
#include "affectbench/manifest.hpp"

namespace affectbench {

struct GenerateConfig {
  std::string images_dir;
  std::string annotations_path;
  std::string gmm_params_path;     // VA mode: fit file from `fit-gmm`
  std::string direct_labels_path;  // direct mode: dataset ships mixed labels
  std::string out_dir;
  std::string dataset_id;
  int class_count = 0;
  double beta = 0.5;
  double kappa = 2.0;
  std::uint64_t seed = 0;
  bool use_ssim_visibility = false;
  bool resize_224 = false;  // corrupt at the source resolution by default
};

struct GenerateResult {
  DatasetManifest manifest;
  std::string manifest_path;
  // Unreadable source images, itemized; generation continues past them.
  std::vector<std::string> failures;
};

// Runs the full benchmark generation: corrupt every source 85 ways, score
// visibility per image, build the fused label once per source, soften per
// variant, write variant PNGs and the manifest. Deterministic in
// (inputs, config, seed).
GenerateResult GenerateBenchmark(const GenerateConfig& config);

struct EvaluateOptions {
  std::string kind_filter;   // empty = all kinds
  int severity_filter = 0;   // 0 = all severities
  bool clean = false;        // ID mode: one-hot targets keyed by source id
  bool severity_mean = false;  // average metrics over the five severities
  int ece_bins = 15;
};

// Joins prediction rows against the manifest subset and runs the metric
// suite. Soft manifest labels are the targets except in clean mode.
EvalReport EvaluateAgainstManifest(const std::string& manifest_path,
                                   const std::string& predictions_path,
                                   const EvaluateOptions& options);

struct InjectNoiseResult {
  std::size_t total_rows = 0;
  std::size_t flipped = 0;
  std::string sidecar_path;
};

// Rewrites the class column of an annotation file with labels flipped at the
// given ratio; writes a "<out>.flips" sidecar listing every changed row.
InjectNoiseResult InjectNoiseFile(const std::string& labels_path, double ratio,
                                  int class_count, std::uint64_t seed,
                                  const std::string& out_path);

}  // namespace affectbench

#endif  // AFFECTBENCH_PIPELINE_HPP_
