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

#ifndef AFFECTBENCH_MANIFEST_HPP_
#define AFFECTBENCH_MANIFEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "affectbench/corrupt.hpp"
#include "affectbench/softlabel.hpp"

namespace affectbench {

// One corrupted variant: where it lives on disk, how visible the source
// still is, and the final soft label.
struct ManifestRecord {
  std::string record_id;  // "<source_id>:<kind>:<severity>"
  std::string source_id;
  int source_class = 0;   // hard class of the source (argmax in direct mode)
  CorruptionKind kind = CorruptionKind::kGaussianNoise;
  int severity = 1;
  std::string path;       // relative to the manifest's directory
  double visibility = 0.0;
  SoftLabel label;
};

// Line-oriented index of a generated benchmark. One record per line so
// large datasets can be streamed; all numbers at full double precision.
struct DatasetManifest {
  std::string dataset_id;
  std::string schedule_sha256;
  // SHA-256 of the GMM params file, or "direct-soft-labels" when the dataset
  // ships mixed labels and the GMM stage is bypassed.
  std::string gmm_params_sha256;
  int class_count = 0;
  double beta = 0.5;
  double kappa = 2.0;
  std::string visibility_measure = "l2";  // "l2" or "ssim"
  std::uint64_t seed = 0;
  std::string image_size = "as-loaded";
  std::vector<ManifestRecord> records;
};

void SaveManifest(const DatasetManifest& manifest, const std::string& path);
DatasetManifest LoadManifest(const std::string& path);

// Delimited annotation row: image_id class valence arousal.
struct VAAnnotation {
  std::string image_id;
  int cls = 0;
  VAPoint va;
};
std::vector<VAAnnotation> LoadVAAnnotations(const std::string& path,
                                            int class_count);

// Mixed-label annotation row: image_id p_1 .. p_K.
struct DirectLabelAnnotation {
  std::string image_id;
  SoftLabel label;
};
std::vector<DirectLabelAnnotation> LoadDirectLabels(const std::string& path,
                                                    int class_count);

// Model prediction rows keyed by manifest record id.
struct PredictionRows {
  int class_count = 0;
  std::string dataset_id;
  bool logits = false;
  std::vector<std::pair<std::string, SoftLabel>> rows;
};
// Probability rows must sum to 1 within 1e-4 and are renormalized on load;
// rows flagged as logits go through softmax instead.
PredictionRows LoadPredictions(const std::string& path);

}  // namespace affectbench

#endif  // AFFECTBENCH_MANIFEST_HPP_
