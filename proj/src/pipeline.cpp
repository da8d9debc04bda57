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

#include "affectbench/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "affectbench/errors.hpp"
#include "affectbench/hash.hpp"
#include "affectbench/image_io.hpp"
#include "affectbench/image_ops.hpp"
#include "affectbench/quality.hpp"
#include "affectbench/rng.hpp"

namespace fs = std::filesystem;

namespace affectbench {

namespace {

std::string SanitizeId(const std::string& id) {
  std::string out = id;
  for (char& c : out) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '-' ||
                    c == '_';
    if (!ok) c = '_';
  }
  return out;
}

std::string RecordId(const std::string& source_id, CorruptionKind kind,
                     int severity) {
  return source_id + ":" + std::string(ToString(kind)) + ":" +
         std::to_string(severity);
}

struct SourceLabel {
  std::string image_id;
  int cls = 0;
  SoftLabel fused;
};

}  // namespace

GenerateResult GenerateBenchmark(const GenerateConfig& config) {
  if (config.class_count < 2) {
    throw std::invalid_argument("generate: class_count must be >= 2");
  }
  if (config.beta < 0.0 || config.beta > 1.0) {
    throw std::invalid_argument("generate: beta must be in [0,1]");
  }
  if (config.kappa <= 0.0) {
    throw std::invalid_argument("generate: kappa must be positive");
  }
  const bool direct_mode = !config.direct_labels_path.empty();
  if (direct_mode == !config.gmm_params_path.empty()) {
    throw std::invalid_argument(
        "generate: provide exactly one of gmm_params_path and "
        "direct_labels_path");
  }

  // Build the fused label once per source. In direct mode the dataset's
  // mixed labels are used as-is and only the visibility smoothing applies.
  std::vector<SourceLabel> sources;
  std::string gmm_sha = "direct-soft-labels";
  if (direct_mode) {
    for (DirectLabelAnnotation& ann :
         LoadDirectLabels(config.direct_labels_path, config.class_count)) {
      SourceLabel src;
      src.image_id = std::move(ann.image_id);
      src.cls = Argmax(ann.label);
      src.fused = std::move(ann.label);
      sources.push_back(std::move(src));
    }
  } else {
    const GmmParams params = LoadGmmParams(config.gmm_params_path);
    if (params.ClassCount() != config.class_count) {
      throw std::invalid_argument(
          "generate: GMM params class count does not match --classes");
    }
    gmm_sha = Sha256FileHex(config.gmm_params_path);
    for (const VAAnnotation& ann :
         LoadVAAnnotations(config.annotations_path, config.class_count)) {
      SourceLabel src;
      src.image_id = ann.image_id;
      src.cls = ann.cls;
      src.fused = FuseLabels(OneHot(ann.cls, config.class_count),
                             GmmPosterior(params, ann.va), config.beta);
      sources.push_back(std::move(src));
    }
  }
  if (sources.empty()) {
    throw std::invalid_argument("generate: no annotated sources");
  }

  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir / "images");

  // Keep a verbatim copy of the schedule next to the generated data.
  {
    std::ofstream sched(out_dir / "corruption_schedule.json",
                        std::ios::binary);
    sched << ScheduleTableText();
  }

  GenerateResult result;
  DatasetManifest& manifest = result.manifest;
  manifest.dataset_id = config.dataset_id;
  manifest.schedule_sha256 = ScheduleTableSha256();
  manifest.gmm_params_sha256 = gmm_sha;
  manifest.class_count = config.class_count;
  manifest.beta = config.beta;
  manifest.kappa = config.kappa;
  manifest.visibility_measure = config.use_ssim_visibility ? "ssim" : "l2";
  manifest.seed = config.seed;
  manifest.image_size = config.resize_224 ? "224x224" : "as-loaded";

  const SmoothingConfig smoothing{config.kappa, config.class_count,
                                  config.beta};

  for (const SourceLabel& src : sources) {
    Image image;
    try {
      image = LoadImage((fs::path(config.images_dir) / src.image_id).string());
      if (config.resize_224 &&
          (image.height() != 224 || image.width() != 224)) {
        image = ResizeBilinear(image, 224, 224);
        image.ClipToUnit();
      }
    } catch (const std::exception& e) {
      result.failures.push_back(src.image_id + ": " + e.what());
      continue;
    }

    // Per-image stream so any source can be regenerated in isolation.
    const std::uint64_t image_seed =
        DeriveStreamKey(config.seed, Fnv1a64(src.image_id));
    const auto suite = CorruptionSuite(image, image_seed);

    std::vector<double> raw(suite.size());
    for (std::size_t i = 0; i < suite.size(); ++i) {
      raw[i] = config.use_ssim_visibility
                   ? SsimDistance(image, suite[i].second)
                   : RawL2Distance(image, suite[i].second);
    }
    const std::vector<double> visibility = NormalizeVisibility(raw);

    const std::string dir_name = SanitizeId(src.image_id);
    fs::create_directories(out_dir / "images" / dir_name);
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const CorruptionSpec& spec = suite[i].first;
      const std::string rel_path =
          "images/" + dir_name + "/" + std::string(ToString(spec.kind)) +
          "_s" + std::to_string(spec.severity) + ".png";
      SavePng(suite[i].second, (out_dir / rel_path).string());

      ManifestRecord rec;
      rec.record_id = RecordId(src.image_id, spec.kind, spec.severity);
      rec.source_id = src.image_id;
      rec.source_class = src.cls;
      rec.kind = spec.kind;
      rec.severity = spec.severity;
      rec.path = rel_path;
      rec.visibility = visibility[i];
      rec.label = Soften(src.fused, SmoothingAlpha(visibility[i], smoothing),
                         config.class_count);
      manifest.records.push_back(std::move(rec));
    }
  }

  result.manifest_path = (out_dir / "manifest.tsv").string();
  SaveManifest(manifest, result.manifest_path);
  return result;
}

EvalReport EvaluateAgainstManifest(const std::string& manifest_path,
                                   const std::string& predictions_path,
                                   const EvaluateOptions& options) {
  const DatasetManifest manifest = LoadManifest(manifest_path);
  const PredictionRows preds = LoadPredictions(predictions_path);
  if (preds.class_count != manifest.class_count) {
    throw std::invalid_argument(
        "evaluate: prediction class count does not match the manifest");
  }

  std::unordered_map<std::string, const SoftLabel*> rows;
  rows.reserve(preds.rows.size());
  for (const auto& [id, label] : preds.rows) {
    if (!rows.emplace(id, &label).second) {
      throw ParseError("duplicate prediction row for record " + id);
    }
  }

  // Every prediction row must reference something that exists.
  std::unordered_set<std::string> known;
  known.reserve(manifest.records.size() * 2);
  for (const ManifestRecord& rec : manifest.records) {
    known.insert(rec.record_id);
    known.insert(rec.source_id);
  }
  for (const auto& [id, label] : preds.rows) {
    if (!known.count(id)) {
      throw ReferenceError("prediction row references unknown record id '" +
                           id + "'");
    }
  }

  const auto build_set = [&](const std::string& kind_filter,
                             int severity_filter) {
    PredictionSet set;
    set.class_count = manifest.class_count;
    if (options.clean) {
      // ID mode: one row per source against its one-hot label.
      std::set<std::string> seen;
      for (const ManifestRecord& rec : manifest.records) {
        if (!seen.insert(rec.source_id).second) continue;
        const auto it = rows.find(rec.source_id);
        if (it == rows.end()) continue;  // coverage checked below
        set.ids.push_back(rec.source_id);
        set.probs.push_back(*it->second);
        set.hard_targets.push_back(rec.source_class);
      }
      std::vector<std::string> missing;
      seen.clear();
      for (const ManifestRecord& rec : manifest.records) {
        if (seen.insert(rec.source_id).second && !rows.count(rec.source_id)) {
          missing.push_back(rec.source_id);
        }
      }
      if (!missing.empty()) {
        std::string msg = "evaluate: predictions missing for " +
                          std::to_string(missing.size()) + " sources:";
        for (std::size_t i = 0; i < missing.size() && i < 10; ++i) {
          msg += " " + missing[i];
        }
        throw CoverageError(msg);
      }
      return set;
    }

    std::vector<std::string> missing;
    for (const ManifestRecord& rec : manifest.records) {
      if (!kind_filter.empty() &&
          ToString(rec.kind) != kind_filter) {
        continue;
      }
      if (severity_filter != 0 && rec.severity != severity_filter) continue;
      const auto it = rows.find(rec.record_id);
      if (it == rows.end()) {
        missing.push_back(rec.record_id);
        continue;
      }
      set.ids.push_back(rec.record_id);
      set.probs.push_back(*it->second);
      set.soft_targets.push_back(rec.label);
      set.hard_targets.push_back(Argmax(rec.label));
    }
    if (!missing.empty()) {
      std::string msg = "evaluate: predictions missing for " +
                        std::to_string(missing.size()) + " records:";
      for (std::size_t i = 0; i < missing.size() && i < 10; ++i) {
        msg += " " + missing[i];
      }
      throw CoverageError(msg);
    }
    return set;
  };

  EvalConfig eval_config;
  eval_config.ece_bins = options.ece_bins;
  eval_config.dataset_id = manifest.dataset_id;
  eval_config.manifest_sha256 = Sha256FileHex(manifest_path);
  eval_config.predictions_sha256 = Sha256FileHex(predictions_path);
  if (options.clean) {
    eval_config.corruption_filter = "clean";
  } else {
    std::string desc =
        options.kind_filter.empty() ? "all" : options.kind_filter;
    if (options.severity_filter != 0) {
      desc += ";severity=" + std::to_string(options.severity_filter);
    }
    if (options.severity_mean) desc += ";severity-mean";
    eval_config.corruption_filter = desc;
  }

  if (!options.clean && options.severity_mean) {
    // The OOD reporting convention: average the metric suite over the five
    // severity slices.
    EvalReport mean;
    for (int severity = 1; severity <= kNumSeverities; ++severity) {
      const PredictionSet subset = build_set(options.kind_filter, severity);
      EvalConfig sub_config = eval_config;
      const EvalReport sub = Evaluate(subset, sub_config);
      mean.accuracy += sub.accuracy / kNumSeverities;
      mean.macro_f1 += sub.macro_f1 / kNumSeverities;
      mean.nll += sub.nll / kNumSeverities;
      mean.ece += sub.ece / kNumSeverities;
      mean.ada_ece += sub.ada_ece / kNumSeverities;
      mean.cece += sub.cece / kNumSeverities;
      mean.kse += sub.kse / kNumSeverities;
      mean.kse_expected += sub.kse_expected / kNumSeverities;
      mean.sample_count += sub.sample_count;
    }
    // Reliability bins come from the pooled rows.
    const PredictionSet pooled =
        build_set(options.kind_filter, options.severity_filter);
    Ece(pooled, options.ece_bins, &mean.reliability);
    mean.config = eval_config;
    return mean;
  }

  const PredictionSet set =
      build_set(options.kind_filter, options.severity_filter);
  return Evaluate(set, eval_config);
}

InjectNoiseResult InjectNoiseFile(const std::string& labels_path, double ratio,
                                  int class_count, std::uint64_t seed,
                                  const std::string& out_path) {
  std::ifstream in(labels_path);
  if (!in) throw IoError("cannot open labels: " + labels_path);

  struct Row {
    std::string image_id;
    int cls;
    std::string rest;  // remaining columns, preserved verbatim
  };
  std::vector<Row> data_rows;
  std::vector<std::string> lines;  // full file, data rows marked by index
  std::vector<std::ptrdiff_t> data_line_index;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    lines.push_back(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    Row row;
    if (!(ss >> row.image_id >> row.cls)) {
      throw ParseError("label row needs image_id and class", line_no);
    }
    if (row.cls < 0 || row.cls >= class_count) {
      throw ParseError("class out of range", line_no);
    }
    std::getline(ss, row.rest);
    data_line_index.push_back(static_cast<std::ptrdiff_t>(lines.size()) - 1);
    data_rows.push_back(std::move(row));
  }

  std::vector<int> labels(data_rows.size());
  for (std::size_t i = 0; i < data_rows.size(); ++i) {
    labels[i] = data_rows[i].cls;
  }
  const std::vector<int> noisy =
      InjectLabelNoise(labels, ratio, class_count, seed);

  char ratio_buf[40];
  std::snprintf(ratio_buf, sizeof(ratio_buf), "%.17g", ratio);
  const std::string provenance = std::string("# noise_ratio=") + ratio_buf +
                                 " seed=" + std::to_string(seed) +
                                 " classes=" + std::to_string(class_count) +
                                 " source_sha256=" +
                                 Sha256FileHex(labels_path) + "\n";
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot write labels: " + out_path);
  out << provenance;
  const std::string sidecar_path = out_path + ".flips";
  std::ofstream sidecar(sidecar_path, std::ios::binary);
  if (!sidecar) throw IoError("cannot write sidecar: " + sidecar_path);
  sidecar << provenance;
  sidecar << "# row_index image_id old_class new_class\n";

  InjectNoiseResult result;
  result.total_rows = data_rows.size();
  result.sidecar_path = sidecar_path;
  std::size_t next_data = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (next_data < data_line_index.size() &&
        data_line_index[next_data] == static_cast<std::ptrdiff_t>(i)) {
      const Row& row = data_rows[next_data];
      const int new_cls = noisy[next_data];
      out << row.image_id << ' ' << new_cls << row.rest << '\n';
      if (new_cls != row.cls) {
        sidecar << next_data << ' ' << row.image_id << ' ' << row.cls << ' '
                << new_cls << '\n';
        ++result.flipped;
      }
      ++next_data;
    } else {
      out << lines[i] << '\n';
    }
  }
  return result;
}

}  // namespace affectbench
