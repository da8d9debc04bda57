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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affectbench/callosses.hpp"
#include "affectbench/calmetrics.hpp"
#include "affectbench/errors.hpp"
#include "affectbench/hash.hpp"
#include "affectbench/manifest.hpp"
#include "affectbench/pipeline.hpp"
#include "affectbench/softlabel.hpp"
#include "json.hpp"

namespace {

using affectbench::EvalReport;
using affectbench::GenerateConfig;
using affectbench::SoftLabel;

int RunFitGmm(const std::string& annotations, int classes,
              const std::string& out) {
  const std::vector<affectbench::VAAnnotation> rows =
      affectbench::LoadVAAnnotations(annotations, classes);
  std::vector<affectbench::LabeledVAPoint> points;
  points.reserve(rows.size());
  for (const auto& r : rows) points.push_back({r.va, r.cls});
  std::vector<std::string> warnings;
  affectbench::GmmParams params =
      affectbench::FitGmm(points, classes, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  params.source_sha256 = affectbench::Sha256FileHex(annotations);
  affectbench::SaveGmmParams(params, out);
  std::cout << "wrote " << out << " (" << classes << " classes, "
            << rows.size() << " annotations)\n";
  return 0;
}

int RunGenerate(const GenerateConfig& config) {
  const affectbench::GenerateResult result =
      affectbench::GenerateBenchmark(config);
  std::cout << "sources processed: "
            << result.manifest.records.size() / affectbench::kNumVariants
            << "\nrecords: " << result.manifest.records.size()
            << "\nmanifest: " << result.manifest_path << "\n";
  if (!result.failures.empty()) {
    std::cerr << result.failures.size() << " source(s) failed:\n";
    for (const std::string& f : result.failures) std::cerr << "  " << f << "\n";
    return 1;
  }
  return 0;
}

int RunEvaluate(const std::string& manifest, const std::string& predictions,
                const affectbench::EvaluateOptions& options,
                const std::string& out, const std::string& bins_out) {
  const EvalReport report =
      affectbench::EvaluateAgainstManifest(manifest, predictions, options);
  const std::string text = affectbench::EvalReportToJson(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    affectbench::SaveEvalReport(report, out);
    std::cout << "wrote " << out << "\n";
  }
  if (!bins_out.empty()) {
    affectbench::SaveReliabilityTable(report.reliability, bins_out);
    std::cout << "wrote " << bins_out << "\n";
  }
  return 0;
}

int RunInjectNoise(const std::string& labels, double ratio, int classes,
                   std::uint64_t seed, const std::string& out) {
  const affectbench::InjectNoiseResult result =
      affectbench::InjectNoiseFile(labels, ratio, classes, seed, out);
  std::cout << "flipped " << result.flipped << " of " << result.total_rows
            << " labels\nwrote " << out << "\nwrote " << result.sidecar_path
            << "\n";
  return 0;
}

// Rows of K logits followed by K target probabilities; emits per-sample loss
// values and the combined-loss gradient for cross-checking against any
// framework's implementation.
int RunLossEval(const std::string& input, const affectbench::MaxEntConfig& cfg,
                double margin, const std::string& out_path) {
  std::ifstream in(input);
  if (!in) throw affectbench::IoError("cannot open loss input: " + input);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw affectbench::IoError("cannot write: " + out_path);
    out = &file;
  }

  int class_count = 0;
  std::string line;
  int line_no = 0;
  std::size_t rows = 0;
  double mean_combined = 0.0;
  *out << "focal\tmaxent\tmbls\tcombined\tgrad_combined...\n";
  char buf[64];
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::vector<double> values;
    double v;
    while (ss >> v) values.push_back(v);
    if (class_count == 0) {
      if (values.size() % 2 != 0 || values.empty()) {
        throw affectbench::ParseError(
            "loss row must hold K logits then K targets", line_no);
      }
      class_count = static_cast<int>(values.size() / 2);
    }
    if (values.size() != static_cast<std::size_t>(2 * class_count)) {
      throw affectbench::ParseError("inconsistent row width", line_no);
    }
    const std::vector<double> logits(values.begin(),
                                     values.begin() + class_count);
    const SoftLabel target(values.begin() + class_count, values.end());

    const auto focal = affectbench::FocalLoss(logits, target, cfg.gamma);
    const auto maxent = affectbench::MaxEntLoss(logits, target, cfg);
    const auto mbls = affectbench::MblsLoss(logits, margin);
    const auto combined =
        affectbench::CombinedLoss(logits, target, cfg, margin);

    std::snprintf(buf, sizeof(buf), "%.17g", focal.value);
    *out << buf;
    std::snprintf(buf, sizeof(buf), "\t%.17g", maxent.value);
    *out << buf;
    std::snprintf(buf, sizeof(buf), "\t%.17g", mbls.value);
    *out << buf;
    std::snprintf(buf, sizeof(buf), "\t%.17g", combined.value);
    *out << buf;
    for (double g : combined.grad) {
      std::snprintf(buf, sizeof(buf), "\t%.17g", g);
      *out << buf;
    }
    *out << "\n";
    mean_combined += combined.value;
    ++rows;
  }
  if (rows > 0) {
    std::snprintf(buf, sizeof(buf), "%.17g",
                  mean_combined / static_cast<double>(rows));
    *out << "# mean_combined=" << buf << " rows=" << rows << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "affectbench: corrupted facial-expression benchmarks with soft labels "
      "and calibration evaluation"};
  app.require_subcommand(1);

  // --- fit-gmm ---
  auto* fit = app.add_subcommand(
      "fit-gmm", "Fit per-class valence-arousal Gaussians from annotations");
  std::string fit_annotations, fit_out;
  int fit_classes = 8;
  fit->add_option("--annotations", fit_annotations,
                  "Rows: image_id class valence arousal")
      ->required();
  fit->add_option("--classes", fit_classes, "Number of classes K")
      ->required();
  fit->add_option("--out", fit_out, "Output params file")->required();

  // --- generate ---
  auto* gen = app.add_subcommand(
      "generate", "Corrupt every source 85 ways and write the manifest");
  GenerateConfig gen_config;
  std::string gen_config_path;
  bool gen_ssim = false, gen_resize = false;
  gen->add_option("--images", gen_config.images_dir, "Source image directory")
      ->required();
  gen->add_option("--annotations", gen_config.annotations_path,
                  "VA annotation file (with --gmm-params)");
  gen->add_option("--gmm-params", gen_config.gmm_params_path,
                  "Params file from fit-gmm");
  gen->add_option("--direct-labels", gen_config.direct_labels_path,
                  "Mixed-label file: image_id p_1..p_K (bypasses the GMM)");
  gen->add_option("--out", gen_config.out_dir, "Output directory")->required();
  gen->add_option("--dataset-id", gen_config.dataset_id, "Dataset identifier");
  gen->add_option("--classes", gen_config.class_count, "Number of classes K");
  gen->add_option("--beta", gen_config.beta,
                  "One-hot weight in label fusion (default 0.5)");
  gen->add_option("--kappa", gen_config.kappa,
                  "Smoothing exponent (default 2)");
  gen->add_option("--seed", gen_config.seed, "Base seed (default 0)");
  gen->add_flag("--ssim-visibility", gen_ssim,
                "Measure visibility with SSIM instead of L2");
  gen->add_flag("--resize-224", gen_resize,
                "Resize sources to 224x224 before corrupting");
  gen->add_option("--config", gen_config_path,
                  "JSON file with defaults for the options above");

  // --- evaluate ---
  auto* ev = app.add_subcommand(
      "evaluate", "Score a prediction file against a generated manifest");
  std::string ev_manifest, ev_predictions, ev_out, ev_bins_out;
  affectbench::EvaluateOptions ev_options;
  ev->add_option("--manifest", ev_manifest, "manifest.tsv path")->required();
  ev->add_option("--predictions", ev_predictions,
                 "Rows: record_id p_1..p_K")
      ->required();
  ev->add_option("--kind", ev_options.kind_filter,
                 "Restrict to one corruption kind");
  ev->add_option("--severity", ev_options.severity_filter,
                 "Restrict to one severity (1..5)");
  ev->add_flag("--clean", ev_options.clean,
               "Score against the sources' one-hot labels (rows keyed by "
               "source id)");
  ev->add_flag("--severity-mean", ev_options.severity_mean,
               "Average the metric suite over the five severities");
  ev->add_option("--bins", ev_options.ece_bins, "Calibration bins (default 15)");
  ev->add_option("--out", ev_out, "Report file (stdout when omitted)");
  ev->add_option("--bins-out", ev_bins_out,
                 "Also export the reliability-bin table");

  // --- inject-noise ---
  auto* noise = app.add_subcommand(
      "inject-noise", "Randomly flip a fraction of labels to other classes");
  std::string noise_labels, noise_out;
  double noise_ratio = 0.1;
  int noise_classes = 8;
  std::uint64_t noise_seed = 0;
  noise->add_option("--labels", noise_labels, "Annotation file")->required();
  noise->add_option("--ratio", noise_ratio, "Fraction to flip, in [0,1]")
      ->required();
  noise->add_option("--classes", noise_classes, "Number of classes K")
      ->required();
  noise->add_option("--seed", noise_seed, "Seed (default 0)");
  noise->add_option("--out", noise_out, "Output label file")->required();

  // --- loss-eval ---
  auto* loss = app.add_subcommand(
      "loss-eval", "Evaluate calibration losses and gradients on logit rows");
  std::string loss_input, loss_out;
  affectbench::MaxEntConfig loss_cfg;
  double loss_margin = 10.0;
  double loss_mu_g = 0.0;
  std::vector<double> loss_class_values;
  loss->add_option("--input", loss_input,
                   "Rows: K logits then K target probabilities")
      ->required();
  loss->add_option("--gamma", loss_cfg.gamma, "Focal exponent (default 0)");
  loss->add_option("--lambda-mu", loss_cfg.lambda_mu,
                   "Mean-constraint strength (default 0)");
  loss->add_option("--mu-g", loss_mu_g,
                   "Target global mean (default: mean of class values)");
  loss->add_option("--class-values", loss_class_values,
                   "Class constants (default 1..K)");
  loss->add_flag("--absolute-constraint", loss_cfg.absolute_constraint,
                 "Use |constraint| instead of the signed form");
  loss->add_option("--margin", loss_margin, "MBLS margin (default 10)");
  loss->add_option("--out", loss_out, "Output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fit) return RunFitGmm(fit_annotations, fit_classes, fit_out);
    if (*gen) {
      if (!gen_config_path.empty()) {
        std::ifstream cfg_in(gen_config_path);
        if (!cfg_in) {
          throw affectbench::IoError("cannot open config: " + gen_config_path);
        }
        const nlohmann::json cfg = nlohmann::json::parse(cfg_in);
        if (!gen->count("--classes") && cfg.contains("classes"))
          gen_config.class_count = cfg["classes"].get<int>();
        if (!gen->count("--beta") && cfg.contains("beta"))
          gen_config.beta = cfg["beta"].get<double>();
        if (!gen->count("--kappa") && cfg.contains("kappa"))
          gen_config.kappa = cfg["kappa"].get<double>();
        if (!gen->count("--seed") && cfg.contains("seed"))
          gen_config.seed = cfg["seed"].get<std::uint64_t>();
        if (!gen->count("--dataset-id") && cfg.contains("dataset_id"))
          gen_config.dataset_id = cfg["dataset_id"].get<std::string>();
        if (!gen->count("--ssim-visibility") && cfg.contains("ssim_visibility"))
          gen_ssim = cfg["ssim_visibility"].get<bool>();
        if (!gen->count("--resize-224") && cfg.contains("resize_224"))
          gen_resize = cfg["resize_224"].get<bool>();
      }
      gen_config.use_ssim_visibility = gen_ssim;
      gen_config.resize_224 = gen_resize;
      return RunGenerate(gen_config);
    }
    if (*ev) {
      return RunEvaluate(ev_manifest, ev_predictions, ev_options, ev_out,
                         ev_bins_out);
    }
    if (*noise) {
      return RunInjectNoise(noise_labels, noise_ratio, noise_classes,
                            noise_seed, noise_out);
    }
    if (*loss) {
      loss_cfg.class_values = loss_class_values;
      if (loss->count("--mu-g")) loss_cfg.mu_g = loss_mu_g;
      return RunLossEval(loss_input, loss_cfg, loss_margin, loss_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
