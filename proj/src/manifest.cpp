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

#include "affectbench/manifest.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "affectbench/callosses.hpp"
#include "affectbench/errors.hpp"

namespace affectbench {

namespace {

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> SplitWhitespace(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string field;
  while (ss >> field) fields.push_back(field);
  return fields;
}

double ParseDouble(const std::string& s, int line_no, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw ParseError(std::string("bad ") + what + " value '" + s + "'",
                     line_no);
  }
  return v;
}

int ParseInt(const std::string& s, int line_no, const char* what) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') {
    throw ParseError(std::string("bad ") + what + " value '" + s + "'",
                     line_no);
  }
  return static_cast<int>(v);
}

// "# key=value" header line; returns false when the line is not a header.
bool ParseHeaderLine(const std::string& line, std::string* key,
                     std::string* value) {
  if (line.size() < 2 || line[0] != '#') return false;
  std::size_t start = 1;
  while (start < line.size() && line[start] == ' ') ++start;
  const std::size_t eq = line.find('=', start);
  if (eq == std::string::npos) return false;
  *key = line.substr(start, eq - start);
  *value = line.substr(eq + 1);
  return true;
}

}  // namespace

void SaveManifest(const DatasetManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write manifest: " + path);
  out << "# affectbench-manifest=1\n";
  out << "# dataset_id=" << manifest.dataset_id << "\n";
  out << "# schedule_sha256=" << manifest.schedule_sha256 << "\n";
  out << "# gmm_params_sha256=" << manifest.gmm_params_sha256 << "\n";
  out << "# class_count=" << manifest.class_count << "\n";
  out << "# beta=" << FormatDouble(manifest.beta) << "\n";
  out << "# kappa=" << FormatDouble(manifest.kappa) << "\n";
  out << "# visibility_measure=" << manifest.visibility_measure << "\n";
  out << "# seed=" << manifest.seed << "\n";
  out << "# image_size=" << manifest.image_size << "\n";
  out << "# columns=record_id source_id class kind severity path visibility "
         "p_1..p_K\n";
  for (const ManifestRecord& rec : manifest.records) {
    out << rec.record_id << '\t' << rec.source_id << '\t' << rec.source_class
        << '\t' << ToString(rec.kind) << '\t' << rec.severity << '\t'
        << rec.path << '\t' << FormatDouble(rec.visibility);
    for (double p : rec.label) out << '\t' << FormatDouble(p);
    out << '\n';
  }
  if (!out) throw IoError("failed while writing manifest: " + path);
}

DatasetManifest LoadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path);
  DatasetManifest manifest;
  std::string line;
  int line_no = 0;
  bool saw_magic = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string key, value;
      if (!ParseHeaderLine(line, &key, &value)) continue;
      if (key == "affectbench-manifest") {
        saw_magic = true;
      } else if (key == "dataset_id") {
        manifest.dataset_id = value;
      } else if (key == "schedule_sha256") {
        manifest.schedule_sha256 = value;
      } else if (key == "gmm_params_sha256") {
        manifest.gmm_params_sha256 = value;
      } else if (key == "class_count") {
        manifest.class_count = ParseInt(value, line_no, "class_count");
      } else if (key == "beta") {
        manifest.beta = ParseDouble(value, line_no, "beta");
      } else if (key == "kappa") {
        manifest.kappa = ParseDouble(value, line_no, "kappa");
      } else if (key == "visibility_measure") {
        manifest.visibility_measure = value;
      } else if (key == "seed") {
        manifest.seed = std::strtoull(value.c_str(), nullptr, 10);
      } else if (key == "image_size") {
        manifest.image_size = value;
      }
      continue;
    }
    if (!saw_magic) {
      throw ParseError("not an affectbench manifest: " + path, line_no);
    }
    if (manifest.class_count < 1) {
      throw ParseError("manifest record before class_count header", line_no);
    }
    std::vector<std::string> fields;
    {
      std::istringstream ss(line);
      std::string field;
      while (std::getline(ss, field, '\t')) fields.push_back(field);
    }
    const std::size_t expected = 7 + static_cast<std::size_t>(
                                          manifest.class_count);
    if (fields.size() != expected) {
      throw ParseError("manifest record has " +
                           std::to_string(fields.size()) + " fields, want " +
                           std::to_string(expected),
                       line_no);
    }
    ManifestRecord rec;
    rec.record_id = fields[0];
    rec.source_id = fields[1];
    rec.source_class = ParseInt(fields[2], line_no, "class");
    const auto kind = CorruptionKindFromString(fields[3]);
    if (!kind) throw ParseError("unknown corruption kind " + fields[3],
                                line_no);
    rec.kind = *kind;
    rec.severity = ParseInt(fields[4], line_no, "severity");
    if (rec.severity < 1 || rec.severity > kNumSeverities) {
      throw ParseError("severity out of range", line_no);
    }
    rec.path = fields[5];
    rec.visibility = ParseDouble(fields[6], line_no, "visibility");
    if (rec.visibility < 0.0 || rec.visibility > 1.0) {
      throw ParseError("visibility outside [0,1]", line_no);
    }
    rec.label.resize(manifest.class_count);
    for (int k = 0; k < manifest.class_count; ++k) {
      rec.label[k] = ParseDouble(fields[7 + k], line_no, "probability");
    }
    if (!IsSimplex(rec.label, 1e-9)) {
      throw ParseError("soft label is not on the simplex", line_no);
    }
    if (rec.source_class < 0 || rec.source_class >= manifest.class_count) {
      throw ParseError("class out of range", line_no);
    }
    manifest.records.push_back(std::move(rec));
  }
  if (!saw_magic) throw ParseError("not an affectbench manifest: " + path);
  return manifest;
}

std::vector<VAAnnotation> LoadVAAnnotations(const std::string& path,
                                            int class_count) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotations: " + path);
  std::vector<VAAnnotation> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.size() < 4) {
      throw ParseError("annotation row needs image_id class valence arousal",
                       line_no);
    }
    VAAnnotation ann;
    ann.image_id = fields[0];
    ann.cls = ParseInt(fields[1], line_no, "class");
    if (ann.cls < 0 || ann.cls >= class_count) {
      throw ParseError("class out of range [0," +
                           std::to_string(class_count) + ")",
                       line_no);
    }
    ann.va.valence = ParseDouble(fields[2], line_no, "valence");
    ann.va.arousal = ParseDouble(fields[3], line_no, "arousal");
    if (!ann.va.Valid()) {
      throw ParseError("valence/arousal outside [-1,1]", line_no);
    }
    rows.push_back(std::move(ann));
  }
  return rows;
}

std::vector<DirectLabelAnnotation> LoadDirectLabels(const std::string& path,
                                                    int class_count) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open direct labels: " + path);
  std::vector<DirectLabelAnnotation> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.size() != static_cast<std::size_t>(class_count) + 1) {
      throw ParseError("direct-label row needs image_id and " +
                           std::to_string(class_count) + " probabilities",
                       line_no);
    }
    DirectLabelAnnotation ann;
    ann.image_id = fields[0];
    ann.label.resize(class_count);
    double sum = 0.0;
    for (int k = 0; k < class_count; ++k) {
      ann.label[k] = ParseDouble(fields[1 + k], line_no, "probability");
      if (ann.label[k] < 0.0) {
        throw ParseError("negative probability", line_no);
      }
      sum += ann.label[k];
    }
    if (std::abs(sum - 1.0) > 1e-4) {
      throw ParseError("label does not sum to 1 (got " + FormatDouble(sum) +
                           ")",
                       line_no);
    }
    for (double& v : ann.label) v /= sum;
    rows.push_back(std::move(ann));
  }
  return rows;
}

PredictionRows LoadPredictions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open predictions: " + path);
  PredictionRows preds;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string key, value;
      if (!ParseHeaderLine(line, &key, &value)) continue;
      if (key == "class_count" || key == "K") {
        preds.class_count = ParseInt(value, line_no, "class_count");
      } else if (key == "dataset_id") {
        preds.dataset_id = value;
      } else if (key == "format") {
        if (value == "logits") {
          preds.logits = true;
        } else if (value == "probs") {
          preds.logits = false;
        } else {
          throw ParseError("format must be probs or logits", line_no);
        }
      }
      continue;
    }
    if (preds.class_count < 1) {
      throw ParseError("prediction rows before '# class_count=K' header",
                       line_no);
    }
    const std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.size() != static_cast<std::size_t>(preds.class_count) + 1) {
      throw ParseError("prediction row needs record_id and " +
                           std::to_string(preds.class_count) + " values",
                       line_no);
    }
    SoftLabel row(preds.class_count);
    for (int k = 0; k < preds.class_count; ++k) {
      row[k] = ParseDouble(fields[1 + k], line_no, "prediction");
    }
    if (preds.logits) {
      row = Softmax(row);
    } else {
      double sum = 0.0;
      for (double v : row) {
        if (v < 0.0) throw ParseError("negative probability", line_no);
        sum += v;
      }
      if (std::abs(sum - 1.0) > 1e-4) {
        throw ParseError(
            "probabilities sum to " + FormatDouble(sum) +
                ", outside the 1e-4 tolerance",
            line_no);
      }
      for (double& v : row) v /= sum;
    }
    preds.rows.emplace_back(fields[0], std::move(row));
  }
  return preds;
}

}  // namespace affectbench
