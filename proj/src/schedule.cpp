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

// The corruption severity schedule. The canonical table lives in
// data/corruption_schedule.json; the copy below must stay byte-identical to
// it (a unit test enforces this). The SHA-256 of this text is stamped into
// every manifest, so changing a constant is a version bump, not an edit.

#include <array>
#include <mutex>
#include <stdexcept>

#include "affectbench/corrupt.hpp"
#include "affectbench/hash.hpp"
#include "json.hpp"

namespace affectbench {
namespace {

constexpr std::string_view kScheduleJson = R"abjson({
  "table": "affectbench-corruption-schedule",
  "version": 1,
  "pixel_domain": "float32 in [0,1], RGB",
  "notes": "Frozen severity parameters for the 17 corruption kinds. Every parameter that drives degradation is monotone across severities 1..5. Do not edit in place; bump the version and regenerate benchmarks instead.",
  "kinds": [
    {
      "kind": "gaussian_noise",
      "category": "noise",
      "stochastic": true,
      "severities": [
        {"sigma": 0.08},
        {"sigma": 0.12},
        {"sigma": 0.18},
        {"sigma": 0.26},
        {"sigma": 0.38}
      ]
    },
    {
      "kind": "shot_noise",
      "category": "noise",
      "stochastic": true,
      "severities": [
        {"photons": 60},
        {"photons": 25},
        {"photons": 12},
        {"photons": 5},
        {"photons": 3}
      ]
    },
    {
      "kind": "impulse_noise",
      "category": "noise",
      "stochastic": true,
      "severities": [
        {"amount": 0.03},
        {"amount": 0.06},
        {"amount": 0.09},
        {"amount": 0.17},
        {"amount": 0.27}
      ]
    },
    {
      "kind": "speckle_noise",
      "category": "noise",
      "stochastic": true,
      "severities": [
        {"sigma": 0.15},
        {"sigma": 0.2},
        {"sigma": 0.35},
        {"sigma": 0.45},
        {"sigma": 0.6}
      ]
    },
    {
      "kind": "motion_blur",
      "category": "blur",
      "stochastic": false,
      "severities": [
        {"length": 7, "sigma": 2.0, "angle_deg": 45.0},
        {"length": 11, "sigma": 3.0, "angle_deg": 45.0},
        {"length": 15, "sigma": 4.0, "angle_deg": 45.0},
        {"length": 19, "sigma": 5.0, "angle_deg": 45.0},
        {"length": 23, "sigma": 6.0, "angle_deg": 45.0}
      ]
    },
    {
      "kind": "defocus_blur",
      "category": "blur",
      "stochastic": false,
      "severities": [
        {"radius": 3, "alias_blur": 0.1},
        {"radius": 4, "alias_blur": 0.5},
        {"radius": 6, "alias_blur": 0.5},
        {"radius": 8, "alias_blur": 0.5},
        {"radius": 10, "alias_blur": 0.5}
      ]
    },
    {
      "kind": "glass_blur",
      "category": "blur",
      "stochastic": true,
      "severities": [
        {"sigma": 0.7, "max_delta": 1, "iterations": 1},
        {"sigma": 0.9, "max_delta": 1, "iterations": 2},
        {"sigma": 1.0, "max_delta": 2, "iterations": 2},
        {"sigma": 1.1, "max_delta": 2, "iterations": 3},
        {"sigma": 1.5, "max_delta": 3, "iterations": 3}
      ]
    },
    {
      "kind": "zoom_blur",
      "category": "blur",
      "stochastic": false,
      "severities": [
        {"max_zoom": 1.1, "zoom_step": 0.01},
        {"max_zoom": 1.15, "zoom_step": 0.01},
        {"max_zoom": 1.2, "zoom_step": 0.02},
        {"max_zoom": 1.25, "zoom_step": 0.02},
        {"max_zoom": 1.3, "zoom_step": 0.03}
      ]
    },
    {
      "kind": "gaussian_blur",
      "category": "blur",
      "stochastic": false,
      "severities": [
        {"sigma": 1.0},
        {"sigma": 2.0},
        {"sigma": 3.0},
        {"sigma": 4.0},
        {"sigma": 6.0}
      ]
    },
    {
      "kind": "snow",
      "category": "weather",
      "stochastic": true,
      "severities": [
        {"flake_mean": 0.1, "flake_threshold": 0.6, "blur_length": 7, "blur_sigma": 2.0, "scene_blend": 0.85},
        {"flake_mean": 0.2, "flake_threshold": 0.55, "blur_length": 9, "blur_sigma": 2.5, "scene_blend": 0.775},
        {"flake_mean": 0.35, "flake_threshold": 0.5, "blur_length": 11, "blur_sigma": 3.0, "scene_blend": 0.7},
        {"flake_mean": 0.45, "flake_threshold": 0.45, "blur_length": 13, "blur_sigma": 3.5, "scene_blend": 0.625},
        {"flake_mean": 0.55, "flake_threshold": 0.4, "blur_length": 15, "blur_sigma": 4.0, "scene_blend": 0.55}
      ]
    },
    {
      "kind": "brightness",
      "category": "digital",
      "stochastic": false,
      "severities": [
        {"shift": 0.1},
        {"shift": 0.2},
        {"shift": 0.3},
        {"shift": 0.4},
        {"shift": 0.5}
      ]
    },
    {
      "kind": "contrast",
      "category": "digital",
      "stochastic": false,
      "severities": [
        {"factor": 0.4},
        {"factor": 0.3},
        {"factor": 0.2},
        {"factor": 0.1},
        {"factor": 0.05}
      ]
    },
    {
      "kind": "elastic_transform",
      "category": "digital",
      "stochastic": true,
      "severities": [
        {"displacement": 0.03, "smoothing": 0.2},
        {"displacement": 0.05, "smoothing": 0.17},
        {"displacement": 0.08, "smoothing": 0.14},
        {"displacement": 0.12, "smoothing": 0.11},
        {"displacement": 0.17, "smoothing": 0.08}
      ]
    },
    {
      "kind": "pixelate",
      "category": "digital",
      "stochastic": false,
      "severities": [
        {"factor": 0.6},
        {"factor": 0.5},
        {"factor": 0.4},
        {"factor": 0.3},
        {"factor": 0.25}
      ]
    },
    {
      "kind": "jpeg_compression",
      "category": "digital",
      "stochastic": false,
      "severities": [
        {"quality": 25},
        {"quality": 18},
        {"quality": 15},
        {"quality": 10},
        {"quality": 7}
      ]
    },
    {
      "kind": "spatter",
      "category": "digital",
      "stochastic": true,
      "severities": [
        {"smoothing": 3.0, "threshold": 0.72, "opacity": 0.35, "mud": 0},
        {"smoothing": 2.5, "threshold": 0.7, "opacity": 0.45, "mud": 0},
        {"smoothing": 2.0, "threshold": 0.68, "opacity": 0.55, "mud": 0},
        {"smoothing": 1.5, "threshold": 0.66, "opacity": 0.85, "mud": 1},
        {"smoothing": 1.2, "threshold": 0.63, "opacity": 0.95, "mud": 1}
      ]
    },
    {
      "kind": "saturate",
      "category": "digital",
      "stochastic": false,
      "severities": [
        {"factor": 1.5, "shift": 0.0},
        {"factor": 2.5, "shift": 0.0},
        {"factor": 4.0, "shift": 0.0},
        {"factor": 8.0, "shift": 0.05},
        {"factor": 16.0, "shift": 0.1}
      ]
    }
  ]
}
)abjson";

struct ScheduleTable {
  std::array<std::array<SeverityParams, kNumSeverities>, kNumCorruptionKinds>
      rows;
};

ScheduleTable ParseSchedule() {
  const nlohmann::json doc = nlohmann::json::parse(kScheduleJson);
  const auto& kinds = doc.at("kinds");
  if (kinds.size() != static_cast<std::size_t>(kNumCorruptionKinds)) {
    throw std::logic_error("schedule table: wrong kind count");
  }
  ScheduleTable table;
  for (int i = 0; i < kNumCorruptionKinds; ++i) {
    const auto& entry = kinds[i];
    const auto kind = static_cast<CorruptionKind>(i);
    if (entry.at("kind").get<std::string>() != ToString(kind)) {
      throw std::logic_error("schedule table: kind order mismatch at index " +
                             std::to_string(i));
    }
    if (entry.at("category").get<std::string>() !=
        ToString(CategoryOf(kind))) {
      throw std::logic_error("schedule table: category mismatch for " +
                             std::string(ToString(kind)));
    }
    if (entry.at("stochastic").get<bool>() != IsStochastic(kind)) {
      throw std::logic_error("schedule table: stochastic flag mismatch for " +
                             std::string(ToString(kind)));
    }
    const auto& severities = entry.at("severities");
    if (severities.size() != static_cast<std::size_t>(kNumSeverities)) {
      throw std::logic_error("schedule table: wrong severity count for " +
                             std::string(ToString(kind)));
    }
    for (int s = 0; s < kNumSeverities; ++s) {
      std::vector<std::pair<std::string, double>> params;
      for (const auto& [name, value] : severities[s].items()) {
        params.emplace_back(name, value.get<double>());
      }
      table.rows[i][s] = SeverityParams(std::move(params));
    }
  }
  return table;
}

const ScheduleTable& GetSchedule() {
  static const ScheduleTable table = ParseSchedule();
  return table;
}

}  // namespace

double SeverityParams::Get(std::string_view name) const {
  for (const auto& [key, value] : entries_) {
    if (key == name) return value;
  }
  throw std::invalid_argument("no schedule parameter named '" +
                              std::string(name) + "'");
}

bool SeverityParams::Has(std::string_view name) const {
  for (const auto& [key, value] : entries_) {
    if (key == name) return true;
  }
  return false;
}

const SeverityParams& ScheduleParams(CorruptionKind kind, int severity) {
  if (severity < 1 || severity > kNumSeverities) {
    throw std::invalid_argument("severity must be in [1,5], got " +
                                std::to_string(severity));
  }
  const int kind_index = static_cast<int>(kind);
  if (kind_index < 0 || kind_index >= kNumCorruptionKinds) {
    throw std::invalid_argument("unknown corruption kind");
  }
  return GetSchedule().rows[kind_index][severity - 1];
}

std::string_view ScheduleTableText() { return kScheduleJson; }

const std::string& ScheduleTableSha256() {
  static const std::string hash = Sha256Hex(kScheduleJson);
  return hash;
}

}  // namespace affectbench
