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

#ifndef AFFECTBENCH_CORRUPT_HPP_
#define AFFECTBENCH_CORRUPT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affectbench/image.hpp"
#include "affectbench/rng.hpp"

namespace affectbench {

// The 17 corruption kinds, in canonical enumeration order. Suite output,
// manifests and schedule rows all follow this order.
enum class CorruptionKind : int {
  kGaussianNoise = 0,
  kShotNoise,
  kImpulseNoise,
  kSpeckleNoise,
  kMotionBlur,
  kDefocusBlur,
  kGlassBlur,
  kZoomBlur,
  kGaussianBlur,
  kSnow,
  kBrightness,
  kContrast,
  kElasticTransform,
  kPixelate,
  kJpegCompression,
  kSpatter,
  kSaturate,
};

inline constexpr int kNumCorruptionKinds = 17;
inline constexpr int kNumSeverities = 5;
inline constexpr int kNumVariants = kNumCorruptionKinds * kNumSeverities;

enum class CorruptionCategory { kNoise, kBlur, kWeather, kDigital };

const std::vector<CorruptionKind>& AllCorruptionKinds();
std::string_view ToString(CorruptionKind kind);
std::optional<CorruptionKind> CorruptionKindFromString(std::string_view name);
CorruptionCategory CategoryOf(CorruptionKind kind);
std::string_view ToString(CorruptionCategory category);

// Kinds that consume the seed; all others are deterministic in the image
// and severity alone.
bool IsStochastic(CorruptionKind kind);

// One of the 85 variants: which corruption, how strong, and the seed that
// makes stochastic kinds reproducible.
struct CorruptionSpec {
  CorruptionKind kind = CorruptionKind::kGaussianNoise;
  int severity = 1;  // in [1, 5]
  std::uint64_t seed = 0;
};

// Named parameters of one (kind, severity) row of the frozen schedule.
class SeverityParams {
 public:
  SeverityParams() = default;
  explicit SeverityParams(
      std::vector<std::pair<std::string, double>> entries)
      : entries_(std::move(entries)) {}

  double Get(std::string_view name) const;
  bool Has(std::string_view name) const;
  const std::vector<std::pair<std::string, double>>& Entries() const {
    return entries_;
  }
  bool operator==(const SeverityParams& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<std::pair<std::string, double>> entries_;
};

// Versioned schedule lookup. Severity outside [1,5] throws invalid_argument.
const SeverityParams& ScheduleParams(CorruptionKind kind, int severity);

// Canonical text of the schedule table (identical to the copy shipped under
// data/) and its SHA-256, recorded in every manifest.
std::string_view ScheduleTableText();
const std::string& ScheduleTableSha256();

// Applies one corruption. Output has the input's dimensions, all values in
// [0,1]; the input is never modified. Pure in (img, spec).
Image ApplyCorruption(const Image& img, const CorruptionSpec& spec);

// Per-variant seed, derived so any single variant can be regenerated alone.
std::uint64_t VariantSeed(std::uint64_t base_seed, CorruptionKind kind,
                          int severity);

// All 85 variants in canonical order: kinds in enumeration order, severities
// ascending within each kind.
std::vector<std::pair<CorruptionSpec, Image>> CorruptionSuite(
    const Image& img, std::uint64_t base_seed);

}  // namespace affectbench

#endif  // AFFECTBENCH_CORRUPT_HPP_
