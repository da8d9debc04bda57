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

#ifndef AFFECTBENCH_RNG_HPP_
#define AFFECTBENCH_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace affectbench {

// SplitMix64 finalizer. Stable across platforms; do not change the constants,
// regenerated benchmarks must be bit-identical to previously shipped ones.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Key for an independent substream, e.g. (base_seed, kind_index, severity).
constexpr std::uint64_t DeriveStreamKey(std::uint64_t base, std::uint64_t a,
                                        std::uint64_t b = 0) {
  std::uint64_t h = Mix64(base + 0x632BE59BD9B4E019ULL);
  h = Mix64(h ^ Mix64(a + 0xD1B54A32D192ED03ULL));
  h = Mix64(h ^ Mix64(b + 0x8CB92BA72F3D8DD7ULL));
  return h;
}

// Counter-based generator: every draw is a pure function of (key, counter),
// independent of platform, compiler and standard library. std::* distributions
// are deliberately avoided since their streams are implementation-defined.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t NextU64() { return Mix64(key_ ^ Mix64(counter_++)); }

  // Uniform in [0, 1), 53 mantissa bits.
  double NextUnit() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double NextUniform(double lo, double hi) {
    return lo + (hi - lo) * NextUnit();
  }

  // Unbiased integer in [0, n).
  std::uint64_t NextBelow(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("NextBelow: n must be positive");
    const std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
    if (rem == 0) return NextU64() % n;
    const std::uint64_t limit = UINT64_MAX - rem + 1;
    std::uint64_t v;
    do {
      v = NextU64();
    } while (v >= limit);
    return v % n;
  }

  // Standard normal via Box-Muller; the spare deviate is cached.
  double NextGaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 =
        (static_cast<double>(NextU64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = NextUnit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Poisson by inversion (Knuth). Adequate for the schedule's means.
  std::int64_t NextPoisson(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    double p = 1.0;
    std::int64_t k = 0;
    do {
      ++k;
      p *= NextUnit();
    } while (p > limit);
    return k - 1;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace affectbench

#endif  // AFFECTBENCH_RNG_HPP_
