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

#include "affectbench/quality.hpp"

#include <cmath>
#include <stdexcept>

#include "affectbench/errors.hpp"
#include "affectbench/image_ops.hpp"

namespace affectbench {

double RawL2Distance(const Image& x, const Image& cx) {
  if (!x.SameShape(cx)) {
    throw std::invalid_argument("raw_l2: image dimensions differ");
  }
  if (x.Empty()) throw std::invalid_argument("raw_l2: zero-area image");
  const std::vector<float>& a = x.Data();
  const std::vector<float>& b = cx.Data();
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq / static_cast<double>(a.size()));
}

std::vector<double> NormalizeVisibility(const std::vector<double>& raw) {
  if (raw.empty()) {
    throw std::invalid_argument("normalize_visibility: empty distance list");
  }
  double worst = 0.0;
  for (double d : raw) {
    if (d < 0.0) {
      throw std::invalid_argument(
          "normalize_visibility: negative raw distance");
    }
    worst = std::max(worst, d);
  }
  if (worst <= 0.0) {
    throw DegenerateInputError(
        "normalize_visibility: the source is unchanged by every corruption");
  }
  std::vector<double> v(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    v[i] = 1.0 - raw[i] / worst;
  }
  return v;
}

namespace {

// Summed-area table with one padding row/column of zeros.
class Integral {
 public:
  Integral(const std::vector<float>& plane, int h, int w)
      : w_(w), table_(static_cast<std::size_t>(h + 1) * (w + 1), 0.0) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        table_[Idx(y + 1, x + 1)] =
            static_cast<double>(plane[static_cast<std::size_t>(y) * w + x]) +
            table_[Idx(y, x + 1)] + table_[Idx(y + 1, x)] - table_[Idx(y, x)];
      }
    }
  }
  // Sum over rows [y0, y1) x cols [x0, x1).
  double Sum(int y0, int x0, int y1, int x1) const {
    return table_[Idx(y1, x1)] - table_[Idx(y0, x1)] - table_[Idx(y1, x0)] +
           table_[Idx(y0, x0)];
  }

 private:
  std::size_t Idx(int y, int x) const {
    return static_cast<std::size_t>(y) * (w_ + 1) + x;
  }
  int w_;
  std::vector<double> table_;
};

}  // namespace

double Ssim(const Image& x, const Image& cx, const SsimConfig& cfg) {
  if (!x.SameShape(cx)) {
    throw std::invalid_argument("ssim: image dimensions differ");
  }
  if (cfg.window < 3 || cfg.window % 2 == 0) {
    throw std::invalid_argument("ssim: window must be odd and >= 3");
  }
  if (x.height() < cfg.window || x.width() < cfg.window) {
    throw std::invalid_argument("ssim: image smaller than the window");
  }
  const int h = x.height(), w = x.width(), win = cfg.window;
  const double n = static_cast<double>(win) * win;
  const double c3 = cfg.c2 / 2.0;

  const std::vector<float> ga = ToGray(x);
  const std::vector<float> gb = ToGray(cx);
  std::vector<float> ga2(ga.size()), gb2(ga.size()), gab(ga.size());
  for (std::size_t i = 0; i < ga.size(); ++i) {
    ga2[i] = ga[i] * ga[i];
    gb2[i] = gb[i] * gb[i];
    gab[i] = ga[i] * gb[i];
  }
  const Integral ia(ga, h, w), ib(gb, h, w);
  const Integral ia2(ga2, h, w), ib2(gb2, h, w), iab(gab, h, w);

  double total = 0.0;
  std::int64_t count = 0;
  for (int y = 0; y + win <= h; ++y) {
    for (int xx = 0; xx + win <= w; ++xx) {
      const double mu_a = ia.Sum(y, xx, y + win, xx + win) / n;
      const double mu_b = ib.Sum(y, xx, y + win, xx + win) / n;
      double var_a = ia2.Sum(y, xx, y + win, xx + win) / n - mu_a * mu_a;
      double var_b = ib2.Sum(y, xx, y + win, xx + win) / n - mu_b * mu_b;
      double cov = iab.Sum(y, xx, y + win, xx + win) / n - mu_a * mu_b;
      var_a = std::max(var_a, 0.0);
      var_b = std::max(var_b, 0.0);
      const double sd_a = std::sqrt(var_a);
      const double sd_b = std::sqrt(var_b);

      const double lum = (2.0 * mu_a * mu_b + cfg.c1) /
                         (mu_a * mu_a + mu_b * mu_b + cfg.c1);
      const double con =
          (2.0 * sd_a * sd_b + cfg.c2) / (var_a + var_b + cfg.c2);
      const double str = (cov + c3) / (sd_a * sd_b + c3);

      // Negative structure keeps its sign through an odd-power exponent;
      // the defaults use gamma = 1.
      const double s_sign = str < 0.0 ? -1.0 : 1.0;
      total += std::pow(lum, cfg.alpha) * std::pow(con, cfg.beta) *
               s_sign * std::pow(std::abs(str), cfg.gamma);
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

double SsimDistance(const Image& x, const Image& cx, const SsimConfig& cfg) {
  return 1.0 - Ssim(x, cx, cfg);
}

}  // namespace affectbench
