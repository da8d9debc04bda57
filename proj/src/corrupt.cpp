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

#include "affectbench/corrupt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "affectbench/image_io.hpp"
#include "affectbench/image_ops.hpp"

namespace affectbench {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct KindInfo {
  CorruptionKind kind;
  std::string_view name;
  CorruptionCategory category;
  bool stochastic;
};

// Canonical enumeration order. Noise 4, Blur 5, Weather 1, Digital 7.
constexpr KindInfo kKindInfo[kNumCorruptionKinds] = {
    {CorruptionKind::kGaussianNoise, "gaussian_noise",
     CorruptionCategory::kNoise, true},
    {CorruptionKind::kShotNoise, "shot_noise", CorruptionCategory::kNoise,
     true},
    {CorruptionKind::kImpulseNoise, "impulse_noise",
     CorruptionCategory::kNoise, true},
    {CorruptionKind::kSpeckleNoise, "speckle_noise",
     CorruptionCategory::kNoise, true},
    {CorruptionKind::kMotionBlur, "motion_blur", CorruptionCategory::kBlur,
     false},
    {CorruptionKind::kDefocusBlur, "defocus_blur", CorruptionCategory::kBlur,
     false},
    {CorruptionKind::kGlassBlur, "glass_blur", CorruptionCategory::kBlur,
     true},
    {CorruptionKind::kZoomBlur, "zoom_blur", CorruptionCategory::kBlur, false},
    {CorruptionKind::kGaussianBlur, "gaussian_blur", CorruptionCategory::kBlur,
     false},
    {CorruptionKind::kSnow, "snow", CorruptionCategory::kWeather, true},
    {CorruptionKind::kBrightness, "brightness", CorruptionCategory::kDigital,
     false},
    {CorruptionKind::kContrast, "contrast", CorruptionCategory::kDigital,
     false},
    {CorruptionKind::kElasticTransform, "elastic_transform",
     CorruptionCategory::kDigital, true},
    {CorruptionKind::kPixelate, "pixelate", CorruptionCategory::kDigital,
     false},
    {CorruptionKind::kJpegCompression, "jpeg_compression",
     CorruptionCategory::kDigital, false},
    {CorruptionKind::kSpatter, "spatter", CorruptionCategory::kDigital, true},
    {CorruptionKind::kSaturate, "saturate", CorruptionCategory::kDigital,
     false},
};

const KindInfo& InfoOf(CorruptionKind kind) {
  const int idx = static_cast<int>(kind);
  if (idx < 0 || idx >= kNumCorruptionKinds) {
    throw std::invalid_argument("unknown corruption kind");
  }
  return kKindInfo[idx];
}

// ---------------------------------------------------------------------------
// Color space helpers

void RgbToHsv(float r, float g, float b, float* h, float* s, float* v) {
  const float maxc = std::max(r, std::max(g, b));
  const float minc = std::min(r, std::min(g, b));
  const float d = maxc - minc;
  *v = maxc;
  *s = maxc > 0.0f ? d / maxc : 0.0f;
  if (d <= 0.0f) {
    *h = 0.0f;
    return;
  }
  float hue;
  if (maxc == r) {
    hue = (g - b) / d;
    if (hue < 0.0f) hue += 6.0f;
  } else if (maxc == g) {
    hue = (b - r) / d + 2.0f;
  } else {
    hue = (r - g) / d + 4.0f;
  }
  *h = hue / 6.0f;
}

void HsvToRgb(float h, float s, float v, float* r, float* g, float* b) {
  if (s <= 0.0f) {
    *r = *g = *b = v;
    return;
  }
  float hue = h * 6.0f;
  if (hue >= 6.0f) hue -= 6.0f;
  const int sector = static_cast<int>(hue);
  const float f = hue - static_cast<float>(sector);
  const float p = v * (1.0f - s);
  const float q = v * (1.0f - s * f);
  const float t = v * (1.0f - s * (1.0f - f));
  switch (sector) {
    case 0: *r = v; *g = t; *b = p; break;
    case 1: *r = q; *g = v; *b = p; break;
    case 2: *r = p; *g = v; *b = t; break;
    case 3: *r = p; *g = q; *b = v; break;
    case 4: *r = t; *g = p; *b = v; break;
    default: *r = v; *g = p; *b = q; break;
  }
}

// ---------------------------------------------------------------------------
// Noise

Image GaussianNoise(const Image& img, double sigma, CounterRng& rng) {
  Image out = img;
  for (float& v : out.Data()) {
    v += static_cast<float>(sigma * rng.NextGaussian());
  }
  return out;
}

Image ShotNoise(const Image& img, double photons, CounterRng& rng) {
  Image out = img;
  for (float& v : out.Data()) {
    v = static_cast<float>(
        static_cast<double>(rng.NextPoisson(v * photons)) / photons);
  }
  return out;
}

Image ImpulseNoise(const Image& img, double amount, CounterRng& rng) {
  Image out = img;
  for (float& v : out.Data()) {
    const double u = rng.NextUnit();
    if (u < amount * 0.5) {
      v = 0.0f;
    } else if (u < amount) {
      v = 1.0f;
    }
  }
  return out;
}

Image SpeckleNoise(const Image& img, double sigma, CounterRng& rng) {
  Image out = img;
  for (float& v : out.Data()) {
    v += v * static_cast<float>(sigma * rng.NextGaussian());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Blurs

Image MotionBlur(const Image& img, int length, double sigma,
                 double angle_deg) {
  const int half = length / 2;
  const double angle = angle_deg * kPi / 180.0;
  const float dir_y = static_cast<float>(std::sin(angle));
  const float dir_x = static_cast<float>(std::cos(angle));
  std::vector<double> weights(length);
  double wsum = 0.0;
  for (int t = -half; t <= half; ++t) {
    const double w = std::exp(-(static_cast<double>(t) * t) /
                              (2.0 * sigma * sigma));
    weights[t + half] = w;
    wsum += w;
  }
  Image out(img.height(), img.width());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < Image::kChannels; ++c) {
        double acc = 0.0;
        for (int t = -half; t <= half; ++t) {
          acc += weights[t + half] *
                 BilinearSample(img, static_cast<float>(y) + t * dir_y,
                                static_cast<float>(x) + t * dir_x, c);
        }
        out.At(y, x, c) = static_cast<float>(acc / wsum);
      }
    }
  }
  return out;
}

Image DefocusBlur(const Image& img, int radius, double alias_blur) {
  const int pad = static_cast<int>(std::ceil(3.0 * alias_blur));
  const int half = radius + std::max(1, pad);
  const int ksize = 2 * half + 1;
  std::vector<float> kernel(static_cast<std::size_t>(ksize) * ksize, 0.0f);
  for (int dy = -half; dy <= half; ++dy) {
    for (int dx = -half; dx <= half; ++dx) {
      if (dy * dy + dx * dx <= radius * radius) {
        kernel[static_cast<std::size_t>(dy + half) * ksize + (dx + half)] =
            1.0f;
      }
    }
  }
  GaussianBlurPlane(kernel, ksize, ksize, alias_blur);
  double ksum = 0.0;
  for (float v : kernel) ksum += v;

  Image out(img.height(), img.width());
  const int h = img.height(), w = img.width();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < Image::kChannels; ++c) {
        double acc = 0.0;
        for (int dy = -half; dy <= half; ++dy) {
          const int yy = ReflectIndex(y + dy, h);
          for (int dx = -half; dx <= half; ++dx) {
            const float kv = kernel[static_cast<std::size_t>(dy + half) *
                                        ksize +
                                    (dx + half)];
            if (kv == 0.0f) continue;
            acc += kv * img.At(yy, ReflectIndex(x + dx, w), c);
          }
        }
        out.At(y, x, c) = static_cast<float>(acc / ksum);
      }
    }
  }
  return out;
}

Image GlassBlur(const Image& img, double sigma, int max_delta, int iterations,
                CounterRng& rng) {
  Image out = GaussianBlurImage(img, sigma);
  const int h = img.height(), w = img.width();
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(max_delta) + 1;
  for (int iter = 0; iter < iterations; ++iter) {
    for (int y = h - max_delta - 1; y >= max_delta; --y) {
      for (int x = w - max_delta - 1; x >= max_delta; --x) {
        const int dy =
            static_cast<int>(rng.NextBelow(span)) - max_delta;
        const int dx =
            static_cast<int>(rng.NextBelow(span)) - max_delta;
        const int yy = y + dy, xx = x + dx;
        for (int c = 0; c < Image::kChannels; ++c) {
          std::swap(out.At(y, x, c), out.At(yy, xx, c));
        }
      }
    }
  }
  return GaussianBlurImage(out, sigma);
}

// Zoom toward the image center by factor z >= 1.
Image ZoomIn(const Image& img, double z) {
  const int h = img.height(), w = img.width();
  const float cy = static_cast<float>(h - 1) / 2.0f;
  const float cx = static_cast<float>(w - 1) / 2.0f;
  Image out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float sy = cy + (static_cast<float>(y) - cy) / static_cast<float>(z);
      const float sx = cx + (static_cast<float>(x) - cx) / static_cast<float>(z);
      for (int c = 0; c < Image::kChannels; ++c) {
        out.At(y, x, c) = BilinearSample(img, sy, sx, c);
      }
    }
  }
  return out;
}

Image ZoomBlur(const Image& img, double max_zoom, double step) {
  std::vector<double> zooms;
  for (double z = 1.0; z <= max_zoom + 1e-9; z += step) zooms.push_back(z);
  Image acc = img;  // the original contributes once more than the zooms
  std::vector<double> sums(acc.ElementCount());
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] = acc.Data()[i];
  for (double z : zooms) {
    const Image zoomed = ZoomIn(img, z);
    for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += zoomed.Data()[i];
  }
  const double denom = static_cast<double>(zooms.size()) + 1.0;
  Image out(img.height(), img.width());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    out.Data()[i] = static_cast<float>(sums[i] / denom);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weather

Image Snow(const Image& img, const SeverityParams& p, CounterRng& rng) {
  const int h = img.height(), w = img.width();
  const double mean = p.Get("flake_mean");
  const double thresh = p.Get("flake_threshold");
  const int blur_length = static_cast<int>(p.Get("blur_length"));
  const double blur_sigma = p.Get("blur_sigma");
  const double blend = p.Get("scene_blend");

  // Flake field at half resolution, upsampled so flakes cover a few pixels.
  const int fh = (h + 1) / 2, fw = (w + 1) / 2;
  Image field(fh, fw);
  for (int y = 0; y < fh; ++y) {
    for (int x = 0; x < fw; ++x) {
      const float v =
          static_cast<float>(mean + 0.3 * rng.NextGaussian());
      for (int c = 0; c < Image::kChannels; ++c) field.At(y, x, c) = v;
    }
  }
  Image flakes = ResizeBilinear(field, h, w);
  for (float& v : flakes.Data()) {
    v = v > static_cast<float>(thresh) ? v : 0.0f;
  }
  const double angle = rng.NextUniform(-135.0, -45.0);
  flakes = MotionBlur(flakes, blur_length, blur_sigma, angle);

  const std::vector<float> gray = ToGray(img);
  Image out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float lifted =
          gray[static_cast<std::size_t>(y) * w + x] * 1.5f + 0.5f;
      const float fl = flakes.At(y, x, 0);
      const float fl_rot = flakes.At(h - 1 - y, w - 1 - x, 0);
      for (int c = 0; c < Image::kChannels; ++c) {
        const float base =
            static_cast<float>(blend) * img.At(y, x, c) +
            static_cast<float>(1.0 - blend) * std::max(img.At(y, x, c), lifted);
        out.At(y, x, c) = base + fl + fl_rot;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Digital

Image Brightness(const Image& img, double shift) {
  Image out(img.height(), img.width());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      float hh, ss, vv;
      RgbToHsv(img.At(y, x, 0), img.At(y, x, 1), img.At(y, x, 2), &hh, &ss,
               &vv);
      vv = std::min(1.0f, std::max(0.0f, vv + static_cast<float>(shift)));
      HsvToRgb(hh, ss, vv, &out.At(y, x, 0), &out.At(y, x, 1),
               &out.At(y, x, 2));
    }
  }
  return out;
}

Image Saturate(const Image& img, double factor, double shift) {
  Image out(img.height(), img.width());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      float hh, ss, vv;
      RgbToHsv(img.At(y, x, 0), img.At(y, x, 1), img.At(y, x, 2), &hh, &ss,
               &vv);
      ss = std::min(1.0f, std::max(0.0f, ss * static_cast<float>(factor) +
                                             static_cast<float>(shift)));
      HsvToRgb(hh, ss, vv, &out.At(y, x, 0), &out.At(y, x, 1),
               &out.At(y, x, 2));
    }
  }
  return out;
}

Image Contrast(const Image& img, double factor) {
  double mean[Image::kChannels] = {0.0, 0.0, 0.0};
  const std::size_t pixels =
      static_cast<std::size_t>(img.height()) * img.width();
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < Image::kChannels; ++c) mean[c] += img.At(y, x, c);
    }
  }
  for (double& m : mean) m /= static_cast<double>(pixels);
  Image out(img.height(), img.width());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < Image::kChannels; ++c) {
        out.At(y, x, c) = static_cast<float>(
            (img.At(y, x, c) - mean[c]) * factor + mean[c]);
      }
    }
  }
  return out;
}

Image ElasticTransform(const Image& img, double displacement_frac,
                       double smoothing_frac, CounterRng& rng) {
  const int h = img.height(), w = img.width();
  const double scale = static_cast<double>(std::min(h, w));
  const double alpha_px = displacement_frac * scale;
  const double sigma_px = smoothing_frac * scale;

  const std::size_t n = static_cast<std::size_t>(h) * w;
  std::vector<float> dy(n), dx(n);
  for (std::size_t i = 0; i < n; ++i)
    dy[i] = static_cast<float>(rng.NextUniform(-1.0, 1.0));
  for (std::size_t i = 0; i < n; ++i)
    dx[i] = static_cast<float>(rng.NextUniform(-1.0, 1.0));
  GaussianBlurPlane(dy, h, w, sigma_px);
  GaussianBlurPlane(dx, h, w, sigma_px);

  // Smoothing shrinks the field, so rescale to the target RMS amplitude.
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sq += static_cast<double>(dy[i]) * dy[i] +
          static_cast<double>(dx[i]) * dx[i];
  }
  const double rms = std::sqrt(sq / (2.0 * static_cast<double>(n)));
  const float gain =
      rms > 0.0 ? static_cast<float>(alpha_px / rms) : 0.0f;

  Image out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      const float sy = static_cast<float>(y) + dy[i] * gain;
      const float sx = static_cast<float>(x) + dx[i] * gain;
      for (int c = 0; c < Image::kChannels; ++c) {
        out.At(y, x, c) = BilinearSample(img, sy, sx, c);
      }
    }
  }
  return out;
}

Image Pixelate(const Image& img, double factor) {
  const int h = img.height(), w = img.width();
  const int oh = std::max(1, static_cast<int>(std::lround(h * factor)));
  const int ow = std::max(1, static_cast<int>(std::lround(w * factor)));

  // Exact area average downscale.
  Image small(oh, ow);
  const double ry = static_cast<double>(h) / oh;
  const double rx = static_cast<double>(w) / ow;
  for (int y = 0; y < oh; ++y) {
    const double y0 = y * ry, y1 = (y + 1) * ry;
    for (int x = 0; x < ow; ++x) {
      const double x0 = x * rx, x1 = (x + 1) * rx;
      double acc[Image::kChannels] = {0.0, 0.0, 0.0};
      double area = 0.0;
      for (int yy = static_cast<int>(std::floor(y0));
           yy < static_cast<int>(std::ceil(y1)); ++yy) {
        const double hy = std::min<double>(yy + 1, y1) - std::max<double>(yy, y0);
        if (hy <= 0) continue;
        for (int xx = static_cast<int>(std::floor(x0));
             xx < static_cast<int>(std::ceil(x1)); ++xx) {
          const double hx =
              std::min<double>(xx + 1, x1) - std::max<double>(xx, x0);
          if (hx <= 0) continue;
          const double wgt = hy * hx;
          area += wgt;
          for (int c = 0; c < Image::kChannels; ++c) {
            acc[c] += wgt * img.At(std::min(yy, h - 1), std::min(xx, w - 1), c);
          }
        }
      }
      for (int c = 0; c < Image::kChannels; ++c) {
        small.At(y, x, c) = static_cast<float>(acc[c] / area);
      }
    }
  }

  // Nearest-neighbour upscale back to the source size.
  Image out(h, w);
  for (int y = 0; y < h; ++y) {
    const int sy = std::min(oh - 1, static_cast<int>((y + 0.5) * oh / h));
    for (int x = 0; x < w; ++x) {
      const int sx = std::min(ow - 1, static_cast<int>((x + 0.5) * ow / w));
      for (int c = 0; c < Image::kChannels; ++c) {
        out.At(y, x, c) = small.At(sy, sx, c);
      }
    }
  }
  return out;
}

Image Spatter(const Image& img, const SeverityParams& p, CounterRng& rng) {
  const int h = img.height(), w = img.width();
  const double smoothing = p.Get("smoothing");
  const double threshold = p.Get("threshold");
  const double opacity = p.Get("opacity");
  const bool mud = p.Get("mud") != 0.0;

  std::vector<float> field(static_cast<std::size_t>(h) * w);
  for (float& v : field) {
    v = static_cast<float>(0.65 + 0.3 * rng.NextGaussian());
  }
  GaussianBlurPlane(field, h, w, smoothing);

  const float color[3] = {mud ? 0.45f : 0.75f, mud ? 0.33f : 0.85f,
                          mud ? 0.22f : 1.0f};
  Image out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float f = field[static_cast<std::size_t>(y) * w + x];
      const float mask = std::min(
          1.0f, std::max(0.0f, (f - static_cast<float>(threshold)) * 8.0f));
      const float a = mask * static_cast<float>(opacity);
      for (int c = 0; c < Image::kChannels; ++c) {
        out.At(y, x, c) = img.At(y, x, c) * (1.0f - a) + color[c] * a;
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface

const std::vector<CorruptionKind>& AllCorruptionKinds() {
  static const std::vector<CorruptionKind> kinds = [] {
    std::vector<CorruptionKind> v;
    v.reserve(kNumCorruptionKinds);
    for (const KindInfo& info : kKindInfo) v.push_back(info.kind);
    return v;
  }();
  return kinds;
}

std::string_view ToString(CorruptionKind kind) { return InfoOf(kind).name; }

std::optional<CorruptionKind> CorruptionKindFromString(std::string_view name) {
  for (const KindInfo& info : kKindInfo) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

CorruptionCategory CategoryOf(CorruptionKind kind) {
  return InfoOf(kind).category;
}

std::string_view ToString(CorruptionCategory category) {
  switch (category) {
    case CorruptionCategory::kNoise: return "noise";
    case CorruptionCategory::kBlur: return "blur";
    case CorruptionCategory::kWeather: return "weather";
    case CorruptionCategory::kDigital: return "digital";
  }
  throw std::invalid_argument("unknown corruption category");
}

bool IsStochastic(CorruptionKind kind) { return InfoOf(kind).stochastic; }

std::uint64_t VariantSeed(std::uint64_t base_seed, CorruptionKind kind,
                          int severity) {
  return DeriveStreamKey(base_seed, static_cast<std::uint64_t>(kind),
                         static_cast<std::uint64_t>(severity));
}

Image ApplyCorruption(const Image& img, const CorruptionSpec& spec) {
  if (img.Empty()) {
    throw std::invalid_argument("apply_corruption: zero-area image");
  }
  if (!img.InUnitRange()) {
    throw std::invalid_argument("apply_corruption: pixels outside [0,1]");
  }
  const SeverityParams& p = ScheduleParams(spec.kind, spec.severity);
  CounterRng rng(DeriveStreamKey(spec.seed, 0x5eedULL,
                                 static_cast<std::uint64_t>(spec.kind)));

  Image out;
  switch (spec.kind) {
    case CorruptionKind::kGaussianNoise:
      out = GaussianNoise(img, p.Get("sigma"), rng);
      break;
    case CorruptionKind::kShotNoise:
      out = ShotNoise(img, p.Get("photons"), rng);
      break;
    case CorruptionKind::kImpulseNoise:
      out = ImpulseNoise(img, p.Get("amount"), rng);
      break;
    case CorruptionKind::kSpeckleNoise:
      out = SpeckleNoise(img, p.Get("sigma"), rng);
      break;
    case CorruptionKind::kMotionBlur:
      out = MotionBlur(img, static_cast<int>(p.Get("length")), p.Get("sigma"),
                       p.Get("angle_deg"));
      break;
    case CorruptionKind::kDefocusBlur:
      out = DefocusBlur(img, static_cast<int>(p.Get("radius")),
                        p.Get("alias_blur"));
      break;
    case CorruptionKind::kGlassBlur:
      out = GlassBlur(img, p.Get("sigma"), static_cast<int>(p.Get("max_delta")),
                      static_cast<int>(p.Get("iterations")), rng);
      break;
    case CorruptionKind::kZoomBlur:
      out = ZoomBlur(img, p.Get("max_zoom"), p.Get("zoom_step"));
      break;
    case CorruptionKind::kGaussianBlur:
      out = GaussianBlurImage(img, p.Get("sigma"));
      break;
    case CorruptionKind::kSnow:
      out = Snow(img, p, rng);
      break;
    case CorruptionKind::kBrightness:
      out = Brightness(img, p.Get("shift"));
      break;
    case CorruptionKind::kContrast:
      out = Contrast(img, p.Get("factor"));
      break;
    case CorruptionKind::kElasticTransform:
      out = ElasticTransform(img, p.Get("displacement"), p.Get("smoothing"),
                             rng);
      break;
    case CorruptionKind::kPixelate:
      out = Pixelate(img, p.Get("factor"));
      break;
    case CorruptionKind::kJpegCompression:
      out = JpegRoundTrip(img, static_cast<int>(p.Get("quality")));
      break;
    case CorruptionKind::kSpatter:
      out = Spatter(img, p, rng);
      break;
    case CorruptionKind::kSaturate:
      out = Saturate(img, p.Get("factor"), p.Get("shift"));
      break;
  }
  out.ClipToUnit();
  return out;
}

std::vector<std::pair<CorruptionSpec, Image>> CorruptionSuite(
    const Image& img, std::uint64_t base_seed) {
  std::vector<std::pair<CorruptionSpec, Image>> suite;
  suite.reserve(kNumVariants);
  for (CorruptionKind kind : AllCorruptionKinds()) {
    for (int severity = 1; severity <= kNumSeverities; ++severity) {
      CorruptionSpec spec{kind, severity, VariantSeed(base_seed, kind,
                                                      severity)};
      suite.emplace_back(spec, ApplyCorruption(img, spec));
    }
  }
  return suite;
}

}  // namespace affectbench
