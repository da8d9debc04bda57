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

#include "affectbench/image_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace affectbench {

int ReflectIndex(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

float BilinearSample(const Image& img, float y, float x, int c) {
  const int y0 = static_cast<int>(std::floor(y));
  const int x0 = static_cast<int>(std::floor(x));
  const float fy = y - static_cast<float>(y0);
  const float fx = x - static_cast<float>(x0);
  const int h = img.height(), w = img.width();
  const int ya = ReflectIndex(y0, h), yb = ReflectIndex(y0 + 1, h);
  const int xa = ReflectIndex(x0, w), xb = ReflectIndex(x0 + 1, w);
  const float top = img.At(ya, xa, c) * (1.0f - fx) + img.At(ya, xb, c) * fx;
  const float bot = img.At(yb, xa, c) * (1.0f - fx) + img.At(yb, xb, c) * fx;
  return top * (1.0f - fy) + bot * fy;
}

namespace {

std::vector<double> GaussianKernel1D(double sigma) {
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-(static_cast<double>(i) * i) /
                              (2.0 * sigma * sigma));
    kernel[i + radius] = v;
    sum += v;
  }
  for (double& v : kernel) v /= sum;
  return kernel;
}

void BlurPlaneAxis(std::vector<float>& plane, int height, int width,
                   const std::vector<double>& kernel, bool horizontal) {
  const int radius = static_cast<int>(kernel.size() / 2);
  std::vector<float> out(plane.size());
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double acc = 0.0;
      for (int t = -radius; t <= radius; ++t) {
        const int yy = horizontal ? y : ReflectIndex(y + t, height);
        const int xx = horizontal ? ReflectIndex(x + t, width) : x;
        acc += kernel[t + radius] *
               plane[static_cast<std::size_t>(yy) * width + xx];
      }
      out[static_cast<std::size_t>(y) * width + x] = static_cast<float>(acc);
    }
  }
  plane.swap(out);
}

}  // namespace

void GaussianBlurPlane(std::vector<float>& plane, int height, int width,
                       double sigma) {
  if (sigma <= 0.0) return;
  const std::vector<double> kernel = GaussianKernel1D(sigma);
  BlurPlaneAxis(plane, height, width, kernel, /*horizontal=*/true);
  BlurPlaneAxis(plane, height, width, kernel, /*horizontal=*/false);
}

Image GaussianBlurImage(const Image& img, double sigma) {
  if (sigma <= 0.0) return img;
  const int h = img.height(), w = img.width();
  Image out(h, w);
  std::vector<float> plane(static_cast<std::size_t>(h) * w);
  for (int c = 0; c < Image::kChannels; ++c) {
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        plane[static_cast<std::size_t>(y) * w + x] = img.At(y, x, c);
    GaussianBlurPlane(plane, h, w, sigma);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        out.At(y, x, c) = plane[static_cast<std::size_t>(y) * w + x];
  }
  return out;
}

std::vector<float> ToGray(const Image& img) {
  const int h = img.height(), w = img.width();
  std::vector<float> gray(static_cast<std::size_t>(h) * w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      gray[static_cast<std::size_t>(y) * w + x] = 0.299f * img.At(y, x, 0) +
                                                  0.587f * img.At(y, x, 1) +
                                                  0.114f * img.At(y, x, 2);
    }
  }
  return gray;
}

Image ResizeBilinear(const Image& img, int out_height, int out_width) {
  if (img.Empty()) throw std::invalid_argument("cannot resize empty image");
  if (out_height <= 0 || out_width <= 0) {
    throw std::invalid_argument("target size must be positive");
  }
  Image out(out_height, out_width);
  const float sy = static_cast<float>(img.height()) / out_height;
  const float sx = static_cast<float>(img.width()) / out_width;
  for (int y = 0; y < out_height; ++y) {
    for (int x = 0; x < out_width; ++x) {
      // Align pixel centers.
      const float src_y = (static_cast<float>(y) + 0.5f) * sy - 0.5f;
      const float src_x = (static_cast<float>(x) + 0.5f) * sx - 0.5f;
      for (int c = 0; c < Image::kChannels; ++c) {
        out.At(y, x, c) = BilinearSample(img, src_y, src_x, c);
      }
    }
  }
  return out;
}

}  // namespace affectbench
