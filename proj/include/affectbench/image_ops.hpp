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

#ifndef AFFECTBENCH_IMAGE_OPS_HPP_
#define AFFECTBENCH_IMAGE_OPS_HPP_

#include <vector>

#include "affectbench/image.hpp"

namespace affectbench {

// Symmetric reflection of an index into [0, n): ... 2 1 0 | 0 1 2 ... n-1 | n-1 ...
int ReflectIndex(int i, int n);

// Bilinear sample of one channel at fractional coordinates, reflected at the
// borders.
float BilinearSample(const Image& img, float y, float x, int c);

// Separable Gaussian blur, kernel radius ceil(3*sigma). sigma <= 0 is a copy.
Image GaussianBlurImage(const Image& img, double sigma);
void GaussianBlurPlane(std::vector<float>& plane, int height, int width,
                       double sigma);

// Rec.601 luma plane.
std::vector<float> ToGray(const Image& img);

Image ResizeBilinear(const Image& img, int out_height, int out_width);

}  // namespace affectbench

#endif  // AFFECTBENCH_IMAGE_OPS_HPP_
