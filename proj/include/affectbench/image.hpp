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

#ifndef AFFECTBENCH_IMAGE_HPP_
#define AFFECTBENCH_IMAGE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace affectbench {

// H x W x 3 image, row-major (y, x, channel), values in [0, 1].
// All corruption and quality computations run on this representation;
// 8-bit encode/decode happens only at file boundaries.
class Image {
 public:
  static constexpr int kChannels = 3;

  Image() = default;
  Image(int height, int width, float fill = 0.0f)
      : height_(height),
        width_(width),
        data_(CheckedSize(height, width), fill) {}

  int height() const { return height_; }
  int width() const { return width_; }
  bool Empty() const { return height_ <= 0 || width_ <= 0; }
  std::size_t ElementCount() const { return data_.size(); }

  float& At(int y, int x, int c) { return data_[Index(y, x, c)]; }
  float At(int y, int x, int c) const { return data_[Index(y, x, c)]; }

  std::vector<float>& Data() { return data_; }
  const std::vector<float>& Data() const { return data_; }

  void ClipToUnit() {
    for (float& v : data_) v = std::min(1.0f, std::max(0.0f, v));
  }

  bool InUnitRange() const {
    for (float v : data_) {
      if (!(v >= 0.0f && v <= 1.0f)) return false;
    }
    return true;
  }

  bool SameShape(const Image& other) const {
    return height_ == other.height_ && width_ == other.width_;
  }

  bool operator==(const Image& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           data_ == other.data_;
  }

 private:
  static std::size_t CheckedSize(int height, int width) {
    if (height < 0 || width < 0) {
      throw std::invalid_argument("image dimensions must be non-negative");
    }
    return static_cast<std::size_t>(height) * static_cast<std::size_t>(width) *
           kChannels;
  }

  std::size_t Index(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * width_ + x) * kChannels + c;
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<float> data_;
};

}  // namespace affectbench

#endif  // AFFECTBENCH_IMAGE_HPP_
