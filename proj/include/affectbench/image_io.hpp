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

#ifndef AFFECTBENCH_IMAGE_IO_HPP_
#define AFFECTBENCH_IMAGE_IO_HPP_

#include <string>
#include <vector>

#include "affectbench/image.hpp"

namespace affectbench {

// Loads a PNG or JPEG file (sniffed by magic bytes) as RGB in [0,1].
Image LoadImage(const std::string& path);

// Saves as 8-bit RGB PNG with fixed encoder settings, so identical pixels
// always produce identical bytes.
void SavePng(const Image& img, const std::string& path);

// In-memory JPEG encode at the given quality followed by decode. This is the
// real lossy round-trip used by the jpeg_compression corruption.
Image JpegRoundTrip(const Image& img, int quality);

// 8-bit quantization used at every file boundary.
std::vector<std::uint8_t> ToBytes(const Image& img);
Image FromBytes(const std::uint8_t* data, int height, int width);

}  // namespace affectbench

#endif  // AFFECTBENCH_IMAGE_IO_HPP_
