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

#ifndef AFFECTBENCH_HASH_HPP_
#define AFFECTBENCH_HASH_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace affectbench {

// Lowercase hex SHA-256 of a byte string. Used for config provenance in
// manifests and reports.
std::string Sha256Hex(std::string_view bytes);

// SHA-256 of a file's content.
std::string Sha256FileHex(const std::string& path);

// FNV-1a, used to fold string ids into RNG stream keys.
constexpr std::uint64_t Fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace affectbench

#endif  // AFFECTBENCH_HASH_HPP_
