// Copyright 2026 The hamming Authors
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

#pragma once

#include <string>

namespace hamming {

/// Instruction-set extensions the kernels care about.
///
/// has_512bit_ternlog covers everything the 512-bit kernels use: AVX-512F for
/// vpternlog and AVX-512BW for byte shuffles, byte adds and psadbw.
struct CpuFeatureSet {
  bool has_popcnt = false;
  bool has_ssse3_shuffle = false;
  bool has_256bit = false;
  bool has_512bit_ternlog = false;

  /// True when every feature set in `required` is also set here.
  constexpr bool contains(const CpuFeatureSet& required) const noexcept {
    return (!required.has_popcnt || has_popcnt) &&
           (!required.has_ssse3_shuffle || has_ssse3_shuffle) &&
           (!required.has_256bit || has_256bit) &&
           (!required.has_512bit_ternlog || has_512bit_ternlog);
  }

  constexpr CpuFeatureSet intersect(const CpuFeatureSet& o) const noexcept {
    return {has_popcnt && o.has_popcnt, has_ssse3_shuffle && o.has_ssse3_shuffle,
            has_256bit && o.has_256bit, has_512bit_ternlog && o.has_512bit_ternlog};
  }

  constexpr bool operator==(const CpuFeatureSet&) const = default;

  static constexpr CpuFeatureSet baseline() noexcept { return {}; }
  static constexpr CpuFeatureSet popcnt_only() noexcept { return {true, false, false, false}; }
  /// What an AVX2-era desktop part (e.g. Haswell) reports.
  static constexpr CpuFeatureSet haswell() noexcept { return {true, true, true, false}; }
  static constexpr CpuFeatureSet all() noexcept { return {true, true, true, true}; }

  std::string to_string() const;
};

/// Queries the processor on first call and caches the answer. On non-x86
/// targets every flag is false.
const CpuFeatureSet& detect_cpu_features() noexcept;

}  // namespace hamming
