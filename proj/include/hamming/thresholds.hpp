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

#include <cstddef>

namespace hamming {

/// Input sizes (bytes) at which dispatch switches kernels. The defaults are
/// the crossovers measured on a Haswell-class desktop; `hamming calibrate`
/// reports values for the host.
struct DispatchThresholds {
  /// Counting: popcnt below, Muła AVX2 from here.
  std::size_t mula_min_bytes = 512;
  /// Counting: AVX2 Harley-Seal from here.
  std::size_t hs_min_bytes = 1024;
  /// Jaccard: fused Muła below, fused Harley-Seal from here.
  std::size_t jaccard_hs_min_bytes = 1024;

  bool operator==(const DispatchThresholds&) const = default;
};

}  // namespace hamming
