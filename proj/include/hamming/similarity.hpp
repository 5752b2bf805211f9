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

#include "hamming/core.hpp"
#include "hamming/vector_kernels.hpp"

namespace hamming {

/// Intersection and union cardinalities of two bitsets and their ratio.
///
/// Two empty sets are identical, so a zero union gives jaccard == 1.0 rather
/// than 0/0.
struct SimilarityResult {
  PopCount intersection_count = 0;
  PopCount union_count = 0;
  double jaccard = 1.0;

  bool operator==(const SimilarityResult&) const = default;
};

/// Builds a result from integer counts, dividing once.
SimilarityResult make_similarity(PopCount intersection, PopCount union_count) noexcept;

// All pairwise operations throw LengthMismatch when a.size() != b.size().
// None of them materializes the AND/OR of the inputs.

/// |a AND b| through the fastest fused AND-and-count kernel for this CPU.
PopCount intersection_count(WordBlock a, WordBlock b);
/// |a OR b|, likewise.
PopCount union_count(WordBlock a, WordBlock b);

/// One pass of hardware popcount over AND and OR words. Throws
/// UnsupportedFeature without popcnt.
SimilarityResult jaccard_popcnt(WordBlock a, WordBlock b);

/// Portable single pass using wwg; the fallback on CPUs without popcnt.
SimilarityResult jaccard_scalar(WordBlock a, WordBlock b);

/// Fused Muła AVX2: byte counts of AND and OR accumulated side by side.
SimilarityResult jaccard_mula256(WordBlock a, WordBlock b,
                                 SimdPath path = SimdPath::automatic);

/// Two interleaved AVX2 Harley-Seal trees, one over AND words and one over
/// OR words; each input word is loaded once.
SimilarityResult jaccard_hs(WordBlock a, WordBlock b, SimdPath path = SimdPath::automatic);

}  // namespace hamming
