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

#include "hamming/similarity.hpp"

#include "fused.hpp"
#include "hamming/errors.hpp"
#include "hamming/thresholds.hpp"

namespace hamming {

namespace {

constexpr CpuFeatureSet kNeeds256{false, false, true, false};

void require_equal_length(WordBlock a, WordBlock b) {
  if (a.size() != b.size()) {
    throw LengthMismatch(a.size(), b.size());
  }
}

PopCount fused_count(detail::Combine op, WordBlock a, WordBlock b) {
  require_equal_length(a, b);
  const CpuFeatureSet& cpu = detect_cpu_features();
  const DispatchThresholds thresholds;
  const std::size_t bytes = a.size() * kWordBytes;
  if (cpu.has_256bit && bytes >= thresholds.hs_min_bytes) {
    return detail::avx2_hs_fused_native(op, a.data(), b.data(), a.size());
  }
  if (cpu.has_256bit && bytes >= thresholds.mula_min_bytes) {
    return detail::mula256_fused_native(op, a.data(), b.data(), a.size());
  }
  if (cpu.has_popcnt) {
    return detail::hw_popcnt_fused(op, a.data(), b.data(), a.size());
  }
  if (op == detail::Combine::and_words) {
    return detail::harley_seal64_impl(
        detail::WordSource<detail::Combine::and_words>{a.data(), b.data()}, a.size());
  }
  return detail::harley_seal64_impl(
      detail::WordSource<detail::Combine::or_words>{a.data(), b.data()}, a.size());
}

SimilarityResult from_pair(detail::PairCounts c) noexcept {
  return make_similarity(c.intersection, c.union_);
}

}  // namespace

SimilarityResult make_similarity(PopCount intersection, PopCount union_count) noexcept {
  SimilarityResult r{intersection, union_count, 1.0};
  if (union_count > 0) {
    r.jaccard = static_cast<double>(intersection) / static_cast<double>(union_count);
  }
  return r;
}

PopCount intersection_count(WordBlock a, WordBlock b) {
  return fused_count(detail::Combine::and_words, a, b);
}

PopCount union_count(WordBlock a, WordBlock b) {
  return fused_count(detail::Combine::or_words, a, b);
}

SimilarityResult jaccard_popcnt(WordBlock a, WordBlock b) {
  require_equal_length(a, b);
  return from_pair(detail::jaccard_popcnt_counts(a.data(), b.data(), a.size()));
}

SimilarityResult jaccard_scalar(WordBlock a, WordBlock b) {
  require_equal_length(a, b);
  PopCount i = 0, u = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    i += detail::wwg_inline(a[k] & b[k]);
    u += detail::wwg_inline(a[k] | b[k]);
  }
  return make_similarity(i, u);
}

SimilarityResult jaccard_mula256(WordBlock a, WordBlock b, SimdPath path) {
  require_equal_length(a, b);
  return from_pair(uses_native(path, kNeeds256)
                       ? detail::jaccard_mula256_native(a.data(), b.data(), a.size())
                       : detail::jaccard_mula256_portable(a.data(), b.data(), a.size()));
}

SimilarityResult jaccard_hs(WordBlock a, WordBlock b, SimdPath path) {
  require_equal_length(a, b);
  return from_pair(uses_native(path, kNeeds256)
                       ? detail::jaccard_hs_native(a.data(), b.data(), a.size())
                       : detail::jaccard_hs_portable(a.data(), b.data(), a.size()));
}

}  // namespace hamming
