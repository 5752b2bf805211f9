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

// Internal building blocks shared by the counting and similarity kernels.
#pragma once

#include <cstddef>

#include "hamming/core.hpp"
#include "hamming/scalar_kernels.hpp"

namespace hamming::detail {

/// Which Boolean combination of two inputs a fused kernel counts.
enum class Combine { none, and_words, or_words };

/// Word-at-a-time view over one block (Combine::none) or over the AND/OR of
/// two equal-length blocks, so no temporary array is ever materialized.
template <Combine Op>
struct WordSource {
  const Word* a;
  const Word* b;

  Word operator[](std::size_t i) const noexcept {
    if constexpr (Op == Combine::and_words) {
      return a[i] & b[i];
    } else if constexpr (Op == Combine::or_words) {
      return a[i] | b[i];
    } else {
      return a[i];
    }
  }
};

inline PopCount wwg_inline(Word x) noexcept {
  x -= (x >> 1) & 0x5555555555555555ULL;
  x = ((x >> 2) & 0x3333333333333333ULL) + (x & 0x3333333333333333ULL);
  x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0FULL;
  x *= 0x0101010101010101ULL;
  return x >> 56;
}

template <class Source>
PopCount harley_seal64_impl(Source d, std::size_t size) noexcept {
  PopCount total = 0;
  Word ones = 0, twos = 0, fours = 0, eights = 0, sixteens = 0;
  Word twos_a, twos_b, fours_a, fours_b, eights_a, eights_b;
  auto csa = [](Word& h, Word& l, Word a, Word b, Word c) {
    const CsaPair p = csa64(a, b, c);
    h = p.high;
    l = p.low;
  };
  const std::size_t body = size - size % 16;
  for (std::size_t i = 0; i < body; i += 16) {
    csa(twos_a, ones, ones, d[i + 0], d[i + 1]);
    csa(twos_b, ones, ones, d[i + 2], d[i + 3]);
    csa(fours_a, twos, twos, twos_a, twos_b);
    csa(twos_a, ones, ones, d[i + 4], d[i + 5]);
    csa(twos_b, ones, ones, d[i + 6], d[i + 7]);
    csa(fours_b, twos, twos, twos_a, twos_b);
    csa(eights_a, fours, fours, fours_a, fours_b);
    csa(twos_a, ones, ones, d[i + 8], d[i + 9]);
    csa(twos_b, ones, ones, d[i + 10], d[i + 11]);
    csa(fours_a, twos, twos, twos_a, twos_b);
    csa(twos_a, ones, ones, d[i + 12], d[i + 13]);
    csa(twos_b, ones, ones, d[i + 14], d[i + 15]);
    csa(fours_b, twos, twos, twos_a, twos_b);
    csa(eights_b, fours, fours, fours_a, fours_b);
    csa(sixteens, eights, eights, eights_a, eights_b);
    total += wwg_inline(sixteens);
  }
  total = 16 * total + 8 * wwg_inline(eights) + 4 * wwg_inline(fours) +
          2 * wwg_inline(twos) + wwg_inline(ones);
  for (std::size_t i = body; i < size; ++i) {
    total += wwg_inline(d[i]);
  }
  return total;
}

/// Tail helper for the vector kernels: words [from, size) counted with wwg.
template <class Source>
PopCount wwg_tail(Source d, std::size_t from, std::size_t size) noexcept {
  PopCount total = 0;
  for (std::size_t i = from; i < size; ++i) {
    total += wwg_inline(d[i]);
  }
  return total;
}

// Fused counters over a Combine of two blocks (b ignored for Combine::none).
// Native variants require the matching CPU feature; callers check.
PopCount hw_popcnt_fused(Combine op, const Word* a, const Word* b, std::size_t n);
PopCount mula256_fused_native(Combine op, const Word* a, const Word* b, std::size_t n);
PopCount mula256_fused_portable(Combine op, const Word* a, const Word* b, std::size_t n);
PopCount avx2_hs_fused_native(Combine op, const Word* a, const Word* b, std::size_t n);
PopCount avx2_hs_fused_portable(Combine op, const Word* a, const Word* b, std::size_t n);

struct PairCounts {
  PopCount intersection = 0;
  PopCount union_ = 0;
};

// Single-pass intersection and union counts: each input word is loaded once.
PairCounts jaccard_popcnt_counts(const Word* a, const Word* b, std::size_t n);
PairCounts jaccard_mula256_native(const Word* a, const Word* b, std::size_t n);
PairCounts jaccard_mula256_portable(const Word* a, const Word* b, std::size_t n);
PairCounts jaccard_hs_native(const Word* a, const Word* b, std::size_t n);
PairCounts jaccard_hs_portable(const Word* a, const Word* b, std::size_t n);

}  // namespace hamming::detail
