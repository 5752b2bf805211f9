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

#include "hamming/scalar_kernels.hpp"

#include "fused.hpp"
#include "hamming/cpu_features.hpp"
#include "hamming/errors.hpp"

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace hamming {

namespace {

constexpr Word kM1 = 0x5555555555555555ULL;
constexpr Word kM2 = 0x3333333333333333ULL;
constexpr Word kM4 = 0x0F0F0F0F0F0F0F0FULL;
constexpr Word kM8 = 0x00FF00FF00FF00FFULL;
constexpr Word kM16 = 0x0000FFFF0000FFFFULL;
constexpr Word kM32 = 0x00000000FFFFFFFFULL;

template <PopCount (*Count)(Word) noexcept>
PopCount sum_words(WordBlock block) noexcept {
  PopCount total = 0;
  for (Word w : block) {
    total += Count(w);
  }
  return total;
}

// One group of twelve words.
PopCount lauradoux12(const Word* input) noexcept {
  Word acc = 0;
  for (int j = 0; j < 12; j += 3) {
    Word count1 = input[j + 0];
    Word count2 = input[j + 1];
    Word half1 = input[j + 2];
    Word half2 = input[j + 2];
    half1 &= kM1;
    half2 = (half2 >> 1) & kM1;
    count1 -= (count1 >> 1) & kM1;
    count2 -= (count2 >> 1) & kM1;
    count1 += half1;
    count2 += half2;
    count1 = (count1 & kM2) + ((count1 >> 2) & kM2);
    count1 += (count2 & kM2) + ((count2 >> 2) & kM2);
    acc += (count1 & kM4) + ((count1 >> 4) & kM4);
  }
  acc = (acc & kM8) + ((acc >> 8) & kM8);
  acc = (acc + (acc >> 16)) & kM16;
  acc = acc + (acc >> 32);
  // The upper 32-bit half still holds its own partial sum; the total (at most
  // 768) lives in the low bits.
  return acc & 0xFFFF;
}

}  // namespace

PopCount naive_tree(Word x) noexcept {
  x = (x & kM1) + ((x >> 1) & kM1);
  x = (x & kM2) + ((x >> 2) & kM2);
  x = (x & kM4) + ((x >> 4) & kM4);
  x = (x & kM8) + ((x >> 8) & kM8);
  x = (x & kM16) + ((x >> 16) & kM16);
  return (x & kM32) + ((x >> 32) & kM32);
}

PopCount wwg(Word w) noexcept { return detail::wwg_inline(w); }

PopCount wegner(Word x) noexcept {
  PopCount v = 0;
  while (x != 0) {
    x &= x - 1;
    ++v;
  }
  return v;
}

PopcountTables build_tables() {
  PopcountTables t;
  for (std::size_t i = 0; i < t.by_byte.size(); ++i) {
    t.by_byte[i] = static_cast<std::uint8_t>(popcount_oracle_word(i));
  }
  for (std::size_t i = 0; i < t.by_short.size(); ++i) {
    t.by_short[i] = static_cast<std::uint8_t>(popcount_oracle_word(i));
  }
  return t;
}

const PopcountTables& popcount_tables() {
  static const PopcountTables tables = build_tables();
  return tables;
}

PopCount naive_tree_count(WordBlock block) noexcept { return sum_words<naive_tree>(block); }
PopCount wwg_count(WordBlock block) noexcept { return sum_words<wwg>(block); }
PopCount wegner_count(WordBlock block) noexcept { return sum_words<wegner>(block); }

PopCount table8_count(WordBlock block) {
  return table8_count(block, popcount_tables().by_byte);
}

PopCount table8_count(WordBlock block, const ByteTable& table) noexcept {
  PopCount total = 0;
  for (Word w : block) {
    total += table[w & 0xFF] + table[(w >> 8) & 0xFF] + table[(w >> 16) & 0xFF] +
             table[(w >> 24) & 0xFF] + table[(w >> 32) & 0xFF] +
             table[(w >> 40) & 0xFF] + table[(w >> 48) & 0xFF] + table[w >> 56];
  }
  return total;
}

PopCount table16_count(WordBlock block) {
  return table16_count(block, popcount_tables().by_short);
}

PopCount table16_count(WordBlock block, const ShortTable& table) noexcept {
  PopCount total = 0;
  for (Word w : block) {
    total += table[w & 0xFFFF] + table[(w >> 16) & 0xFFFF] +
             table[(w >> 32) & 0xFFFF] + table[w >> 48];
  }
  return total;
}

PopCount lauradoux(WordBlock block) noexcept {
  PopCount total = 0;
  const std::size_t body = block.size() - block.size() % 12;
  for (std::size_t i = 0; i < body; i += 12) {
    total += lauradoux12(block.data() + i);
  }
  for (std::size_t i = body; i < block.size(); ++i) {
    total += wwg(block[i]);
  }
  return total;
}

PopCount harley_seal64(WordBlock block) noexcept {
  return detail::harley_seal64_impl(
      detail::WordSource<detail::Combine::none>{block.data(), nullptr}, block.size());
}

PopCount hw_popcnt(WordBlock block) {
  return detail::hw_popcnt_fused(detail::Combine::none, block.data(), nullptr,
                                 block.size());
}

namespace detail {

#if defined(__x86_64__)
namespace {

// Four independent accumulators keep the load-popcnt-add chains apart.
template <Combine Op>
__attribute__((target("popcnt"))) PopCount popcnt_loop(const Word* a, const Word* b,
                                                       std::size_t n) noexcept {
  const WordSource<Op> d{a, b};
  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += _mm_popcnt_u64(d[i + 0]);
    c1 += _mm_popcnt_u64(d[i + 1]);
    c2 += _mm_popcnt_u64(d[i + 2]);
    c3 += _mm_popcnt_u64(d[i + 3]);
  }
  for (; i < n; ++i) {
    c0 += _mm_popcnt_u64(d[i]);
  }
  return c0 + c1 + c2 + c3;
}

__attribute__((target("popcnt"))) PairCounts popcnt_pair_loop(const Word* a, const Word* b,
                                                              std::size_t n) noexcept {
  std::uint64_t i0 = 0, u0 = 0, i1 = 0, u1 = 0;
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    u0 += _mm_popcnt_u64(a[k] | b[k]);
    i0 += _mm_popcnt_u64(a[k] & b[k]);
    u1 += _mm_popcnt_u64(a[k + 1] | b[k + 1]);
    i1 += _mm_popcnt_u64(a[k + 1] & b[k + 1]);
  }
  for (; k < n; ++k) {
    u0 += _mm_popcnt_u64(a[k] | b[k]);
    i0 += _mm_popcnt_u64(a[k] & b[k]);
  }
  return {i0 + i1, u0 + u1};
}

}  // namespace
#endif

PopCount hw_popcnt_fused(Combine op, const Word* a, const Word* b, std::size_t n) {
  if (!detect_cpu_features().has_popcnt) {
    throw UnsupportedFeature("popcnt");
  }
#if defined(__x86_64__)
  switch (op) {
    case Combine::and_words: return popcnt_loop<Combine::and_words>(a, b, n);
    case Combine::or_words: return popcnt_loop<Combine::or_words>(a, b, n);
    case Combine::none: break;
  }
  return popcnt_loop<Combine::none>(a, b, n);
#else
  (void)op, (void)a, (void)b, (void)n;
  return 0;
#endif
}

PairCounts jaccard_popcnt_counts(const Word* a, const Word* b, std::size_t n) {
  if (!detect_cpu_features().has_popcnt) {
    throw UnsupportedFeature("popcnt");
  }
#if defined(__x86_64__)
  return popcnt_pair_loop(a, b, n);
#else
  (void)a, (void)b, (void)n;
  return {};
#endif
}

}  // namespace detail

}  // namespace hamming
