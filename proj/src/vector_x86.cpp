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

// Native SSSE3 / AVX2 / AVX-512 kernels. Each function carries its own target
// attribute so the library builds without -march flags; callers check
// detect_cpu_features() before entering any of them.
#include <algorithm>
#include <cstring>

#include "fused.hpp"
#include "hamming/wide.hpp"
#include "portable_kernels.hpp"

#if defined(__x86_64__)
#include <immintrin.h>

#define HAMMING_SSSE3 __attribute__((target("ssse3")))
#define HAMMING_AVX2 __attribute__((target("avx2")))
#define HAMMING_AVX512 __attribute__((target("avx512f,avx512bw")))

namespace hamming::detail {

namespace {

// ---------------------------------------------------------------- 128-bit

HAMMING_SSSE3 inline __m128i count_bytes(__m128i v) {
  const __m128i lookup = _mm_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m128i low_mask = _mm_set1_epi8(0x0f);
  const __m128i lo = _mm_and_si128(v, low_mask);
  const __m128i hi = _mm_and_si128(_mm_srli_epi16(v, 4), low_mask);
  const __m128i cnt1 = _mm_shuffle_epi8(lookup, lo);
  const __m128i cnt2 = _mm_shuffle_epi8(lookup, hi);
  return _mm_add_epi8(cnt1, cnt2);
}

HAMMING_SSSE3 inline Word sum_lanes(__m128i v) {
  return static_cast<Word>(_mm_cvtsi128_si64(v)) +
         static_cast<Word>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(v, v)));
}

// ---------------------------------------------------------------- 256-bit

HAMMING_AVX2 inline __m256i count_bytes(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
  const __m256i popcnt1 = _mm256_shuffle_epi8(lookup, lo);
  const __m256i popcnt2 = _mm256_shuffle_epi8(lookup, hi);
  return _mm256_add_epi8(popcnt1, popcnt2);
}

HAMMING_AVX2 inline __m256i count64(__m256i v) {
  return _mm256_sad_epu8(count_bytes(v), _mm256_setzero_si256());
}

HAMMING_AVX2 inline void csa(__m256i& h, __m256i& l, __m256i a, __m256i b, __m256i c) {
  const __m256i u = _mm256_xor_si256(a, b);
  h = _mm256_or_si256(_mm256_and_si256(a, b), _mm256_and_si256(u, c));
  l = _mm256_xor_si256(u, c);
}

HAMMING_AVX2 inline Word sum_lanes(__m256i v) {
  return static_cast<Word>(_mm256_extract_epi64(v, 0)) +
         static_cast<Word>(_mm256_extract_epi64(v, 1)) +
         static_cast<Word>(_mm256_extract_epi64(v, 2)) +
         static_cast<Word>(_mm256_extract_epi64(v, 3));
}

template <Combine Op>
HAMMING_AVX2 inline __m256i load256(const Word* a, const Word* b, std::size_t vec) {
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a) + vec);
  if constexpr (Op == Combine::and_words) {
    return _mm256_and_si256(va, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b) + vec));
  } else if constexpr (Op == Combine::or_words) {
    return _mm256_or_si256(va, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b) + vec));
  } else {
    return va;
  }
}

template <Combine Op>
HAMMING_AVX2 PopCount mula256(const Word* a, const Word* b, std::size_t n) {
  const std::size_t vecs = n / 4;
  __m256i total = _mm256_setzero_si256();
  std::size_t i = 0;
  while (i < vecs) {
    __m256i acc = _mm256_setzero_si256();
    const std::size_t end = std::min(vecs, i + 16);
    for (; i < end; ++i) acc = _mm256_add_epi8(acc, count_bytes(load256<Op>(a, b, i)));
    total = _mm256_add_epi64(total, _mm256_sad_epu8(acc, _mm256_setzero_si256()));
  }
  return sum_lanes(total) + wwg_tail(WordSource<Op>{a, b}, vecs * 4, n);
}

struct Hs256 {
  __m256i total, ones, twos, fours, eights;
};

HAMMING_AVX2 inline Hs256 hs256_init() {
  const __m256i z = _mm256_setzero_si256();
  return {z, z, z, z, z};
}

HAMMING_AVX2 inline PopCount hs256_finish(const Hs256& s) {
  __m256i total = _mm256_slli_epi64(s.total, 4);
  total = _mm256_add_epi64(total, _mm256_slli_epi64(count64(s.eights), 3));
  total = _mm256_add_epi64(total, _mm256_slli_epi64(count64(s.fours), 2));
  total = _mm256_add_epi64(total, _mm256_slli_epi64(count64(s.twos), 1));
  total = _mm256_add_epi64(total, count64(s.ones));
  return sum_lanes(total);
}

template <Combine Op>
HAMMING_AVX2 PopCount avx2_hs(const Word* a, const Word* b, std::size_t n) {
  const std::size_t vec_body = n / 4 / 16 * 16;
  Hs256 s = hs256_init();
  __m256i twos_a, twos_b, fours_a, fours_b, eights_a, eights_b, sixteens;
  for (std::size_t i = 0; i < vec_body; i += 16) {
    auto d = [a, b, i](std::size_t k) HAMMING_AVX2 { return load256<Op>(a, b, i + k); };
    csa(twos_a, s.ones, s.ones, d(0), d(1));
    csa(twos_b, s.ones, s.ones, d(2), d(3));
    csa(fours_a, s.twos, s.twos, twos_a, twos_b);
    csa(twos_a, s.ones, s.ones, d(4), d(5));
    csa(twos_b, s.ones, s.ones, d(6), d(7));
    csa(fours_b, s.twos, s.twos, twos_a, twos_b);
    csa(eights_a, s.fours, s.fours, fours_a, fours_b);
    csa(twos_a, s.ones, s.ones, d(8), d(9));
    csa(twos_b, s.ones, s.ones, d(10), d(11));
    csa(fours_a, s.twos, s.twos, twos_a, twos_b);
    csa(twos_a, s.ones, s.ones, d(12), d(13));
    csa(twos_b, s.ones, s.ones, d(14), d(15));
    csa(fours_b, s.twos, s.twos, twos_a, twos_b);
    csa(eights_b, s.fours, s.fours, fours_a, fours_b);
    csa(sixteens, s.eights, s.eights, eights_a, eights_b);
    s.total = _mm256_add_epi64(s.total, count64(sixteens));
  }
  return hs256_finish(s) + wwg_tail(WordSource<Op>{a, b}, vec_body * 4, n);
}

// Both trees advance together; each input vector is loaded once and feeds
// the AND tree and the OR tree.
HAMMING_AVX2 PairCounts jaccard_hs(const Word* a, const Word* b, std::size_t n) {
  const std::size_t vec_body = n / 4 / 16 * 16;
  Hs256 x = hs256_init();  // intersection
  Hs256 u = hs256_init();  // union
  __m256i xa, xb, xfa, xfb, xea, xeb, x16;
  __m256i ua, ub, ufa, ufb, uea, ueb, u16;
  const auto* va = reinterpret_cast<const __m256i*>(a);
  const auto* vb = reinterpret_cast<const __m256i*>(b);
  for (std::size_t i = 0; i < vec_body; i += 16) {
    // Feeds input vectors k and k+1 into `ones` of both trees.
    auto feed = [&](__m256i& x_high, __m256i& u_high, std::size_t k) HAMMING_AVX2 {
      const __m256i a0 = _mm256_loadu_si256(va + i + k);
      const __m256i b0 = _mm256_loadu_si256(vb + i + k);
      const __m256i a1 = _mm256_loadu_si256(va + i + k + 1);
      const __m256i b1 = _mm256_loadu_si256(vb + i + k + 1);
      csa(x_high, x.ones, x.ones, _mm256_and_si256(a0, b0), _mm256_and_si256(a1, b1));
      csa(u_high, u.ones, u.ones, _mm256_or_si256(a0, b0), _mm256_or_si256(a1, b1));
    };
    feed(xa, ua, 0);
    feed(xb, ub, 2);
    csa(xfa, x.twos, x.twos, xa, xb);
    csa(ufa, u.twos, u.twos, ua, ub);
    feed(xa, ua, 4);
    feed(xb, ub, 6);
    csa(xfb, x.twos, x.twos, xa, xb);
    csa(ufb, u.twos, u.twos, ua, ub);
    csa(xea, x.fours, x.fours, xfa, xfb);
    csa(uea, u.fours, u.fours, ufa, ufb);
    feed(xa, ua, 8);
    feed(xb, ub, 10);
    csa(xfa, x.twos, x.twos, xa, xb);
    csa(ufa, u.twos, u.twos, ua, ub);
    feed(xa, ua, 12);
    feed(xb, ub, 14);
    csa(xfb, x.twos, x.twos, xa, xb);
    csa(ufb, u.twos, u.twos, ua, ub);
    csa(xeb, x.fours, x.fours, xfa, xfb);
    csa(ueb, u.fours, u.fours, ufa, ufb);
    csa(x16, x.eights, x.eights, xea, xeb);
    csa(u16, u.eights, u.eights, uea, ueb);
    x.total = _mm256_add_epi64(x.total, count64(x16));
    u.total = _mm256_add_epi64(u.total, count64(u16));
  }
  return {hs256_finish(x) + wwg_tail(WordSource<Combine::and_words>{a, b}, vec_body * 4, n),
          hs256_finish(u) + wwg_tail(WordSource<Combine::or_words>{a, b}, vec_body * 4, n)};
}

HAMMING_AVX2 PairCounts jaccard_mula(const Word* a, const Word* b, std::size_t n) {
  const std::size_t vecs = n / 4;
  const auto* va = reinterpret_cast<const __m256i*>(a);
  const auto* vb = reinterpret_cast<const __m256i*>(b);
  __m256i total_and = _mm256_setzero_si256();
  __m256i total_or = _mm256_setzero_si256();
  std::size_t i = 0;
  while (i < vecs) {
    __m256i acc_and = _mm256_setzero_si256();
    __m256i acc_or = _mm256_setzero_si256();
    const std::size_t end = std::min(vecs, i + 16);
    for (; i < end; ++i) {
      const __m256i x = _mm256_loadu_si256(va + i);
      const __m256i y = _mm256_loadu_si256(vb + i);
      acc_and = _mm256_add_epi8(acc_and, count_bytes(_mm256_and_si256(x, y)));
      acc_or = _mm256_add_epi8(acc_or, count_bytes(_mm256_or_si256(x, y)));
    }
    total_and = _mm256_add_epi64(total_and, _mm256_sad_epu8(acc_and, _mm256_setzero_si256()));
    total_or = _mm256_add_epi64(total_or, _mm256_sad_epu8(acc_or, _mm256_setzero_si256()));
  }
  return {sum_lanes(total_and) + wwg_tail(WordSource<Combine::and_words>{a, b}, vecs * 4, n),
          sum_lanes(total_or) + wwg_tail(WordSource<Combine::or_words>{a, b}, vecs * 4, n)};
}

// ---------------------------------------------------------------- 512-bit

HAMMING_AVX512 inline __m512i count64(__m512i v) {
  const __m512i lookup = _mm512_broadcast_i32x4(
      _mm_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4));
  const __m512i low_mask = _mm512_set1_epi8(0x0f);
  const __m512i lo = _mm512_and_si512(v, low_mask);
  const __m512i hi = _mm512_and_si512(_mm512_srli_epi32(v, 4), low_mask);
  const __m512i total = _mm512_add_epi8(_mm512_shuffle_epi8(lookup, lo),
                                        _mm512_shuffle_epi8(lookup, hi));
  return _mm512_sad_epu8(total, _mm512_setzero_si512());
}

HAMMING_AVX512 inline void csa(__m512i& h, __m512i& l, __m512i a, __m512i b, __m512i c) {
  l = _mm512_ternarylogic_epi32(c, b, a, 0x96);
  h = _mm512_ternarylogic_epi32(c, b, a, 0xe8);
}

HAMMING_AVX512 PopCount avx512_hs(const Word* p, std::size_t n) {
  const std::size_t vec_body = n / 8 / 16 * 16;
  const __m512i z = _mm512_setzero_si512();
  __m512i total = z, ones = z, twos = z, fours = z, eights = z;
  __m512i twos_a, twos_b, fours_a, fours_b, eights_a, eights_b, sixteens;
  const auto* d = reinterpret_cast<const __m512i*>(p);
  for (std::size_t i = 0; i < vec_body; i += 16) {
    auto ld = [d, i](std::size_t k) HAMMING_AVX512 { return _mm512_loadu_si512(d + i + k); };
    csa(twos_a, ones, ones, ld(0), ld(1));
    csa(twos_b, ones, ones, ld(2), ld(3));
    csa(fours_a, twos, twos, twos_a, twos_b);
    csa(twos_a, ones, ones, ld(4), ld(5));
    csa(twos_b, ones, ones, ld(6), ld(7));
    csa(fours_b, twos, twos, twos_a, twos_b);
    csa(eights_a, fours, fours, fours_a, fours_b);
    csa(twos_a, ones, ones, ld(8), ld(9));
    csa(twos_b, ones, ones, ld(10), ld(11));
    csa(fours_a, twos, twos, twos_a, twos_b);
    csa(twos_a, ones, ones, ld(12), ld(13));
    csa(twos_b, ones, ones, ld(14), ld(15));
    csa(fours_b, twos, twos, twos_a, twos_b);
    csa(eights_b, fours, fours, fours_a, fours_b);
    csa(sixteens, eights, eights, eights_a, eights_b);
    total = _mm512_add_epi64(total, count64(sixteens));
  }
  total = _mm512_slli_epi64(total, 4);
  total = _mm512_add_epi64(total, _mm512_slli_epi64(count64(eights), 3));
  total = _mm512_add_epi64(total, _mm512_slli_epi64(count64(fours), 2));
  total = _mm512_add_epi64(total, _mm512_slli_epi64(count64(twos), 1));
  total = _mm512_add_epi64(total, count64(ones));
  return static_cast<PopCount>(_mm512_reduce_add_epi64(total)) +
         wwg_tail(WordSource<Combine::none>{p, nullptr}, vec_body * 8, n);
}

PopCount select_op(Combine op, const Word* a, const Word* b, std::size_t n,
                   PopCount (*none)(const Word*, const Word*, std::size_t),
                   PopCount (*and_)(const Word*, const Word*, std::size_t),
                   PopCount (*or_)(const Word*, const Word*, std::size_t)) {
  switch (op) {
    case Combine::and_words: return and_(a, b, n);
    case Combine::or_words: return or_(a, b, n);
    case Combine::none: break;
  }
  return none(a, b, n);
}

}  // namespace

HAMMING_SSSE3 PopCount mula128_native(const Word* p, std::size_t n) noexcept {
  const std::size_t vecs = n / 2;
  const auto* v = reinterpret_cast<const __m128i*>(p);
  __m128i total = _mm_setzero_si128();
  std::size_t i = 0;
  while (i < vecs) {
    __m128i acc = _mm_setzero_si128();
    const std::size_t end = std::min(vecs, i + 8);
    for (; i < end; ++i) acc = _mm_add_epi8(acc, count_bytes(_mm_loadu_si128(v + i)));
    total = _mm_add_epi64(total, _mm_sad_epu8(acc, _mm_setzero_si128()));
  }
  return sum_lanes(total) + wwg_tail(WordSource<Combine::none>{p, nullptr}, vecs * 2, n);
}

HAMMING_SSSE3 Vec128 count_bytes_128_native(const Vec128& v) noexcept {
  Vec128 r;
  const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v.words.data()));
  _mm_storeu_si128(reinterpret_cast<__m128i*>(r.words.data()), count_bytes(x));
  return r;
}

HAMMING_AVX2 Vec256 count_bytes_256_native(const Vec256& v) noexcept {
  Vec256 r;
  const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.words.data()));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(r.words.data()), count_bytes(x));
  return r;
}

HAMMING_AVX2 Vec256 count64_256_native(const Vec256& v) noexcept {
  Vec256 r;
  const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.words.data()));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(r.words.data()), count64(x));
  return r;
}

HAMMING_AVX2 WideCsa<4> csa256_native(const Vec256& a, const Vec256& b,
                                      const Vec256& c) noexcept {
  __m256i h, l;
  csa(h, l, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.words.data())),
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.words.data())),
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c.words.data())));
  WideCsa<4> r;
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(r.high.words.data()), h);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(r.low.words.data()), l);
  return r;
}

HAMMING_AVX512 WideCsa<8> csa512_native(const Vec512& a, const Vec512& b,
                                        const Vec512& c) noexcept {
  __m512i h, l;
  csa(h, l, _mm512_loadu_si512(a.words.data()), _mm512_loadu_si512(b.words.data()),
      _mm512_loadu_si512(c.words.data()));
  WideCsa<8> r;
  _mm512_storeu_si512(r.high.words.data(), h);
  _mm512_storeu_si512(r.low.words.data(), l);
  return r;
}

HAMMING_AVX512 Vec512 count64_512_native(const Vec512& v) noexcept {
  Vec512 r;
  _mm512_storeu_si512(r.words.data(), count64(_mm512_loadu_si512(v.words.data())));
  return r;
}

PopCount avx512_hs_native(const Word* p, std::size_t n) noexcept { return avx512_hs(p, n); }

PopCount mula256_fused_native(Combine op, const Word* a, const Word* b, std::size_t n) {
  return select_op(op, a, b, n, mula256<Combine::none>, mula256<Combine::and_words>,
                   mula256<Combine::or_words>);
}

PopCount avx2_hs_fused_native(Combine op, const Word* a, const Word* b, std::size_t n) {
  return select_op(op, a, b, n, avx2_hs<Combine::none>, avx2_hs<Combine::and_words>,
                   avx2_hs<Combine::or_words>);
}

PairCounts jaccard_mula256_native(const Word* a, const Word* b, std::size_t n) {
  return jaccard_mula(a, b, n);
}

PairCounts jaccard_hs_native(const Word* a, const Word* b, std::size_t n) {
  return jaccard_hs(a, b, n);
}

}  // namespace hamming::detail

#else  // !__x86_64__

#include <exception>

#include "hamming/errors.hpp"

namespace hamming::detail {

// Never reached: detect_cpu_features() reports no SIMD support off x86.
namespace {
[[noreturn]] void no_native() { throw UnsupportedFeature("x86 SIMD"); }
}  // namespace

PopCount mula128_native(const Word*, std::size_t) noexcept { std::terminate(); }
Vec128 count_bytes_128_native(const Vec128&) noexcept { std::terminate(); }
Vec256 count_bytes_256_native(const Vec256&) noexcept { std::terminate(); }
Vec256 count64_256_native(const Vec256&) noexcept { std::terminate(); }
WideCsa<4> csa256_native(const Vec256&, const Vec256&, const Vec256&) noexcept { std::terminate(); }
WideCsa<8> csa512_native(const Vec512&, const Vec512&, const Vec512&) noexcept { std::terminate(); }
Vec512 count64_512_native(const Vec512&) noexcept { std::terminate(); }
PopCount avx512_hs_native(const Word*, std::size_t) noexcept { std::terminate(); }
PopCount mula256_fused_native(Combine, const Word*, const Word*, std::size_t) { no_native(); }
PopCount avx2_hs_fused_native(Combine, const Word*, const Word*, std::size_t) { no_native(); }
PairCounts jaccard_mula256_native(const Word*, const Word*, std::size_t) { no_native(); }
PairCounts jaccard_hs_native(const Word*, const Word*, std::size_t) { no_native(); }

}  // namespace hamming::detail

#endif
