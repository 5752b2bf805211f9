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

// Scalar emulation of the vector kernels. Same algorithms, same block sizes,
// built from the instruction emulations in wide.hpp.
#include <algorithm>

#include "fused.hpp"
#include "hamming/wide.hpp"
#include "portable_kernels.hpp"

namespace hamming::detail {

namespace {

using namespace hamming::portable;

template <std::size_t L, Combine Op>
Wide<L> load_wide(const Word* a, const Word* b, std::size_t vec) noexcept {
  const Wide<L> va = Wide<L>::load(a + vec * L);
  if constexpr (Op == Combine::and_words) {
    return bit_and(va, Wide<L>::load(b + vec * L));
  } else if constexpr (Op == Combine::or_words) {
    return bit_or(va, Wide<L>::load(b + vec * L));
  } else {
    return va;
  }
}

template <std::size_t L, Combine Op>
PopCount mula_array(const Word* a, const Word* b, std::size_t n, std::size_t rounds) noexcept {
  const std::size_t vecs = n / L;
  Wide<L> total;
  for (std::size_t i = 0; i < vecs;) {
    Wide<L> acc;
    const std::size_t end = std::min(vecs, i + rounds);
    for (; i < end; ++i) acc = add_u8(acc, count_bytes(load_wide<L, Op>(a, b, i)));
    total = add_u64(total, sum_bytes_u64(acc));
  }
  return horizontal_sum(total) + wwg_tail(WordSource<Op>{a, b}, vecs * L, n);
}

template <std::size_t L>
WideCsa<L> csa_logic(const Wide<L>& a, const Wide<L>& b, const Wide<L>& c) noexcept {
  const Wide<L> u = bit_xor(a, b);
  return {bit_or(bit_and(a, b), bit_and(u, c)), bit_xor(u, c)};
}

template <std::size_t L>
WideCsa<L> csa_ternary(const Wide<L>& a, const Wide<L>& b, const Wide<L>& c) noexcept {
  return {ternary_logic(c, b, a, 0xe8), ternary_logic(c, b, a, 0x96)};
}

// Harley-Seal counters for one stream of vectors.
template <std::size_t L, WideCsa<L> (*Csa)(const Wide<L>&, const Wide<L>&, const Wide<L>&)>
struct HsTree {
  Wide<L> total, ones, twos, fours, eights;

  static void csa(Wide<L>& h, Wide<L>& l, const Wide<L>& a, const Wide<L>& b,
                  const Wide<L>& c) noexcept {
    const WideCsa<L> r = Csa(a, b, c);
    h = r.high;
    l = r.low;
  }

  void add16(const Wide<L>* d) noexcept {
    Wide<L> twos_a, twos_b, fours_a, fours_b, eights_a, eights_b, sixteens;
    csa(twos_a, ones, ones, d[0], d[1]);
    csa(twos_b, ones, ones, d[2], d[3]);
    csa(fours_a, twos, twos, twos_a, twos_b);
    csa(twos_a, ones, ones, d[4], d[5]);
    csa(twos_b, ones, ones, d[6], d[7]);
    csa(fours_b, twos, twos, twos_a, twos_b);
    csa(eights_a, fours, fours, fours_a, fours_b);
    csa(twos_a, ones, ones, d[8], d[9]);
    csa(twos_b, ones, ones, d[10], d[11]);
    csa(fours_a, twos, twos, twos_a, twos_b);
    csa(twos_a, ones, ones, d[12], d[13]);
    csa(twos_b, ones, ones, d[14], d[15]);
    csa(fours_b, twos, twos, twos_a, twos_b);
    csa(eights_b, fours, fours, fours_a, fours_b);
    csa(sixteens, eights, eights, eights_a, eights_b);
    total = add_u64(total, count_u64(sixteens));
  }

  PopCount finish() const noexcept {
    Wide<L> t = shift_left_u64(total, 4);
    t = add_u64(t, shift_left_u64(count_u64(eights), 3));
    t = add_u64(t, shift_left_u64(count_u64(fours), 2));
    t = add_u64(t, shift_left_u64(count_u64(twos), 1));
    t = add_u64(t, count_u64(ones));
    return horizontal_sum(t);
  }
};

template <std::size_t L, class Tree, Combine Op>
PopCount harley_seal(const Word* a, const Word* b, std::size_t n) noexcept {
  const std::size_t body = n / (16 * L) * (16 * L);
  Tree tree{};
  Wide<L> d[16];
  for (std::size_t i = 0; i < body; i += 16 * L) {
    for (std::size_t k = 0; k < 16; ++k) d[k] = load_wide<L, Op>(a + i, b + i, k);
    tree.add16(d);
  }
  return tree.finish() + wwg_tail(WordSource<Op>{a, b}, body, n);
}

using Tree256 = HsTree<4, csa_logic<4>>;
using Tree512 = HsTree<8, csa_ternary<8>>;

PopCount dispatch_op(Combine op, const Word* a, const Word* b, std::size_t n,
                     PopCount (*none)(const Word*, const Word*, std::size_t) noexcept,
                     PopCount (*and_)(const Word*, const Word*, std::size_t) noexcept,
                     PopCount (*or_)(const Word*, const Word*, std::size_t) noexcept) {
  switch (op) {
    case Combine::and_words: return and_(a, b, n);
    case Combine::or_words: return or_(a, b, n);
    case Combine::none: break;
  }
  return none(a, b, n);
}

template <Combine Op>
PopCount mula256_op(const Word* a, const Word* b, std::size_t n) noexcept {
  return mula_array<4, Op>(a, b, n, 16);
}

template <Combine Op>
PopCount hs256_op(const Word* a, const Word* b, std::size_t n) noexcept {
  return harley_seal<4, Tree256, Op>(a, b, n);
}

}  // namespace

PopCount mula128_portable(const Word* p, std::size_t n) noexcept {
  return mula_array<2, Combine::none>(p, nullptr, n, 8);
}

PopCount avx512_hs_portable(const Word* p, std::size_t n) noexcept {
  return harley_seal<8, Tree512, Combine::none>(p, nullptr, n);
}

WideCsa<4> csa256_portable(const Vec256& a, const Vec256& b, const Vec256& c) noexcept {
  return csa_logic(a, b, c);
}

WideCsa<8> csa512_portable(const Vec512& a, const Vec512& b, const Vec512& c) noexcept {
  return csa_ternary(a, b, c);
}

PopCount mula256_fused_portable(Combine op, const Word* a, const Word* b, std::size_t n) {
  return dispatch_op(op, a, b, n, mula256_op<Combine::none>, mula256_op<Combine::and_words>,
                     mula256_op<Combine::or_words>);
}

PopCount avx2_hs_fused_portable(Combine op, const Word* a, const Word* b, std::size_t n) {
  return dispatch_op(op, a, b, n, hs256_op<Combine::none>, hs256_op<Combine::and_words>,
                     hs256_op<Combine::or_words>);
}

PairCounts jaccard_mula256_portable(const Word* a, const Word* b, std::size_t n) {
  const std::size_t vecs = n / 4;
  Vec256 total_and, total_or;
  for (std::size_t i = 0; i < vecs;) {
    Vec256 acc_and, acc_or;
    const std::size_t end = std::min(vecs, i + 16);
    for (; i < end; ++i) {
      const Vec256 va = Vec256::load(a + 4 * i);
      const Vec256 vb = Vec256::load(b + 4 * i);
      acc_and = add_u8(acc_and, count_bytes(bit_and(va, vb)));
      acc_or = add_u8(acc_or, count_bytes(bit_or(va, vb)));
    }
    total_and = add_u64(total_and, sum_bytes_u64(acc_and));
    total_or = add_u64(total_or, sum_bytes_u64(acc_or));
  }
  return {horizontal_sum(total_and) +
              wwg_tail(WordSource<Combine::and_words>{a, b}, vecs * 4, n),
          horizontal_sum(total_or) +
              wwg_tail(WordSource<Combine::or_words>{a, b}, vecs * 4, n)};
}

PairCounts jaccard_hs_portable(const Word* a, const Word* b, std::size_t n) {
  const std::size_t body = n / 64 * 64;
  Tree256 tree_and{}, tree_or{};
  Vec256 d_and[16], d_or[16];
  for (std::size_t i = 0; i < body; i += 64) {
    for (std::size_t k = 0; k < 16; ++k) {
      const Vec256 va = Vec256::load(a + i + 4 * k);
      const Vec256 vb = Vec256::load(b + i + 4 * k);
      d_and[k] = bit_and(va, vb);
      d_or[k] = bit_or(va, vb);
    }
    tree_and.add16(d_and);
    tree_or.add16(d_or);
  }
  return {tree_and.finish() + wwg_tail(WordSource<Combine::and_words>{a, b}, body, n),
          tree_or.finish() + wwg_tail(WordSource<Combine::or_words>{a, b}, body, n)};
}

}  // namespace hamming::detail
