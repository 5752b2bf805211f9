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

#include <array>
#include <cstddef>
#include <cstdint>

#include "hamming/core.hpp"

namespace hamming {

/// A SIMD register image: `Lanes` 64-bit words, with byte i of the register
/// being byte (i % 8) of word (i / 8), least significant first. This is the
/// x86 register layout, independent of host byte order.
template <std::size_t Lanes>
struct Wide {
  static constexpr std::size_t kLanes = Lanes;
  static constexpr std::size_t kBytes = Lanes * 8;

  std::array<Word, Lanes> words{};

  static Wide load(const Word* p) noexcept {
    Wide v;
    for (std::size_t i = 0; i < Lanes; ++i) v.words[i] = p[i];
    return v;
  }

  static Wide splat_word(Word w) noexcept {
    Wide v;
    v.words.fill(w);
    return v;
  }

  static Wide splat_byte(std::uint8_t b) noexcept {
    return splat_word(0x0101010101010101ULL * b);
  }

  std::uint8_t byte(std::size_t i) const noexcept {
    return static_cast<std::uint8_t>(words[i / 8] >> (8 * (i % 8)));
  }

  void set_byte(std::size_t i, std::uint8_t value) noexcept {
    const unsigned shift = 8 * (i % 8);
    Word& w = words[i / 8];
    w = (w & ~(Word{0xFF} << shift)) | (Word{value} << shift);
  }

  bool operator==(const Wide&) const = default;
};

using Vec128 = Wide<2>;
using Vec256 = Wide<4>;
using Vec512 = Wide<8>;

template <std::size_t Lanes>
struct WideCsa {
  Wide<Lanes> high;
  Wide<Lanes> low;

  bool operator==(const WideCsa&) const = default;
};

/// Population counts of the sixteen 4-bit values, replicated per 16-byte lane
/// by the kernels.
inline constexpr std::array<std::uint8_t, 16> kNibbleLut = {0, 1, 1, 2, 1, 2, 2, 3,
                                                            1, 2, 2, 3, 2, 3, 3, 4};

/// Scalar emulation of the vector instructions used by the kernels. Each
/// function reproduces the instruction's semantics on every lane.
namespace portable {

template <std::size_t L>
Wide<L> bit_and(const Wide<L>& a, const Wide<L>& b) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < L; ++i) r.words[i] = a.words[i] & b.words[i];
  return r;
}

template <std::size_t L>
Wide<L> bit_or(const Wide<L>& a, const Wide<L>& b) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < L; ++i) r.words[i] = a.words[i] | b.words[i];
  return r;
}

template <std::size_t L>
Wide<L> bit_xor(const Wide<L>& a, const Wide<L>& b) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < L; ++i) r.words[i] = a.words[i] ^ b.words[i];
  return r;
}

/// pshufb: within each 16-byte lane, out[i] = table[idx[i] & 15], or 0 when
/// the index byte has its top bit set.
template <std::size_t L>
Wide<L> shuffle_bytes(const Wide<L>& table, const Wide<L>& idx) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < Wide<L>::kBytes; ++i) {
    const std::uint8_t k = idx.byte(i);
    const std::size_t lane_base = i - i % 16;
    r.set_byte(i, (k & 0x80) ? 0 : table.byte(lane_base + (k & 0x0F)));
  }
  return r;
}

/// psrlw: logical right shift of every 16-bit element.
template <std::size_t L>
Wide<L> shift_right_u16(const Wide<L>& v, unsigned count) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < L; ++i) {
    Word out = 0;
    for (unsigned e = 0; e < 4; ++e) {
      const Word elem = (v.words[i] >> (16 * e)) & 0xFFFF;
      out |= (elem >> count) << (16 * e);
    }
    r.words[i] = out;
  }
  return r;
}

/// paddb: wrapping add of every byte.
template <std::size_t L>
Wide<L> add_u8(const Wide<L>& a, const Wide<L>& b) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < Wide<L>::kBytes; ++i) {
    r.set_byte(i, static_cast<std::uint8_t>(a.byte(i) + b.byte(i)));
  }
  return r;
}

/// paddq: wrapping add of every 64-bit element.
template <std::size_t L>
Wide<L> add_u64(const Wide<L>& a, const Wide<L>& b) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < L; ++i) r.words[i] = a.words[i] + b.words[i];
  return r;
}

/// psllq by an immediate.
template <std::size_t L>
Wide<L> shift_left_u64(const Wide<L>& v, unsigned count) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < L; ++i) r.words[i] = v.words[i] << count;
  return r;
}

/// psadbw against zero: each 64-bit element becomes the sum of its 8 bytes.
template <std::size_t L>
Wide<L> sum_bytes_u64(const Wide<L>& v) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < L; ++i) {
    Word s = 0;
    for (unsigned k = 0; k < 8; ++k) s += (v.words[i] >> (8 * k)) & 0xFF;
    r.words[i] = s;
  }
  return r;
}

/// vpternlog on one word: output bit = bit (4*a + 2*b + c) of `imm`.
constexpr Word ternary_logic(Word a, Word b, Word c, std::uint8_t imm) noexcept {
  Word r = 0;
  for (unsigned idx = 0; idx < 8; ++idx) {
    if ((imm >> idx) & 1U) {
      const Word ma = (idx & 4U) ? a : ~a;
      const Word mb = (idx & 2U) ? b : ~b;
      const Word mc = (idx & 1U) ? c : ~c;
      r |= ma & mb & mc;
    }
  }
  return r;
}

template <std::size_t L>
Wide<L> ternary_logic(const Wide<L>& a, const Wide<L>& b, const Wide<L>& c,
                      std::uint8_t imm) noexcept {
  Wide<L> r;
  for (std::size_t i = 0; i < L; ++i) {
    r.words[i] = ternary_logic(a.words[i], b.words[i], c.words[i], imm);
  }
  return r;
}

template <std::size_t L>
Word horizontal_sum(const Wide<L>& v) noexcept {
  Word s = 0;
  for (Word w : v.words) s += w;
  return s;
}

/// Muła nibble lookup: byte i of the result is the popcount of byte i.
template <std::size_t L>
Wide<L> count_bytes(const Wide<L>& v) noexcept {
  Wide<L> lookup;
  for (std::size_t i = 0; i < Wide<L>::kBytes; ++i) lookup.set_byte(i, kNibbleLut[i % 16]);
  const Wide<L> low_mask = Wide<L>::splat_byte(0x0F);
  const Wide<L> lo = bit_and(v, low_mask);
  const Wide<L> hi = bit_and(shift_right_u16(v, 4), low_mask);
  return add_u8(shuffle_bytes(lookup, lo), shuffle_bytes(lookup, hi));
}

/// Per-64-bit-lane popcount: nibble lookup followed by psadbw.
template <std::size_t L>
Wide<L> count_u64(const Wide<L>& v) noexcept {
  return sum_bytes_u64(count_bytes(v));
}

}  // namespace portable

}  // namespace hamming
