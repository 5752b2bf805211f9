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
#include <cstdint>

#include "hamming/core.hpp"

namespace hamming {

/// Result of a bitwise carry-save add of three words. At every bit position
/// i: 2 * high_i + low_i == a_i + b_i + c_i.
struct CsaPair {
  Word high = 0;
  Word low = 0;

  constexpr bool operator==(const CsaPair&) const = default;
};

/// Carry-save adder in five logical operations (two XOR, two AND, one OR).
constexpr CsaPair csa64(Word a, Word b, Word c) noexcept {
  const Word u = a ^ b;
  return {(a & b) | (u & c), u ^ c};
}

// Single-word counters.

/// Six-level mask-and-add tree of adders.
PopCount naive_tree(Word w) noexcept;
/// Wilkes-Wheeler-Gill: subtract trick, nibble fold, then a multiply that
/// sums the eight byte counts into the top byte.
PopCount wwg(Word w) noexcept;
/// Clears the lowest set bit until the word is zero. Always counts ones; a
/// caller expecting dense words may count ~w instead.
PopCount wegner(Word w) noexcept;

// Lookup tables, filled from the oracle rather than embedded as literals.

using ByteTable = std::array<std::uint8_t, 256>;
using ShortTable = std::array<std::uint8_t, 65536>;

struct PopcountTables {
  ByteTable by_byte{};
  ShortTable by_short{};
};

PopcountTables build_tables();

/// Process-wide tables, built once on first use (thread-safe).
const PopcountTables& popcount_tables();

// Array kernels. All return the exact population count of the block.

PopCount naive_tree_count(WordBlock block) noexcept;
PopCount wwg_count(WordBlock block) noexcept;
PopCount wegner_count(WordBlock block) noexcept;

/// Eight byte lookups per word.
PopCount table8_count(WordBlock block);
PopCount table8_count(WordBlock block, const ByteTable& table) noexcept;
/// Four 16-bit lookups per word.
PopCount table16_count(WordBlock block);
PopCount table16_count(WordBlock block, const ShortTable& table) noexcept;

/// Lauradoux's merged trees over groups of 12 words. Words past the last
/// full group are counted with wwg.
PopCount lauradoux(WordBlock block) noexcept;

/// Harley-Seal over blocks of 16 words (15 CSAs per block, one wwg per
/// block); leftover words counted with wwg.
PopCount harley_seal64(WordBlock block) noexcept;

/// Native popcnt instruction per word. Throws UnsupportedFeature when the
/// processor lacks it.
PopCount hw_popcnt(WordBlock block);

}  // namespace hamming
