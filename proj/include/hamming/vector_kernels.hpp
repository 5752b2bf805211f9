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
#include "hamming/cpu_features.hpp"
#include "hamming/wide.hpp"

namespace hamming {

/// Which implementation a vector operation runs.
///
/// `automatic` takes the native instructions when the processor has them and
/// the scalar emulation otherwise. `native` throws UnsupportedFeature when
/// the instructions are missing. `portable` always emulates. Every path
/// returns identical results.
enum class SimdPath { automatic, native, portable };

// 128-bit (SSSE3) Muła.

/// Sixteen per-byte population counts: two pshufb, two pand, one paddb and
/// one psrlw.
Vec128 mula_count_bytes_128(const Vec128& v, SimdPath path = SimdPath::automatic);

/// Accumulates eight byte-count vectors (128 B) with byte adds before each
/// psadbw reduction. Words that do not fill a 16-byte vector are counted with
/// wwg.
PopCount mula_array_128(WordBlock block, SimdPath path = SimdPath::automatic);

// 256-bit (AVX2) kernels.

Vec256 mula_count_bytes_256(const Vec256& v, SimdPath path = SimdPath::automatic);

/// Four 64-bit lane counts, each in [0, 64].
Vec256 mula_count64_256(const Vec256& v, SimdPath path = SimdPath::automatic);

/// Sixteen byte-count rounds (512 B) per psadbw; a short final block uses
/// fewer rounds, and fewer than four leftover words go to wwg.
PopCount mula_array_256(WordBlock block, SimdPath path = SimdPath::automatic);

WideCsa<4> csa256(const Vec256& a, const Vec256& b, const Vec256& c,
                  SimdPath path = SimdPath::automatic);

/// Harley-Seal over sixteen 256-bit vectors (512 B) per iteration. Input past
/// the last full 512 B block is counted with wwg.
PopCount avx2_harley_seal(WordBlock block, SimdPath path = SimdPath::automatic);

// 512-bit (AVX-512F/BW) kernels.

/// Carry-save adder in two ternary-logic operations: selector 0x96 (XOR) for
/// the low word and 0xe8 (majority) for the high word.
WideCsa<8> csa512(const Vec512& a, const Vec512& b, const Vec512& c,
                  SimdPath path = SimdPath::automatic);

/// Eight 64-bit lane counts by nibble lookup widened to 512 bits.
Vec512 mula_count64_512(const Vec512& v, SimdPath path = SimdPath::automatic);

/// Harley-Seal over sixteen 512-bit vectors (1 kB) per iteration; remainder
/// counted with wwg.
PopCount avx512_harley_seal(WordBlock block, SimdPath path = SimdPath::automatic);

/// True when `path` would run native instructions that need `required`.
bool uses_native(SimdPath path, const CpuFeatureSet& required);

}  // namespace hamming
