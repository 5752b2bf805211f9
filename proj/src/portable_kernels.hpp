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

#include "hamming/core.hpp"
#include "hamming/wide.hpp"

namespace hamming::detail {

PopCount mula128_portable(const Word* p, std::size_t n) noexcept;
PopCount avx512_hs_portable(const Word* p, std::size_t n) noexcept;
WideCsa<4> csa256_portable(const Vec256& a, const Vec256& b, const Vec256& c) noexcept;
WideCsa<8> csa512_portable(const Vec512& a, const Vec512& b, const Vec512& c) noexcept;

// Native x86 entry points; callers check the CPU features first.
PopCount mula128_native(const Word* p, std::size_t n) noexcept;
Vec128 count_bytes_128_native(const Vec128& v) noexcept;
Vec256 count_bytes_256_native(const Vec256& v) noexcept;
Vec256 count64_256_native(const Vec256& v) noexcept;
WideCsa<4> csa256_native(const Vec256& a, const Vec256& b, const Vec256& c) noexcept;
WideCsa<8> csa512_native(const Vec512& a, const Vec512& b, const Vec512& c) noexcept;
Vec512 count64_512_native(const Vec512& v) noexcept;
PopCount avx512_hs_native(const Word* p, std::size_t n) noexcept;

}  // namespace hamming::detail
