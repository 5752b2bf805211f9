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

#include "hamming/vector_kernels.hpp"

#include "fused.hpp"
#include "hamming/errors.hpp"
#include "portable_kernels.hpp"

namespace hamming {

namespace {

constexpr CpuFeatureSet kNeedsSsse3{false, true, false, false};
constexpr CpuFeatureSet kNeeds256{false, false, true, false};
constexpr CpuFeatureSet kNeeds512{false, false, false, true};

}  // namespace

bool uses_native(SimdPath path, const CpuFeatureSet& required) {
  switch (path) {
    case SimdPath::portable:
      return false;
    case SimdPath::native:
      if (!detect_cpu_features().contains(required)) {
        throw UnsupportedFeature(required.to_string());
      }
      return true;
    case SimdPath::automatic:
      break;
  }
  return detect_cpu_features().contains(required);
}

Vec128 mula_count_bytes_128(const Vec128& v, SimdPath path) {
  return uses_native(path, kNeedsSsse3) ? detail::count_bytes_128_native(v)
                                        : portable::count_bytes(v);
}

PopCount mula_array_128(WordBlock block, SimdPath path) {
  return uses_native(path, kNeedsSsse3)
             ? detail::mula128_native(block.data(), block.size())
             : detail::mula128_portable(block.data(), block.size());
}

Vec256 mula_count_bytes_256(const Vec256& v, SimdPath path) {
  return uses_native(path, kNeeds256) ? detail::count_bytes_256_native(v)
                                      : portable::count_bytes(v);
}

Vec256 mula_count64_256(const Vec256& v, SimdPath path) {
  return uses_native(path, kNeeds256) ? detail::count64_256_native(v)
                                      : portable::count_u64(v);
}

PopCount mula_array_256(WordBlock block, SimdPath path) {
  const auto op = detail::Combine::none;
  return uses_native(path, kNeeds256)
             ? detail::mula256_fused_native(op, block.data(), nullptr, block.size())
             : detail::mula256_fused_portable(op, block.data(), nullptr, block.size());
}

WideCsa<4> csa256(const Vec256& a, const Vec256& b, const Vec256& c, SimdPath path) {
  return uses_native(path, kNeeds256) ? detail::csa256_native(a, b, c)
                                      : detail::csa256_portable(a, b, c);
}

PopCount avx2_harley_seal(WordBlock block, SimdPath path) {
  const auto op = detail::Combine::none;
  return uses_native(path, kNeeds256)
             ? detail::avx2_hs_fused_native(op, block.data(), nullptr, block.size())
             : detail::avx2_hs_fused_portable(op, block.data(), nullptr, block.size());
}

WideCsa<8> csa512(const Vec512& a, const Vec512& b, const Vec512& c, SimdPath path) {
  return uses_native(path, kNeeds512) ? detail::csa512_native(a, b, c)
                                      : detail::csa512_portable(a, b, c);
}

Vec512 mula_count64_512(const Vec512& v, SimdPath path) {
  return uses_native(path, kNeeds512) ? detail::count64_512_native(v)
                                      : portable::count_u64(v);
}

PopCount avx512_harley_seal(WordBlock block, SimdPath path) {
  return uses_native(path, kNeeds512)
             ? detail::avx512_hs_native(block.data(), block.size())
             : detail::avx512_hs_portable(block.data(), block.size());
}

}  // namespace hamming
