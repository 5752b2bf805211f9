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

#include "hamming/cpu_features.hpp"

namespace hamming {

namespace {

CpuFeatureSet query_processor() noexcept {
  CpuFeatureSet f;
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  // libgcc also checks XCR0, so AVX flags are only reported when the OS saves
  // the wider registers.
  f.has_popcnt = __builtin_cpu_supports("popcnt");
  f.has_ssse3_shuffle = __builtin_cpu_supports("ssse3");
  f.has_256bit = __builtin_cpu_supports("avx2");
  f.has_512bit_ternlog =
      __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512bw");
#endif
  return f;
}

}  // namespace

const CpuFeatureSet& detect_cpu_features() noexcept {
  static const CpuFeatureSet features = query_processor();
  return features;
}

std::string CpuFeatureSet::to_string() const {
  std::string s;
  auto add = [&s](bool on, const char* name) {
    if (on) {
      if (!s.empty()) s += ',';
      s += name;
    }
  };
  add(has_popcnt, "popcnt");
  add(has_ssse3_shuffle, "ssse3");
  add(has_256bit, "avx2");
  add(has_512bit_ternlog, "avx512");
  return s.empty() ? "baseline" : s;
}

}  // namespace hamming
