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

#include "hamming/dispatch.hpp"

#include <algorithm>
#include <cstdlib>

#include "hamming/errors.hpp"
#include "hamming/scalar_kernels.hpp"
#include "hamming/vector_kernels.hpp"

namespace hamming {

namespace {

constexpr CpuFeatureSet kNone{};
constexpr CpuFeatureSet kPopcnt{true, false, false, false};
constexpr CpuFeatureSet kSsse3{false, true, false, false};
constexpr CpuFeatureSet k256{false, false, true, false};
constexpr CpuFeatureSet k512{false, false, false, true};

// Adapters giving every kernel the CountFn / JaccardFn shape. The native
// variants are only registered behind their feature requirement.
PopCount mula128_native(WordBlock b) { return mula_array_128(b, SimdPath::native); }
PopCount mula128_portable(WordBlock b) { return mula_array_128(b, SimdPath::portable); }
PopCount mula256_native(WordBlock b) { return mula_array_256(b, SimdPath::native); }
PopCount mula256_portable(WordBlock b) { return mula_array_256(b, SimdPath::portable); }
PopCount avx2_hs_native(WordBlock b) { return avx2_harley_seal(b, SimdPath::native); }
PopCount avx2_hs_portable(WordBlock b) { return avx2_harley_seal(b, SimdPath::portable); }
PopCount avx512_hs_native(WordBlock b) { return avx512_harley_seal(b, SimdPath::native); }
PopCount avx512_hs_portable(WordBlock b) { return avx512_harley_seal(b, SimdPath::portable); }
PopCount table8(WordBlock b) { return table8_count(b); }
PopCount table16(WordBlock b) { return table16_count(b); }

SimilarityResult jaccard_mula_native(WordBlock a, WordBlock b) {
  return jaccard_mula256(a, b, SimdPath::native);
}
SimilarityResult jaccard_mula_portable(WordBlock a, WordBlock b) {
  return jaccard_mula256(a, b, SimdPath::portable);
}
SimilarityResult jaccard_hs_native(WordBlock a, WordBlock b) {
  return jaccard_hs(a, b, SimdPath::native);
}
SimilarityResult jaccard_hs_portable(WordBlock a, WordBlock b) {
  return jaccard_hs(a, b, SimdPath::portable);
}

KernelDescriptor counter(std::string name, CpuFeatureSet req, std::size_t min_bytes,
                         CountFn fn) {
  return {std::move(name), req, min_bytes, KernelKind::count, fn, nullptr};
}

KernelDescriptor jaccarder(std::string name, CpuFeatureSet req, std::size_t min_bytes,
                           JaccardFn fn) {
  return {std::move(name), req, min_bytes, KernelKind::jaccard, nullptr, fn};
}

std::optional<std::string> env_value(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace

std::vector<KernelDescriptor> kernel_catalog(const DispatchThresholds& t) {
  return {
      // Counting, most preferred first.
      counter("avx512_hs", k512, t.hs_min_bytes, avx512_hs_native),
      counter("avx2_hs", k256, t.hs_min_bytes, avx2_hs_native),
      counter("mula256", k256, t.mula_min_bytes, mula256_native),
      counter("popcnt", kPopcnt, 0, hw_popcnt),
      counter("mula128", kSsse3, t.mula_min_bytes, mula128_native),
      counter("harley_seal", kNone, 0, harley_seal64),
      counter("lauradoux", kNone, kOverrideOnly, lauradoux),
      counter("wwg", kNone, kOverrideOnly, wwg_count),
      counter("naive_tree", kNone, kOverrideOnly, naive_tree_count),
      counter("wegner", kNone, kOverrideOnly, wegner_count),
      counter("table8", kNone, kOverrideOnly, table8),
      counter("table16", kNone, kOverrideOnly, table16),
      counter("mula128_portable", kNone, kOverrideOnly, mula128_portable),
      counter("mula256_portable", kNone, kOverrideOnly, mula256_portable),
      counter("avx2_hs_portable", kNone, kOverrideOnly, avx2_hs_portable),
      counter("avx512_hs_portable", kNone, kOverrideOnly, avx512_hs_portable),
      // Jaccard.
      jaccarder("jaccard_avx2_hs", k256, t.jaccard_hs_min_bytes, jaccard_hs_native),
      jaccarder("jaccard_mula256", k256, 0, jaccard_mula_native),
      jaccarder("jaccard_popcnt", kPopcnt, 0, jaccard_popcnt),
      jaccarder("jaccard_scalar", kNone, 0, jaccard_scalar),
      jaccarder("jaccard_avx2_hs_portable", kNone, kOverrideOnly, jaccard_hs_portable),
      jaccarder("jaccard_mula256_portable", kNone, kOverrideOnly, jaccard_mula_portable),
  };
}

std::vector<KernelDescriptor> register_kernels(const CpuFeatureSet& features,
                                               const DispatchThresholds& thresholds) {
  std::vector<KernelDescriptor> all = kernel_catalog(thresholds);
  std::erase_if(all, [&](const KernelDescriptor& k) {
    return !features.contains(k.required_features);
  });
  return all;
}

Dispatcher::Dispatcher(const CpuFeatureSet& features, const DispatchThresholds& thresholds,
                       Overrides overrides)
    : Dispatcher(features, kernel_catalog(thresholds), std::move(overrides)) {}

Dispatcher::Dispatcher(const CpuFeatureSet& features, std::vector<KernelDescriptor> catalog,
                       Overrides overrides)
    : features_(features), kernels_(std::move(catalog)) {
  std::erase_if(kernels_, [&](const KernelDescriptor& k) {
    return !features_.contains(k.required_features);
  });
  if (overrides.count) count_override_ = &find(*overrides.count, KernelKind::count);
  if (overrides.jaccard) jaccard_override_ = &find(*overrides.jaccard, KernelKind::jaccard);
}

const Dispatcher& Dispatcher::global() {
  static const Dispatcher instance(detect_cpu_features(), DispatchThresholds{},
                                   Overrides{env_value(kCountKernelEnv),
                                             env_value(kJaccardKernelEnv)});
  return instance;
}

const KernelDescriptor& Dispatcher::find(std::string_view name, KernelKind kind) const {
  const auto it = std::find_if(kernels_.begin(), kernels_.end(), [&](const KernelDescriptor& k) {
    return k.name == name && k.kind == kind;
  });
  if (it == kernels_.end()) {
    throw UnsupportedKernel(std::string(name));
  }
  return *it;
}

const KernelDescriptor& Dispatcher::select(KernelKind kind, std::size_t bytes) const {
  for (const KernelDescriptor& k : kernels_) {
    if (k.kind == kind && k.min_profitable_bytes <= bytes) {
      return k;
    }
  }
  // Baseline kernels have no requirements and a zero threshold, so this is
  // only reachable with a custom catalog.
  throw UnsupportedKernel("no eligible kernel");
}

const KernelDescriptor& Dispatcher::select_count(std::size_t bytes) const {
  return count_override_ != nullptr ? *count_override_ : select(KernelKind::count, bytes);
}

const KernelDescriptor& Dispatcher::select_jaccard(std::size_t bytes) const {
  return jaccard_override_ != nullptr ? *jaccard_override_ : select(KernelKind::jaccard, bytes);
}

PopCount Dispatcher::count(WordBlock block, std::optional<std::string_view> kernel) const {
  const KernelDescriptor& k =
      kernel ? find(*kernel, KernelKind::count) : select_count(block.size_bytes());
  return k.count(block);
}

SimilarityResult Dispatcher::jaccard(WordBlock a, WordBlock b,
                                     std::optional<std::string_view> kernel) const {
  if (a.size() != b.size()) {
    throw LengthMismatch(a.size(), b.size());
  }
  const KernelDescriptor& k =
      kernel ? find(*kernel, KernelKind::jaccard) : select_jaccard(a.size_bytes());
  return k.jaccard(a, b);
}

PopCount count_auto(WordBlock block, std::optional<std::string_view> kernel) {
  return Dispatcher::global().count(block, kernel);
}

SimilarityResult jaccard_auto(WordBlock a, WordBlock b, std::optional<std::string_view> kernel) {
  return Dispatcher::global().jaccard(a, b, kernel);
}

}  // namespace hamming
