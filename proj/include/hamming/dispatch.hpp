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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamming/core.hpp"
#include "hamming/cpu_features.hpp"
#include "hamming/similarity.hpp"
#include "hamming/thresholds.hpp"

namespace hamming {

enum class KernelKind { count, jaccard };

using CountFn = PopCount (*)(WordBlock);
using JaccardFn = SimilarityResult (*)(WordBlock, WordBlock);

/// Never chosen automatically; reachable only by name.
inline constexpr std::size_t kOverrideOnly = std::numeric_limits<std::size_t>::max();

/// One registered kernel. Exactly one of `count` / `jaccard` is set,
/// according to `kind`.
struct KernelDescriptor {
  std::string name;
  CpuFeatureSet required_features;
  std::size_t min_profitable_bytes = kOverrideOnly;
  KernelKind kind = KernelKind::count;
  CountFn count = nullptr;
  JaccardFn jaccard = nullptr;
};

/// Every kernel the library knows, most preferred first. Auto-eligible
/// kernels carry their crossover sizes from `thresholds`; the rest are
/// kOverrideOnly.
std::vector<KernelDescriptor> kernel_catalog(const DispatchThresholds& thresholds = {});

/// The catalog filtered to kernels runnable with `features`, keeping the
/// preference order.
std::vector<KernelDescriptor> register_kernels(const CpuFeatureSet& features,
                                               const DispatchThresholds& thresholds = {});

/// Environment variables naming a kernel that count_auto / jaccard_auto must
/// use instead of their own choice.
inline constexpr const char* kCountKernelEnv = "HAMMING_COUNT_KERNEL";
inline constexpr const char* kJaccardKernelEnv = "HAMMING_JACCARD_KERNEL";

/// Picks a kernel per call from the runnable set and the input size.
///
/// Immutable after construction, so one instance may be shared by any number
/// of threads.
class Dispatcher {
 public:
  struct Overrides {
    std::optional<std::string> count;
    std::optional<std::string> jaccard;
  };

  explicit Dispatcher(const CpuFeatureSet& features, const DispatchThresholds& thresholds = {},
                      Overrides overrides = {});

  /// Uses `catalog` instead of kernel_catalog(); kernels whose requirements
  /// are not met by `features` are dropped.
  Dispatcher(const CpuFeatureSet& features, std::vector<KernelDescriptor> catalog,
             Overrides overrides = {});

  /// Detected CPU features, default thresholds, overrides from the
  /// environment. Built once.
  static const Dispatcher& global();

  const CpuFeatureSet& features() const noexcept { return features_; }
  std::span<const KernelDescriptor> kernels() const noexcept { return kernels_; }

  /// Throws UnsupportedKernel for unknown names, for kernels that cannot run
  /// here and for a kind mismatch.
  const KernelDescriptor& find(std::string_view name, KernelKind kind) const;

  /// The kernel count() would run for an input of `bytes` bytes.
  const KernelDescriptor& select_count(std::size_t bytes) const;
  const KernelDescriptor& select_jaccard(std::size_t bytes) const;

  PopCount count(WordBlock block, std::optional<std::string_view> kernel = std::nullopt) const;
  SimilarityResult jaccard(WordBlock a, WordBlock b,
                           std::optional<std::string_view> kernel = std::nullopt) const;

 private:
  const KernelDescriptor& select(KernelKind kind, std::size_t bytes) const;

  CpuFeatureSet features_;
  std::vector<KernelDescriptor> kernels_;
  const KernelDescriptor* count_override_ = nullptr;
  const KernelDescriptor* jaccard_override_ = nullptr;
};

/// Oracle-exact count through Dispatcher::global(). `kernel` forces a kernel
/// by name.
PopCount count_auto(WordBlock block, std::optional<std::string_view> kernel = std::nullopt);

/// Throws LengthMismatch for unequal lengths.
SimilarityResult jaccard_auto(WordBlock a, WordBlock b,
                              std::optional<std::string_view> kernel = std::nullopt);

}  // namespace hamming
