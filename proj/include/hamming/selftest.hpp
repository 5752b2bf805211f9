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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamming/cpu_features.hpp"
#include "hamming/scalar_kernels.hpp"

namespace hamming {

struct SelftestOptions {
  std::uint64_t seed = 0x5eed2016ULL;
  /// Random blocks per kernel; lengths are drawn from [0, max_words].
  std::size_t blocks = 64;
  std::size_t max_words = 2048;
  CpuFeatureSet features = detect_cpu_features();
  /// Fault injection: run table8 / table16 against these tables instead of
  /// the built-in ones.
  std::optional<ByteTable> byte_table;
  std::optional<ShortTable> short_table;
};

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct SelftestReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept {
    for (const CheckResult& c : checks) {
      if (c.status == CheckStatus::fail) return false;
    }
    return true;
  }
};

/// Differential suite: every kernel against the oracle over random lengths
/// (always including 0 and max_words), exhaustive table checks and the
/// carry-save adder properties. Kernels whose features are absent are
/// reported as skipped.
SelftestReport run_selftest(const SelftestOptions& options = {});

/// One line per check ("PASS name", "FAIL name: detail", "SKIP name (...)")
/// and a summary line.
std::string format_selftest(const SelftestReport& report);

}  // namespace hamming
