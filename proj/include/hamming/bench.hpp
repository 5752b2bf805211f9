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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamming/dispatch.hpp"

namespace hamming {

enum class TimerKind { cycle_counter, wall_clock_ns };
enum class OutputFormat { csv, markdown };
enum class BenchMode { count, jaccard };

std::string_view to_string(TimerKind kind) noexcept;

/// A record is stable when mean / min stays within this ratio.
inline constexpr double kStabilityBound = 1.01;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2016ULL;
inline constexpr std::size_t kDefaultRepeats = 500;

/// Timing of one kernel at one input size. For Jaccard kernels "word" means
/// a pair of 64-bit words, one from each input.
struct BenchmarkRecord {
  std::string kernel;
  std::size_t input_bytes = 0;
  std::size_t repeats = 0;
  double min_cycles_per_word = 0.0;
  double mean_cycles_per_word = 0.0;
  TimerKind timer_kind = TimerKind::cycle_counter;
  bool stable = true;

  bool operator==(const BenchmarkRecord&) const = default;
};

/// A record together with the value the kernel returned inside the timed
/// loop (the intersection count for Jaccard kernels).
struct Measurement {
  BenchmarkRecord record;
  PopCount value = 0;
  PopCount union_value = 0;
};

/// 256 B, 512 B, ... 64 kB.
std::vector<std::size_t> default_bench_sizes();

struct BenchConfig {
  std::vector<std::size_t> sizes = default_bench_sizes();
  std::size_t repeats = kDefaultRepeats;
  /// Empty: every runnable kernel of `mode` except the portable emulations.
  std::vector<std::string> kernels;
  BenchMode mode = BenchMode::count;
  OutputFormat format = OutputFormat::markdown;
  std::uint64_t seed = kDefaultSeed;
};

/// Times `repeats` samples of `kernel` on one randomized buffer of `bytes`
/// bytes (rounded up to whole words) after one untimed warm-up sample.
///
/// Each sample runs the kernel enough times back to back to cover at least
/// 16k words, which keeps timer overhead out of small sizes. Per-word cost is
/// the sample time divided by (calls * words). Throws UnsupportedKernel.
Measurement measure_detailed(const Dispatcher& dispatcher, std::string_view kernel,
                             std::size_t bytes, std::size_t repeats,
                             std::uint64_t seed = kDefaultSeed);

BenchmarkRecord measure(const Dispatcher& dispatcher, std::string_view kernel,
                        std::size_t bytes, std::size_t repeats,
                        std::uint64_t seed = kDefaultSeed);

/// Kernels run_bench uses when `config.kernels` is empty.
std::vector<std::string> default_bench_kernels(const Dispatcher& dispatcher, BenchMode mode);

/// Size-major list of records: for each size, one record per kernel.
std::vector<BenchmarkRecord> run_bench(const BenchConfig& config, const Dispatcher& dispatcher);

/// Header line plus one line per record; columns
/// kernel,bytes,repeats,min_cycles_per_word,mean_cycles_per_word,timer_kind,stable.
std::string format_csv(std::span<const BenchmarkRecord> records);

/// Inverse of format_csv. Throws std::invalid_argument on malformed input.
std::vector<BenchmarkRecord> parse_csv(std::string_view text);

/// Rows are sizes, columns kernels; the fastest cell of each row is bold and
/// unstable cells carry a `*`.
std::string format_markdown(std::span<const BenchmarkRecord> records, BenchMode mode);

struct CalibrationReport {
  std::vector<BenchmarkRecord> records;
  /// Kernel that measured fastest at each size.
  std::vector<std::pair<std::size_t, std::string>> fastest;
  std::string small_kernel;
  std::string mid_kernel;    // empty when the host has no Muła kernel
  std::string large_kernel;  // empty when the host has no vector Harley-Seal
  DispatchThresholds recommended;
  /// Scalar kernels from fastest to slowest (summed min cost over sizes).
  std::vector<std::string> scalar_ranking;
};

/// Measures every runnable non-emulated counting kernel over `sizes` and
/// derives count thresholds: a tier takes over at the smallest size from
/// which it wins at every larger measured size. A tier that never does gets
/// kOverrideOnly.
CalibrationReport calibrate(const Dispatcher& dispatcher,
                            const std::vector<std::size_t>& sizes = default_bench_sizes(),
                            std::size_t repeats = kDefaultRepeats,
                            std::uint64_t seed = kDefaultSeed);

std::string format_calibration(const CalibrationReport& report);

}  // namespace hamming
