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

#include "doctest.h"
#include "hamming/bench.hpp"
#include "hamming/errors.hpp"

using namespace hamming;

TEST_CASE("measure returns the kernel's own result") {
  const Dispatcher d(detect_cpu_features());
  for (const char* name : {"harley_seal", "wwg", "table8"}) {
    const Measurement m = measure_detailed(d, name, 1000, 5, 42);
    CHECK(m.record.kernel == name);
    CHECK(m.record.input_bytes == 1000);
    CHECK(m.record.repeats == 5);
    CHECK(m.record.min_cycles_per_word > 0.0);
    CHECK(m.record.min_cycles_per_word <= m.record.mean_cycles_per_word);
    CHECK(m.record.stable ==
          (m.record.mean_cycles_per_word <= kStabilityBound * m.record.min_cycles_per_word));
  }
  // Same seed, same buffer, same count.
  const auto a = measure_detailed(d, "wwg", 4096, 2, 7);
  const auto b = measure_detailed(d, "harley_seal", 4096, 2, 7);
  CHECK(a.value == b.value);
  const auto j = measure_detailed(d, "jaccard_scalar", 4096, 2, 7);
  CHECK(j.value <= j.union_value);
  CHECK_THROWS_AS(measure(d, "missing", 256, 1), UnsupportedKernel);
}

TEST_CASE("csv round trip") {
  const std::vector<BenchmarkRecord> records{
      {"popcnt", 256, 500, 0.7812345678901234, 0.9, TimerKind::cycle_counter, false},
      {"avx2_hs", 65536, 3, 1.0 / 3.0, 1e-300, TimerKind::wall_clock_ns, true},
  };
  const std::string text = format_csv(records);
  CHECK(text.rfind("kernel,bytes,repeats,min_cycles_per_word,mean_cycles_per_word,timer_kind,stable",
                   0) == 0);
  CHECK(parse_csv(text) == records);
  CHECK_THROWS_AS(parse_csv("kernel,bytes\nx,1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv(text + "popcnt,abc,1,1,1,cycle-counter,true\n"), std::invalid_argument);
}

TEST_CASE("run_bench and markdown") {
  const Dispatcher d(CpuFeatureSet::baseline());
  BenchConfig config;
  config.sizes = {256, 1024};
  config.repeats = 3;
  config.kernels = {"wwg", "harley_seal"};
  const auto records = run_bench(config, d);
  REQUIRE(records.size() == 4);
  CHECK(records[0].input_bytes == 256);
  CHECK(records[1].kernel == "harley_seal");
  const std::string md = format_markdown(records, BenchMode::count);
  CHECK(md.find("wwg") != std::string::npos);
  CHECK(md.find("**") != std::string::npos);
  CHECK(parse_csv(format_csv(records)) == records);
}

TEST_CASE("default ladder") {
  const auto sizes = default_bench_sizes();
  REQUIRE(sizes.size() == 9);
  CHECK(sizes.front() == 256);
  CHECK(sizes.back() == 65536);
  const Dispatcher d(CpuFeatureSet::baseline());
  for (const auto& k : default_bench_kernels(d, BenchMode::count)) {
    CHECK(k.find("portable") == std::string::npos);
  }
}

TEST_CASE("calibration report") {
  const Dispatcher d(detect_cpu_features());
  const auto report = calibrate(d, {256, 4096}, 3, 1);
  CHECK(report.fastest.size() == 2);
  CHECK_FALSE(report.small_kernel.empty());
  CHECK_FALSE(report.scalar_ranking.empty());
  CHECK_FALSE(format_calibration(report).empty());
}
