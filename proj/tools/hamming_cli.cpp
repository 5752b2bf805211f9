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

// hamming: population counts, Jaccard similarity and the benchmark harness
// from the command line.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamming/bench.hpp"
#include "hamming/core.hpp"
#include "hamming/dispatch.hpp"
#include "hamming/errors.hpp"
#include "hamming/selftest.hpp"

namespace {

using namespace hamming;

std::optional<std::string_view> optional_kernel(const std::string& name) {
  if (name.empty()) return std::nullopt;
  return name;
}

int cmd_count(const std::string& path, const std::string& kernel) {
  const std::vector<Word> words = load_words_file(path);
  std::cout << count_auto(words, optional_kernel(kernel)) << '\n';
  return 0;
}

int cmd_jaccard(const std::string& path_a, const std::string& path_b, const std::string& kernel) {
  const std::vector<Word> a = load_words_file(path_a);
  const std::vector<Word> b = load_words_file(path_b);
  const SimilarityResult r = jaccard_auto(a, b, optional_kernel(kernel));
  std::printf("intersection: %llu\nunion: %llu\njaccard: %.6f\n",
              static_cast<unsigned long long>(r.intersection_count),
              static_cast<unsigned long long>(r.union_count), r.jaccard);
  return 0;
}

int cmd_bench(BenchConfig config) {
  const std::vector<BenchmarkRecord> records = run_bench(config, Dispatcher::global());
  if (config.format == OutputFormat::csv) {
    std::cout << format_csv(records);
  } else {
    std::cout << format_markdown(records, config.mode);
  }
  return 0;
}

int cmd_selftest(const std::string& inject_fault) {
  SelftestOptions options;
  if (inject_fault == "table8") {
    ByteTable t = popcount_tables().by_byte;
    t[0xFF] = 7;
    options.byte_table = t;
  } else if (inject_fault == "table16") {
    auto t = std::make_unique<ShortTable>(popcount_tables().by_short);
    (*t)[0xFFFF] = 15;
    options.short_table = *t;
  }
  std::cout << "cpu features: " << options.features.to_string() << '\n';
  const SelftestReport report = run_selftest(options);
  std::cout << format_selftest(report);
  return report.passed() ? 0 : 1;
}

int cmd_calibrate(const std::vector<std::size_t>& sizes, std::size_t repeats,
                  std::uint64_t seed) {
  std::cout << format_calibration(calibrate(Dispatcher::global(), sizes, repeats, seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Population counts and bitset similarity"};
  app.require_subcommand(1);

  std::string kernel, input, path_a, path_b, inject_fault;
  BenchConfig bench;
  std::string format = "md", mode = "count";
  std::vector<std::size_t> sizes = default_bench_sizes();
  std::size_t repeats = kDefaultRepeats;
  std::uint64_t seed = kDefaultSeed;

  auto* count = app.add_subcommand("count", "Population count of a raw bitset file");
  count->add_option("--input,input", input, "Raw little-endian bitset file")->required();
  count->add_option("--kernel", kernel, "Force a counting kernel by name");

  auto* jaccard = app.add_subcommand("jaccard", "Intersection, union and Jaccard index");
  jaccard->add_option("--a", path_a, "First bitset file")->required();
  jaccard->add_option("--b", path_b, "Second bitset file")->required();
  jaccard->add_option("--kernel", kernel, "Force a Jaccard kernel by name");

  auto* bench_cmd = app.add_subcommand("bench", "Cycles per word across input sizes");
  bench_cmd->add_option("--kernel", bench.kernels, "Kernels to time (default: all native)")
      ->delimiter(',');
  bench_cmd->add_option("--sizes", sizes, "Input sizes in bytes")->delimiter(',');
  bench_cmd->add_option("--repeats", repeats, "Timed runs per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "md"}));
  bench_cmd->add_option("--mode", mode, "count or jaccard (word-pairs)")
      ->check(CLI::IsMember({"count", "jaccard"}));
  bench_cmd->add_option("--seed", seed, "Seed for the random input bits");

  auto* selftest = app.add_subcommand("selftest", "Differential check of every kernel");
  selftest->add_option("--inject-fault", inject_fault, "Corrupt a lookup table (testing)")
      ->check(CLI::IsMember({"table8", "table16"}))
      ->group("");

  auto* calibrate_cmd = app.add_subcommand("calibrate", "Measure dispatch crossovers here");
  calibrate_cmd->add_option("--sizes", sizes, "Input sizes in bytes")->delimiter(',');
  calibrate_cmd->add_option("--repeats", repeats, "Timed runs per cell")
      ->check(CLI::PositiveNumber);
  calibrate_cmd->add_option("--seed", seed, "Seed for the random input bits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) return cmd_count(input, kernel);
    if (*jaccard) return cmd_jaccard(path_a, path_b, kernel);
    if (*bench_cmd) {
      bench.sizes = sizes;
      bench.repeats = repeats;
      bench.seed = seed;
      bench.format = format == "csv" ? OutputFormat::csv : OutputFormat::markdown;
      bench.mode = mode == "count" ? BenchMode::count : BenchMode::jaccard;
      return cmd_bench(bench);
    }
    if (*selftest) return cmd_selftest(inject_fault);
    if (*calibrate_cmd) return cmd_calibrate(sizes, repeats, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
