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

// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hamming/bench.hpp"
#include "hamming/dispatch.hpp"
#include "hamming/scalar_kernels.hpp"
#include "hamming/similarity.hpp"
#include "hamming/vector_kernels.hpp"
#include "instrumented.hpp"
#include "test_util.hpp"

using namespace hamming;
using hamming::testing::oracle_and;
using hamming::testing::oracle_or;
using hamming::testing::random_block;

namespace {

enum class Outcome { pass, fail, skip };

struct Verdict {
  Outcome outcome = Outcome::pass;
  std::string detail;
};

Verdict fail(std::string why) { return {Outcome::fail, std::move(why)}; }

std::vector<std::pair<std::string, CountFn>> every_count_kernel() {
  std::vector<std::pair<std::string, CountFn>> r;
  // Explicit emulated 512-bit path, in addition to whatever the catalog runs.
  r.emplace_back("avx512_hs_emulated",
                 [](WordBlock b) { return avx512_harley_seal(b, SimdPath::portable); });
  r.emplace_back("mula128_emulated", [](WordBlock b) { return mula_array_128(b, SimdPath::portable); });
  for (const auto& k : register_kernels(detect_cpu_features())) {
    if (k.kind == KernelKind::count) r.emplace_back(k.name, k.count);
  }
  return r;
}

Verdict oracle_equivalence() {
  std::mt19937_64 rng(0xA11CE);
  const auto kernels = every_count_kernel();
  std::vector<std::size_t> lengths;
  for (std::size_t n = 0; n <= 2048; ++n) lengths.push_back(n);
  for (int i = 0; i < 300; ++i) lengths.push_back(rng() % 2049);
  for (std::size_t n : lengths) {
    const auto block = random_block(rng, n);
    const PopCount expected = popcount_oracle(block);
    for (const auto& [name, fn] : kernels) {
      if (fn(block) != expected) return fail(name + " at " + std::to_string(n) + " words");
    }
  }
  return {Outcome::pass, std::to_string(kernels.size()) + " kernels, " +
                             std::to_string(lengths.size()) + " blocks"};
}

Verdict csa_correctness() {
  const Word rows[8][5] = {{0, 0, 0, 0, 0}, {0, 0, 1, 0, 1}, {0, 1, 0, 0, 1}, {0, 1, 1, 1, 0},
                           {1, 0, 0, 0, 1}, {1, 0, 1, 1, 0}, {1, 1, 0, 1, 0}, {1, 1, 1, 1, 1}};
  for (const auto& r : rows) {
    const CsaPair p = csa64(r[0], r[1], r[2]);
    if (p.high != r[3] || p.low != r[4]) return fail("table row mismatch");
  }
  std::mt19937_64 rng(0xC5A);
  for (int i = 0; i < 1000000; ++i) {
    const Word a = rng(), b = rng(), c = rng();
    const CsaPair p = csa64(a, b, c);
    if (2 * popcount_oracle_word(p.high) + popcount_oracle_word(p.low) !=
        popcount_oracle_word(a) + popcount_oracle_word(b) + popcount_oracle_word(c)) {
      return fail("conservation violated");
    }
  }
  const auto& host = detect_cpu_features();
  for (int i = 0; i < 100000; ++i) {
    Vec512 a, b, c;
    for (std::size_t l = 0; l < 8; ++l) {
      a.words[l] = rng();
      b.words[l] = rng();
      c.words[l] = rng();
    }
    const auto v512 = csa512(a, b, c, SimdPath::portable);
    const auto n512 = host.has_512bit_ternlog ? csa512(a, b, c, SimdPath::native) : v512;
    Vec256 a4, b4, c4;
    for (std::size_t l = 0; l < 4; ++l) {
      a4.words[l] = a.words[l];
      b4.words[l] = b.words[l];
      c4.words[l] = c.words[l];
    }
    const auto v256 = csa256(a4, b4, c4, SimdPath::portable);
    const auto n256 = host.has_256bit ? csa256(a4, b4, c4, SimdPath::native) : v256;
    for (std::size_t l = 0; l < 8; ++l) {
      const CsaPair p = csa64(a.words[l], b.words[l], c.words[l]);
      if (v512.high.words[l] != p.high || v512.low.words[l] != p.low ||
          n512.high.words[l] != p.high || n512.low.words[l] != p.low) {
        return fail("csa512 lane " + std::to_string(l));
      }
      if (l < 4 && (v256.high.words[l] != p.high || v256.low.words[l] != p.low ||
                    n256.high.words[l] != p.high || n256.low.words[l] != p.low)) {
        return fail("csa256 lane " + std::to_string(l));
      }
    }
  }
  return {Outcome::pass, "8 rows, 1000000 triples, 100000 lane checks"};
}

Verdict tables_exhaustive() {
  const PopcountTables& t = popcount_tables();
  for (std::size_t i = 0; i < 256; ++i) {
    if (t.by_byte[i] != popcount_oracle_word(i)) return fail("byte entry " + std::to_string(i));
  }
  for (std::size_t i = 0; i < 65536; ++i) {
    if (t.by_short[i] != popcount_oracle_word(i)) return fail("short entry " + std::to_string(i));
  }
  return {Outcome::pass, "256 + 65536 entries"};
}

Verdict similarity_identities() {
  std::mt19937_64 rng(0x51A);
  const auto& host = detect_cpu_features();
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = rng() % 513;
    const auto a = random_block(rng, n), b = random_block(rng, n);
    std::vector<Word> na(a);
    for (auto& w : na) w = ~w;
    const PopCount inter = oracle_and(a, b), uni = oracle_or(a, b);
    if (inter + uni != popcount_oracle(a) + popcount_oracle(b)) return fail("inclusion-exclusion");
    const auto hs = jaccard_hs(a, b);
    const auto ref = host.has_popcnt ? jaccard_popcnt(a, b) : jaccard_scalar(a, b);
    if (hs.intersection_count != ref.intersection_count || hs.union_count != ref.union_count) {
      return fail("jaccard_hs differs from popcnt at " + std::to_string(n) + " words");
    }
    if (hs.intersection_count != inter || hs.union_count != uni) return fail("counts differ from oracle");
    if (jaccard_hs(b, a) != hs || jaccard_scalar(b, a) != jaccard_scalar(a, b)) return fail("symmetry");
    if (jaccard_hs(a, a).jaccard != 1.0) return fail("jaccard(a,a) != 1");
    if (n > 0 && jaccard_hs(a, na).jaccard != 0.0) return fail("jaccard(a,~a) != 0");
    if (jaccard_hs(a, b, SimdPath::portable) != hs) return fail("portable jaccard_hs differs");
  }
  return {Outcome::pass, "10000 pairs"};
}

double min_cost(const Dispatcher& d, const std::string& kernel, std::size_t bytes) {
  return measure(d, kernel, bytes, 200).min_cycles_per_word;
}

Verdict performance() {
  const Dispatcher& d = Dispatcher::global();
  const auto& host = detect_cpu_features();
  if (!host.has_256bit || !host.has_popcnt) return {Outcome::skip, "host lacks AVX2"};
  std::ostringstream out;
  out.precision(3);
  bool ok = true;
  for (std::size_t bytes : {8192, 16384, 32768, 65536}) {
    const double ratio = min_cost(d, "popcnt", bytes) / min_cost(d, "avx2_hs", bytes);
    out << "count " << bytes << "B " << ratio << "x; ";
    ok = ok && ratio >= 1.5;
  }
  for (std::size_t bytes : {16384, 32768, 65536}) {
    const double ratio =
        min_cost(d, "jaccard_popcnt", bytes) / min_cost(d, "jaccard_avx2_hs", bytes);
    out << "jaccard " << bytes << "B " << ratio << "x; ";
    ok = ok && ratio >= 1.8;
  }
  out << "need 1.5x / 1.8x";
  return {ok ? Outcome::pass : Outcome::fail, out.str()};
}

Verdict dispatch_soundness() {
  const auto& host = detect_cpu_features();
  std::mt19937_64 rng(0xD15);
  const Dispatcher plain(host);
  std::size_t checks = 0;
  for (std::size_t words : {0, 1, 15, 33, 64, 129, 512, 1000, 2048, 8192}) {
    const auto a = random_block(rng, words), b = random_block(rng, words);
    const PopCount c = count_auto(a);
    const SimilarityResult j = jaccard_auto(a, b);
    for (const auto& k : plain.kernels()) {
      Dispatcher::Overrides o;
      (k.kind == KernelKind::count ? o.count : o.jaccard) = k.name;
      const Dispatcher forced(host, DispatchThresholds{}, o);
      if (k.kind == KernelKind::count && forced.count(a) != c) return fail("override " + k.name);
      if (k.kind == KernelKind::jaccard && forced.jaccard(a, b) != j) return fail("override " + k.name);
      ++checks;
    }
  }
  hamming::testing::InstrumentedCatalog inst(kernel_catalog());
  for (const CpuFeatureSet& mask : {CpuFeatureSet::baseline(), CpuFeatureSet::popcnt_only(),
                                    CpuFeatureSet::haswell()}) {
    const CpuFeatureSet masked = mask.intersect(host);
    inst.reset();
    const Dispatcher d(masked, inst.catalog());
    for (std::size_t words = 0; words <= 8192; words = words ? words * 2 : 1) {
      const auto a = random_block(rng, words), b = random_block(rng, words);
      d.count(a);
      d.jaccard(a, b);
      for (const auto& k : d.kernels()) {
        k.kind == KernelKind::count ? (void)d.count(a, k.name) : (void)d.jaccard(a, b, k.name);
      }
    }
    for (std::size_t i = 0; i < inst.originals().size(); ++i) {
      if (!masked.contains(inst.originals()[i].required_features) && inst.calls(i) != 0) {
        return fail(inst.originals()[i].name + " ran under mask " + masked.to_string());
      }
    }
  }
  return {Outcome::pass, std::to_string(checks) + " override checks, 3 masks"};
}

Verdict measurement_protocol() {
  const Dispatcher& d = Dispatcher::global();
  BenchConfig config;
  const auto records = run_bench(config, d);
  std::size_t stable = 0;
  for (const auto& r : records) {
    const bool expect = r.mean_cycles_per_word <= kStabilityBound * r.min_cycles_per_word;
    if (r.stable != expect) return fail("record flag disagrees for " + r.kernel);
    stable += r.stable ? 1 : 0;
  }
  const double share = records.empty() ? 0.0 : double(stable) / double(records.size());
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu/%zu records stable (%.1f%%), need 90%%", stable,
                records.size(), 100.0 * share);
  return {share >= 0.90 ? Outcome::pass : Outcome::fail, buf};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 carry-save adder", csa_correctness},
      {"3 tables exhaustive", tables_exhaustive},
      {"4 similarity identities", similarity_identities},
      {"5 performance", performance},
      {"6 dispatch soundness", dispatch_soundness},
      {"7 measurement protocol", measurement_protocol},
  };
  std::printf("host features: %s\n", detect_cpu_features().to_string().c_str());
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = v.outcome == Outcome::pass ? "PASS" : v.outcome == Outcome::fail ? "FAIL" : "SKIP";
    std::printf("%s criterion %s: %s (%.1fs)\n", tag, name, v.detail.c_str(), secs);
    std::fflush(stdout);
    failures += v.outcome == Outcome::fail ? 1 : 0;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
