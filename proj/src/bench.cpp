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

#include "hamming/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hamming/errors.hpp"

#if defined(__x86_64__)
#include <x86intrin.h>
#endif

namespace hamming {

namespace {

constexpr std::size_t kMinWordsPerSample = 16384;

#if defined(__x86_64__)
constexpr TimerKind kTimer = TimerKind::cycle_counter;

inline std::uint64_t timer_start() noexcept {
  _mm_lfence();
  const std::uint64_t t = __rdtsc();
  _mm_lfence();
  return t;
}

inline std::uint64_t timer_stop() noexcept {
  unsigned aux;
  const std::uint64_t t = __rdtscp(&aux);
  _mm_lfence();
  return t;
}
#else
constexpr TimerKind kTimer = TimerKind::wall_clock_ns;

inline std::uint64_t now_ns() noexcept {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now().time_since_epoch())
                                        .count());
}
inline std::uint64_t timer_start() noexcept { return now_ns(); }
inline std::uint64_t timer_stop() noexcept { return now_ns(); }
#endif

std::vector<Word> random_words(std::size_t n, std::mt19937_64& rng) {
  std::vector<Word> v(n);
  for (Word& w : v) w = rng();
  return v;
}

bool is_portable_name(const std::string& name) {
  return name.ends_with("_portable");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

std::string size_label(std::size_t bytes) {
  if (bytes >= 1024 && bytes % 1024 == 0) return std::to_string(bytes / 1024) + " kB";
  return std::to_string(bytes) + " B";
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& field) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument("bad numeric field: " + field);
  }
  return value;
}

constexpr std::string_view kCsvHeader =
    "kernel,bytes,repeats,min_cycles_per_word,mean_cycles_per_word,timer_kind,stable";

}  // namespace

std::string_view to_string(TimerKind kind) noexcept {
  return kind == TimerKind::cycle_counter ? "cycle-counter" : "wall-clock-ns";
}

std::vector<std::size_t> default_bench_sizes() {
  std::vector<std::size_t> sizes;
  for (std::size_t s = 256; s <= 65536; s *= 2) sizes.push_back(s);
  return sizes;
}

Measurement measure_detailed(const Dispatcher& dispatcher, std::string_view kernel,
                             std::size_t bytes, std::size_t repeats, std::uint64_t seed) {
  if (repeats == 0) throw std::invalid_argument("repeats must be at least 1");
  if (bytes == 0) throw std::invalid_argument("size must be positive");

  // The kind is whichever registered kernel carries the name.
  const KernelDescriptor* desc = nullptr;
  for (const KernelDescriptor& k : dispatcher.kernels()) {
    if (k.name == kernel) desc = &k;
  }
  if (desc == nullptr) throw UnsupportedKernel(std::string(kernel));

  const std::size_t words = (bytes + kWordBytes - 1) / kWordBytes;
  std::mt19937_64 rng(seed);
  const std::vector<Word> a = random_words(words, rng);
  const std::vector<Word> b = random_words(words, rng);
  const std::size_t calls = std::max<std::size_t>(1, (kMinWordsPerSample + words - 1) / words);

  Measurement m;
  volatile PopCount sink = 0;
  auto sample = [&]() -> std::uint64_t {
    PopCount acc = 0;
    const std::uint64_t t0 = timer_start();
    if (desc->kind == KernelKind::count) {
      for (std::size_t c = 0; c < calls; ++c) acc += desc->count(a);
      m.value = acc / calls;
    } else {
      SimilarityResult r;
      for (std::size_t c = 0; c < calls; ++c) {
        r = desc->jaccard(a, b);
        acc += r.intersection_count;
      }
      m.value = r.intersection_count;
      m.union_value = r.union_count;
    }
    const std::uint64_t t1 = timer_stop();
    sink = sink + acc;
    return t1 - t0;
  };

  sample();  // warm-up: buffers and tables cache-resident
  std::uint64_t min_ticks = std::numeric_limits<std::uint64_t>::max();
  long double sum_ticks = 0;
  for (std::size_t r = 0; r < repeats; ++r) {
    const std::uint64_t t = sample();
    min_ticks = std::min(min_ticks, t);
    sum_ticks += t;
  }

  const double per = static_cast<double>(calls) * static_cast<double>(words);
  BenchmarkRecord& rec = m.record;
  rec.kernel = desc->name;
  rec.input_bytes = words * kWordBytes;
  rec.repeats = repeats;
  rec.min_cycles_per_word = static_cast<double>(min_ticks) / per;
  rec.mean_cycles_per_word = static_cast<double>(sum_ticks / repeats) / per;
  // Rounding can put the mean a hair under the min when every sample is equal.
  rec.mean_cycles_per_word = std::max(rec.mean_cycles_per_word, rec.min_cycles_per_word);
  rec.timer_kind = kTimer;
  rec.stable = rec.mean_cycles_per_word <= kStabilityBound * rec.min_cycles_per_word;
  return m;
}

BenchmarkRecord measure(const Dispatcher& dispatcher, std::string_view kernel,
                        std::size_t bytes, std::size_t repeats, std::uint64_t seed) {
  return measure_detailed(dispatcher, kernel, bytes, repeats, seed).record;
}

std::vector<std::string> default_bench_kernels(const Dispatcher& dispatcher, BenchMode mode) {
  const KernelKind kind = mode == BenchMode::count ? KernelKind::count : KernelKind::jaccard;
  std::vector<std::string> names;
  for (const KernelDescriptor& k : dispatcher.kernels()) {
    if (k.kind == kind && !is_portable_name(k.name)) names.push_back(k.name);
  }
  // Slowest-to-fastest reading order, as the catalog lists preferred first.
  std::reverse(names.begin(), names.end());
  return names;
}

std::vector<BenchmarkRecord> run_bench(const BenchConfig& config, const Dispatcher& dispatcher) {
  const KernelKind kind =
      config.mode == BenchMode::count ? KernelKind::count : KernelKind::jaccard;
  std::vector<std::string> kernels =
      config.kernels.empty() ? default_bench_kernels(dispatcher, config.mode) : config.kernels;
  for (const std::string& name : kernels) dispatcher.find(name, kind);

  std::vector<BenchmarkRecord> out;
  for (std::size_t size : config.sizes) {
    if (size == 0) throw std::invalid_argument("sizes must be positive");
    for (const std::string& name : kernels) {
      out.push_back(measure(dispatcher, name, size, config.repeats, config.seed));
    }
  }
  return out;
}

std::string format_csv(std::span<const BenchmarkRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const BenchmarkRecord& r : records) {
    out += r.kernel + ',' + std::to_string(r.input_bytes) + ',' + std::to_string(r.repeats) +
           ',' + format_double(r.min_cycles_per_word) + ',' +
           format_double(r.mean_cycles_per_word) + ',' + std::string(to_string(r.timer_kind)) +
           ',' + (r.stable ? "true" : "false") + '\n';
  }
  return out;
}

std::vector<BenchmarkRecord> parse_csv(std::string_view text) {
  std::vector<BenchmarkRecord> out;
  bool header = true;
  for (const std::string& raw : split(text, '\n')) {
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw std::invalid_argument("unexpected CSV header");
      header = false;
      continue;
    }
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 7) throw std::invalid_argument("expected 7 CSV fields");
    BenchmarkRecord r;
    r.kernel = f[0];
    r.input_bytes = parse_number<std::size_t>(f[1]);
    r.repeats = parse_number<std::size_t>(f[2]);
    r.min_cycles_per_word = parse_number<double>(f[3]);
    r.mean_cycles_per_word = parse_number<double>(f[4]);
    if (f[5] == to_string(TimerKind::cycle_counter)) {
      r.timer_kind = TimerKind::cycle_counter;
    } else if (f[5] == to_string(TimerKind::wall_clock_ns)) {
      r.timer_kind = TimerKind::wall_clock_ns;
    } else {
      throw std::invalid_argument("bad timer_kind: " + f[5]);
    }
    if (f[6] != "true" && f[6] != "false") throw std::invalid_argument("bad stable: " + f[6]);
    r.stable = f[6] == "true";
    out.push_back(std::move(r));
  }
  if (header) throw std::invalid_argument("missing CSV header");
  return out;
}

std::string format_markdown(std::span<const BenchmarkRecord> records, BenchMode mode) {
  std::vector<std::string> kernels;
  std::vector<std::size_t> sizes;
  std::map<std::pair<std::size_t, std::string>, const BenchmarkRecord*> cell;
  for (const BenchmarkRecord& r : records) {
    if (std::find(kernels.begin(), kernels.end(), r.kernel) == kernels.end())
      kernels.push_back(r.kernel);
    if (std::find(sizes.begin(), sizes.end(), r.input_bytes) == sizes.end())
      sizes.push_back(r.input_bytes);
    cell[{r.input_bytes, r.kernel}] = &r;
  }
  const bool ns = !records.empty() && records.front().timer_kind == TimerKind::wall_clock_ns;
  std::ostringstream os;
  os << (ns ? "Nanoseconds" : "Cycles") << " per "
     << (mode == BenchMode::count ? "64-bit word" : "word-pair") << " (minimum of "
     << (records.empty() ? 0 : records.front().repeats) << " runs)\n\n";
  os << "| array size |";
  for (const std::string& k : kernels) os << ' ' << k << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < kernels.size(); ++i) os << "---|";
  os << '\n';
  bool any_unstable = false;
  for (std::size_t size : sizes) {
    const BenchmarkRecord* best = nullptr;
    for (const std::string& k : kernels) {
      const auto it = cell.find({size, k});
      if (it != cell.end() &&
          (best == nullptr || it->second->min_cycles_per_word < best->min_cycles_per_word))
        best = it->second;
    }
    os << "| " << size_label(size) << " |";
    for (const std::string& k : kernels) {
      const auto it = cell.find({size, k});
      if (it == cell.end()) {
        os << " --- |";
        continue;
      }
      const std::string v = format_fixed(it->second->min_cycles_per_word, 2);
      os << ' ' << (it->second == best ? "**" + v + "**" : v);
      if (!it->second->stable) {
        os << '*';
        any_unstable = true;
      }
      os << " |";
    }
    os << '\n';
  }
  if (any_unstable) {
    os << "\n`*` unstable: mean exceeds min by more than "
       << format_fixed((kStabilityBound - 1.0) * 100.0, 0) << "%\n";
  }
  return os.str();
}

CalibrationReport calibrate(const Dispatcher& dispatcher, const std::vector<std::size_t>& sizes,
                            std::size_t repeats, std::uint64_t seed) {
  CalibrationReport report;
  BenchConfig config;
  config.sizes = sizes;
  config.repeats = repeats;
  config.seed = seed;
  config.mode = BenchMode::count;
  report.records = run_bench(config, dispatcher);

  auto cost = [&](std::size_t size, const std::string& kernel) {
    for (const BenchmarkRecord& r : report.records) {
      if (r.input_bytes == size && r.kernel == kernel) return r.min_cycles_per_word;
    }
    return std::numeric_limits<double>::infinity();
  };
  auto runnable = [&](const char* name) {
    for (const KernelDescriptor& k : dispatcher.kernels()) {
      if (k.name == name) return true;
    }
    return false;
  };

  std::vector<std::size_t> ordered = sizes;
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  for (std::size_t& s : ordered) s = (s + kWordBytes - 1) / kWordBytes * kWordBytes;

  for (std::size_t size : ordered) {
    std::string best;
    double best_cost = std::numeric_limits<double>::infinity();
    for (const BenchmarkRecord& r : report.records) {
      if (r.input_bytes == size && r.min_cycles_per_word < best_cost) {
        best_cost = r.min_cycles_per_word;
        best = r.kernel;
      }
    }
    report.fastest.emplace_back(size, best);
  }

  report.small_kernel = runnable("popcnt") ? "popcnt" : "harley_seal";
  if (runnable("mula256")) {
    report.mid_kernel = "mula256";
  } else if (runnable("mula128")) {
    report.mid_kernel = "mula128";
  }
  if (runnable("avx2_hs")) report.large_kernel = "avx2_hs";

  // Smallest size from which `kernel` beats every rival at all larger sizes
  // (below `limit`).
  auto takeover = [&](const std::string& kernel, const std::vector<std::string>& rivals,
                      std::size_t limit) {
    std::size_t from = kOverrideOnly;
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
      if (*it >= limit) continue;
      bool wins = true;
      for (const std::string& rival : rivals) {
        if (!rival.empty() && cost(*it, rival) <= cost(*it, kernel)) wins = false;
      }
      if (!wins) break;
      from = *it;
    }
    return from;
  };

  std::size_t large_min = kOverrideOnly;
  if (!report.large_kernel.empty()) {
    large_min = takeover(report.large_kernel, {report.small_kernel, report.mid_kernel},
                         kOverrideOnly);
  }
  std::size_t mid_min = large_min;
  if (!report.mid_kernel.empty()) {
    mid_min = std::min(large_min, takeover(report.mid_kernel, {report.small_kernel}, large_min));
  }
  report.recommended.mula_min_bytes = mid_min;
  report.recommended.hs_min_bytes = large_min;

  std::vector<std::pair<double, std::string>> scalar;
  for (const std::string name :
       {"harley_seal", "lauradoux", "wwg", "naive_tree", "wegner", "table8", "table16"}) {
    double total = 0;
    for (std::size_t size : ordered) total += cost(size, name);
    if (std::isfinite(total)) scalar.emplace_back(total, name);
  }
  std::sort(scalar.begin(), scalar.end());
  for (auto& [c, name] : scalar) report.scalar_ranking.push_back(name);
  return report;
}

std::string format_calibration(const CalibrationReport& report) {
  auto threshold = [](std::size_t v) {
    return v == kOverrideOnly ? std::string("never") : std::to_string(v) + " B";
  };
  std::ostringstream os;
  os << format_markdown(report.records, BenchMode::count) << '\n';
  os << "fastest per size:\n";
  for (const auto& [size, kernel] : report.fastest) {
    os << "  " << size_label(size) << ": " << kernel << '\n';
  }
  os << "scalar ranking (fastest first):";
  for (const std::string& k : report.scalar_ranking) os << ' ' << k;
  os << "\nrecommended thresholds:\n";
  os << "  small kernel: " << report.small_kernel << '\n';
  os << "  mula_min_bytes: " << threshold(report.recommended.mula_min_bytes)
     << (report.mid_kernel.empty() ? "" : " (" + report.mid_kernel + ")") << '\n';
  os << "  hs_min_bytes: " << threshold(report.recommended.hs_min_bytes)
     << (report.large_kernel.empty() ? "" : " (" + report.large_kernel + ")") << '\n';
  return os.str();
}

}  // namespace hamming
