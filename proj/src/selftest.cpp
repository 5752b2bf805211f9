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

#include "hamming/selftest.hpp"

#include <random>
#include <sstream>

#include "hamming/dispatch.hpp"
#include "hamming/vector_kernels.hpp"

namespace hamming {

namespace {

std::vector<std::vector<Word>> random_blocks(const SelftestOptions& opt, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, opt.max_words);
  std::vector<std::vector<Word>> blocks;
  for (std::size_t i = 0; i < opt.blocks; ++i) {
    std::size_t n = len(rng);
    if (i == 0) n = 0;
    if (i == 1) n = opt.max_words;
    std::vector<Word> b(n);
    // Alternate dense random words with sparse ones so low and high counts
    // both appear.
    for (Word& w : b) w = (i % 2 == 0) ? rng() : (rng() & rng() & rng());
    blocks.push_back(std::move(b));
  }
  return blocks;
}

CheckResult check_tables(const SelftestOptions& opt) {
  const PopcountTables& built = popcount_tables();
  const ByteTable& bytes = opt.byte_table ? *opt.byte_table : built.by_byte;
  const ShortTable& shorts = opt.short_table ? *opt.short_table : built.by_short;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] != popcount_oracle_word(i))
      return {"tables", CheckStatus::fail, "table8 entry " + std::to_string(i)};
  }
  for (std::size_t i = 0; i < shorts.size(); ++i) {
    if (shorts[i] != popcount_oracle_word(i))
      return {"tables", CheckStatus::fail, "table16 entry " + std::to_string(i)};
  }
  return {"tables", CheckStatus::pass, "256 + 65536 entries"};
}

CheckResult check_csa(const SelftestOptions& opt, std::mt19937_64& rng) {
  for (Word a = 0; a < 2; ++a)
    for (Word b = 0; b < 2; ++b)
      for (Word c = 0; c < 2; ++c) {
        const CsaPair p = csa64(a, b, c);
        if (2 * p.high + p.low != a + b + c)
          return {"csa", CheckStatus::fail, "single-bit truth table"};
      }
  const bool has256 = opt.features.has_256bit;
  const bool has512 = opt.features.has_512bit_ternlog;
  for (int i = 0; i < 100000; ++i) {
    const Word a = rng(), b = rng(), c = rng();
    const CsaPair p = csa64(a, b, c);
    if (2 * popcount_oracle_word(p.high) + popcount_oracle_word(p.low) !=
        popcount_oracle_word(a) + popcount_oracle_word(b) + popcount_oracle_word(c))
      return {"csa", CheckStatus::fail, "conservation law"};
  }
  for (int i = 0; i < 1000; ++i) {
    Vec512 a, b, c;
    for (std::size_t k = 0; k < 8; ++k) {
      a.words[k] = rng();
      b.words[k] = rng();
      c.words[k] = rng();
    }
    const Vec256 a4 = Vec256::load(a.words.data()), b4 = Vec256::load(b.words.data()),
                 c4 = Vec256::load(c.words.data());
    const WideCsa<4> r256 = csa256(a4, b4, c4, has256 ? SimdPath::native : SimdPath::portable);
    const WideCsa<8> r512 = csa512(a, b, c, has512 ? SimdPath::native : SimdPath::portable);
    for (std::size_t k = 0; k < 8; ++k) {
      const CsaPair s = csa64(a.words[k], b.words[k], c.words[k]);
      if (k < 4 && (r256.high.words[k] != s.high || r256.low.words[k] != s.low))
        return {"csa", CheckStatus::fail, "csa256 lane " + std::to_string(k)};
      if (r512.high.words[k] != s.high || r512.low.words[k] != s.low)
        return {"csa", CheckStatus::fail, "csa512 lane " + std::to_string(k)};
    }
  }
  return {"csa", CheckStatus::pass, "truth table, conservation, lane equivalence"};
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opt) {
  SelftestReport report;
  std::mt19937_64 rng(opt.seed);
  report.checks.push_back(check_tables(opt));
  report.checks.push_back(check_csa(opt, rng));

  const std::vector<std::vector<Word>> blocks = random_blocks(opt, rng);
  std::vector<PopCount> expected;
  for (const auto& b : blocks) expected.push_back(popcount_oracle(b));

  for (const KernelDescriptor& k : kernel_catalog()) {
    if (!opt.features.contains(k.required_features)) {
      report.checks.push_back({k.name, CheckStatus::skipped,
                               "feature absent: " + k.required_features.to_string()});
      continue;
    }
    CheckResult result{k.name, CheckStatus::pass, std::to_string(blocks.size()) + " blocks"};
    for (std::size_t i = 0; i < blocks.size() && result.status == CheckStatus::pass; ++i) {
      const WordBlock a = blocks[i];
      if (k.kind == KernelKind::count) {
        PopCount got;
        if (k.name == "table8" && opt.byte_table) {
          got = table8_count(a, *opt.byte_table);
        } else if (k.name == "table16" && opt.short_table) {
          got = table16_count(a, *opt.short_table);
        } else {
          got = k.count(a);
        }
        if (got != expected[i]) {
          result = {k.name, CheckStatus::fail,
                    "length " + std::to_string(a.size()) + ": got " + std::to_string(got) +
                        ", oracle " + std::to_string(expected[i])};
        }
      } else {
        // Pair each block with its successor truncated to the same length.
        const auto& other = blocks[(i + 1) % blocks.size()];
        std::vector<Word> b(a.size());
        for (std::size_t w = 0; w < b.size(); ++w) b[w] = other.empty() ? 0 : other[w % other.size()];
        PopCount inter = 0, uni = 0;
        for (std::size_t w = 0; w < a.size(); ++w) {
          inter += popcount_oracle_word(a[w] & b[w]);
          uni += popcount_oracle_word(a[w] | b[w]);
        }
        const SimilarityResult r = k.jaccard(a, b);
        if (r.intersection_count != inter || r.union_count != uni) {
          result = {k.name, CheckStatus::fail, "length " + std::to_string(a.size())};
        }
      }
    }
    report.checks.push_back(std::move(result));
  }
  return report;
}

std::string format_selftest(const SelftestReport& report) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const CheckResult& c : report.checks) {
    switch (c.status) {
      case CheckStatus::pass:
        ++pass;
        os << "PASS " << c.name << " (" << c.detail << ")\n";
        break;
      case CheckStatus::fail:
        ++fail;
        os << "FAIL " << c.name << ": " << c.detail << '\n';
        break;
      case CheckStatus::skipped:
        ++skip;
        os << "SKIP " << c.name << " (skipped, " << c.detail << ")\n";
        break;
    }
  }
  os << (fail == 0 ? "selftest passed" : "selftest FAILED") << ": " << pass << " passed, "
     << fail << " failed, " << skip << " skipped\n";
  return os.str();
}

}  // namespace hamming
