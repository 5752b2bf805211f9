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

#include <random>

#include "doctest.h"
#include "hamming/errors.hpp"
#include "hamming/scalar_kernels.hpp"
#include "hamming/cpu_features.hpp"
#include "test_util.hpp"

using namespace hamming;
using hamming::testing::ones_block;
using hamming::testing::random_block;

TEST_CASE("single-word counters") {
  for (auto* f : {naive_tree, wwg, wegner}) {
    CHECK(f(0xAA) == 4);
    CHECK(f(0) == 0);
    CHECK(f(~Word{0}) == 64);
    CHECK(f(0x8000000000000000ULL) == 1);
    CHECK(f(0xF0) == 4);
  }
  // The subtract step maps each 2-bit field to its bit count.
  CHECK(wwg(0b11) == 2);
  CHECK(wwg(0b10) == 1);
  CHECK(wwg(0b01) == 1);
}

TEST_CASE("wwg agrees with naive_tree") {
  // Every word whose set bits lie in the low 16 positions.
  for (Word w = 0; w < 65536; ++w) REQUIRE(wwg(w) == naive_tree(w));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000000; ++i) {
    const Word w = rng();
    REQUIRE(wwg(w) == naive_tree(w));
  }
}

TEST_CASE("single-word counters match the oracle") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200000; ++i) {
    const Word w = (i % 3 == 0) ? rng() & rng() : rng();
    const PopCount expected = popcount_oracle_word(w);
    REQUIRE(naive_tree(w) == expected);
    REQUIRE(wwg(w) == expected);
    REQUIRE(wegner(w) == expected);
  }
}

TEST_CASE("tables are exhaustively correct") {
  const PopcountTables t = build_tables();
  CHECK(t.by_byte[0xFF] == 8);
  CHECK(t.by_byte[0] == 0);
  CHECK(t.by_short[0x0101] == 2);
  for (std::size_t i = 0; i < 256; ++i) REQUIRE(t.by_byte[i] == popcount_oracle_word(i));
  for (std::size_t i = 0; i < 65536; ++i) REQUIRE(t.by_short[i] == popcount_oracle_word(i));
  CHECK(&popcount_tables() == &popcount_tables());
}

TEST_CASE("table kernels") {
  const std::vector<Word> aa{0xAA};
  CHECK(table8_count(aa) == 4);
  CHECK(table16_count(aa) == 4);
  CHECK(table8_count(WordBlock{}) == 0);
  CHECK(table16_count(WordBlock{}) == 0);
  std::mt19937_64 rng(5);
  const auto block = random_block(rng, 1000);
  CHECK(table8_count(block) == popcount_oracle(block));
  CHECK(table16_count(block) == popcount_oracle(block));
}

TEST_CASE("table kernels use the table they are given") {
  ByteTable broken = popcount_tables().by_byte;
  broken[0xFF] = 0;
  const std::vector<Word> ones{~Word{0}};
  CHECK(table8_count(ones, broken) == 0);
}

TEST_CASE("lauradoux") {
  CHECK(lauradoux(ones_block(12)) == 768);
  auto thirteen = ones_block(12);
  thirteen.push_back(0xAA);
  CHECK(lauradoux(thirteen) == 772);
  CHECK(lauradoux(WordBlock{}) == 0);
  // 24 saturated words: exercises the full 10-bit group total twice.
  CHECK(lauradoux(ones_block(24)) == 1536);
}

TEST_CASE("csa64 reproduces the three-bit sum table") {
  struct Row {
    Word a, b, c, sum, low, high;
  };
  const Row rows[] = {{0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 0}, {0, 1, 0, 1, 1, 0},
                      {1, 0, 0, 1, 1, 0}, {0, 1, 1, 2, 0, 1}, {1, 0, 1, 2, 0, 1},
                      {1, 1, 0, 2, 0, 1}, {1, 1, 1, 3, 1, 1}};
  for (const Row& r : rows) {
    const CsaPair p = csa64(r.a, r.b, r.c);
    CHECK(p.low == r.low);
    CHECK(p.high == r.high);
    CHECK(2 * p.high + p.low == r.sum);
  }
  const Word x = 0x0123456789ABCDEFULL;
  CHECK(csa64(x, x, x) == CsaPair{x, x});
  static_assert(csa64(1, 1, 1) == CsaPair{1, 1});
}

TEST_CASE("csa64 conserves population count") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000000; ++i) {
    const Word a = rng(), b = rng(), c = rng();
    const CsaPair p = csa64(a, b, c);
    REQUIRE(2 * popcount_oracle_word(p.high) + popcount_oracle_word(p.low) ==
            popcount_oracle_word(a) + popcount_oracle_word(b) + popcount_oracle_word(c));
  }
}

TEST_CASE("harley_seal64") {
  CHECK(harley_seal64(ones_block(16)) == 1024);
  auto seventeen = ones_block(16);
  seventeen.push_back(0xAA);
  CHECK(harley_seal64(seventeen) == 1028);
  std::mt19937_64 rng(8);
  for (std::size_t n = 0; n < 256; ++n) {
    const auto block = random_block(rng, n);
    REQUIRE(harley_seal64(block) == popcount_oracle(block));
  }
}

TEST_CASE("hw_popcnt") {
  if (!detect_cpu_features().has_popcnt) {
    CHECK_THROWS_AS(hw_popcnt(std::vector<Word>{1}), UnsupportedFeature);
    return;
  }
  CHECK(hw_popcnt(std::vector<Word>{0xAA}) == 4);
  CHECK(hw_popcnt(WordBlock{}) == 0);
  std::mt19937_64 rng(9);
  const auto block = random_block(rng, 4096);
  CHECK(hw_popcnt(block) == popcount_oracle(block));
}

TEST_CASE("every scalar kernel equals the oracle for lengths 0..2048") {
  std::mt19937_64 rng(10);
  const bool popcnt = detect_cpu_features().has_popcnt;
  std::vector<std::size_t> lengths;
  for (std::size_t n = 0; n <= 64; ++n) lengths.push_back(n);
  for (int i = 0; i < 40; ++i) lengths.push_back(rng() % 2049);
  lengths.push_back(2048);
  for (std::size_t n : lengths) {
    const auto block = random_block(rng, n);
    const PopCount expected = popcount_oracle(block);
    CAPTURE(n);
    REQUIRE(naive_tree_count(block) == expected);
    REQUIRE(wwg_count(block) == expected);
    REQUIRE(wegner_count(block) == expected);
    REQUIRE(table8_count(block) == expected);
    REQUIRE(table16_count(block) == expected);
    REQUIRE(lauradoux(block) == expected);
    REQUIRE(harley_seal64(block) == expected);
    if (popcnt) REQUIRE(hw_popcnt(block) == expected);
  }
}
