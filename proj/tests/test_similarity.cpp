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
#include "hamming/similarity.hpp"
#include "test_util.hpp"

using namespace hamming;
using hamming::testing::oracle_and;
using hamming::testing::oracle_or;
using hamming::testing::random_block;

namespace {

std::vector<SimilarityResult> all_jaccard(WordBlock a, WordBlock b) {
  const auto& f = detect_cpu_features();
  std::vector<SimilarityResult> r{jaccard_scalar(a, b), jaccard_mula256(a, b, SimdPath::portable),
                                  jaccard_hs(a, b, SimdPath::portable), jaccard_mula256(a, b),
                                  jaccard_hs(a, b)};
  if (f.has_popcnt) r.push_back(jaccard_popcnt(a, b));
  if (f.has_256bit) {
    r.push_back(jaccard_mula256(a, b, SimdPath::native));
    r.push_back(jaccard_hs(a, b, SimdPath::native));
  }
  return r;
}

}  // namespace

TEST_CASE("small example") {
  const std::vector<Word> a{0xF0}, b{0xAA};
  for (const auto& r : all_jaccard(a, b)) {
    CHECK(r.intersection_count == 2);
    CHECK(r.union_count == 6);
    CHECK(r.jaccard == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  CHECK(intersection_count(a, b) == 2);
  CHECK(union_count(a, b) == 6);
}

TEST_CASE("identical inputs give one") {
  std::mt19937_64 rng(20);
  const auto a = random_block(rng, 300);
  for (const auto& r : all_jaccard(a, a)) {
    CHECK(r.intersection_count == r.union_count);
    CHECK(r.jaccard == 1.0);
  }
}

TEST_CASE("empty union convention") {
  const std::vector<Word> zero(5, 0);
  for (const auto& r : all_jaccard(zero, zero)) {
    CHECK(r.union_count == 0);
    CHECK(r.jaccard == 1.0);
  }
  for (const auto& r : all_jaccard(WordBlock{}, WordBlock{})) CHECK(r.jaccard == 1.0);
  CHECK(make_similarity(0, 0).jaccard == 1.0);
  CHECK(make_similarity(1, 4).jaccard == 0.25);
}

TEST_CASE("length mismatch") {
  const std::vector<Word> a(3), b(4);
  CHECK_THROWS_AS(jaccard_scalar(a, b), LengthMismatch);
  CHECK_THROWS_AS(jaccard_popcnt(a, b), LengthMismatch);
  CHECK_THROWS_AS(jaccard_mula256(a, b), LengthMismatch);
  CHECK_THROWS_AS(jaccard_hs(a, b), LengthMismatch);
  CHECK_THROWS_AS(intersection_count(a, b), LengthMismatch);
  CHECK_THROWS_AS(union_count(a, b), LengthMismatch);
  try {
    jaccard_hs(a, b);
  } catch (const LengthMismatch& e) {
    CHECK(std::string(e.what()).find('3') != std::string::npos);
  }
}

TEST_CASE("set identities over random pairs") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = (i < 200) ? static_cast<std::size_t>(i) : rng() % 2049;
    const auto a = random_block(rng, n);
    const auto b = random_block(rng, n);
    const PopCount inter = oracle_and(a, b), uni = oracle_or(a, b);
    const PopCount pa = popcount_oracle(a), pb = popcount_oracle(b);
    REQUIRE(inter + uni == pa + pb);
    REQUIRE(inter <= std::min(pa, pb));
    REQUIRE(uni >= std::max(pa, pb));
    REQUIRE(intersection_count(a, b) == inter);
    REQUIRE(union_count(a, b) == uni);
    for (const auto& r : all_jaccard(a, b)) {
      CAPTURE(n);
      REQUIRE(r.intersection_count == inter);
      REQUIRE(r.union_count == uni);
      REQUIRE(r.jaccard >= 0.0);
      REQUIRE(r.jaccard <= 1.0);
      REQUIRE(r == make_similarity(inter, uni));
    }
  }
}
