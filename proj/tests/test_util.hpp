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
#include <random>
#include <vector>

#include "hamming/core.hpp"

namespace hamming::testing {

inline std::vector<Word> random_block(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> v(n);
  // Mix dense, sparse and saturated words so every counter sees all ranges.
  for (std::size_t i = 0; i < n; ++i) {
    switch (rng() % 4) {
      case 0: v[i] = rng() & rng() & rng(); break;
      case 1: v[i] = rng() | rng() | rng(); break;
      case 2: v[i] = ~Word{0}; break;
      default: v[i] = rng(); break;
    }
  }
  return v;
}

inline std::vector<Word> ones_block(std::size_t n) { return std::vector<Word>(n, ~Word{0}); }

// Oracle counts of AND / OR, word by word.
inline PopCount oracle_and(WordBlock a, WordBlock b) {
  PopCount t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += popcount_oracle_word(a[i] & b[i]);
  return t;
}

inline PopCount oracle_or(WordBlock a, WordBlock b) {
  PopCount t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += popcount_oracle_word(a[i] | b[i]);
  return t;
}

}  // namespace hamming::testing
