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

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "hamming/dispatch.hpp"

namespace hamming::testing {

// Wraps every catalog entry in a trampoline that records the call before
// forwarding, so a test can see exactly which kernels ran.
class InstrumentedCatalog {
 public:
  static constexpr std::size_t kSlots = 48;

  explicit InstrumentedCatalog(std::vector<KernelDescriptor> catalog) : catalog_(std::move(catalog)) {
    state().originals = catalog_;
    state().calls.fill(0);
    install(std::make_index_sequence<kSlots>{});
  }

  const std::vector<KernelDescriptor>& catalog() const { return catalog_; }
  const std::vector<KernelDescriptor>& originals() const { return state().originals; }
  std::size_t calls(std::size_t i) const { return state().calls[i]; }
  void reset() { state().calls.fill(0); }

 private:
  struct State {
    std::vector<KernelDescriptor> originals;
    std::array<std::size_t, kSlots> calls{};
  };

  static State& state() {
    static State s;
    return s;
  }

  template <std::size_t I>
  static PopCount count_tramp(WordBlock b) {
    ++state().calls[I];
    return state().originals[I].count(b);
  }

  template <std::size_t I>
  static SimilarityResult jaccard_tramp(WordBlock a, WordBlock b) {
    ++state().calls[I];
    return state().originals[I].jaccard(a, b);
  }

  template <std::size_t... I>
  void install(std::index_sequence<I...>) {
    constexpr CountFn counts[] = {&count_tramp<I>...};
    constexpr JaccardFn jaccards[] = {&jaccard_tramp<I>...};
    for (std::size_t i = 0; i < catalog_.size() && i < kSlots; ++i) {
      if (catalog_[i].count) catalog_[i].count = counts[i];
      if (catalog_[i].jaccard) catalog_[i].jaccard = jaccards[i];
    }
  }

  std::vector<KernelDescriptor> catalog_;
};

}  // namespace hamming::testing
