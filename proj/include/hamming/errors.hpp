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

#include <stdexcept>
#include <string>

namespace hamming {

/// Two bitsets passed to a pairwise operation have different word lengths.
class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t a_words, std::size_t b_words)
      : std::invalid_argument("length mismatch: " + std::to_string(a_words) +
                              " vs " + std::to_string(b_words) + " words") {}
};

/// A kernel was invoked on a CPU that lacks the instructions it needs.
class UnsupportedFeature : public std::runtime_error {
 public:
  explicit UnsupportedFeature(const std::string& what)
      : std::runtime_error("unsupported CPU feature: " + what) {}
};

/// Unknown kernel name, or a kernel that cannot run on this machine.
class UnsupportedKernel : public std::runtime_error {
 public:
  explicit UnsupportedKernel(const std::string& name)
      : std::runtime_error("unsupported kernel: " + name) {}
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hamming
