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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace hamming {

using Word = std::uint64_t;

/// Number of one-bits. Always held in 64 bits; overflow is impossible below
/// 2^58 input words.
using PopCount = std::uint64_t;

/// Read-only bitset view: bit i of word j stands for the integer 64j + i.
using WordBlock = std::span<const Word>;

inline constexpr std::size_t kWordBytes = sizeof(Word);

/// Reference count of a single word, one bit at a time.
///
/// This is the ground truth every optimized kernel is tested against. It is
/// deliberately the slowest correct implementation and shares no code with
/// any kernel.
PopCount popcount_oracle_word(Word w) noexcept;

/// Sum of popcount_oracle_word over the block; 0 for an empty block.
PopCount popcount_oracle(WordBlock block) noexcept;

/// Assembles little-endian 64-bit words from raw bytes. A trailing partial
/// word is zero-padded in its high-order bytes, so the population count of
/// the byte stream is preserved exactly.
std::vector<Word> load_words(std::span<const std::byte> bytes);

/// Reads a raw bitset file (flat byte stream, no header) through load_words.
/// Throws IoError when the file cannot be read.
std::vector<Word> load_words_file(const std::filesystem::path& path);

}  // namespace hamming
