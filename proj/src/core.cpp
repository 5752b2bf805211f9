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

#include "hamming/core.hpp"

#include <fstream>
#include <iterator>

#include "hamming/errors.hpp"

namespace hamming {

PopCount popcount_oracle_word(Word w) noexcept {
  PopCount count = 0;
  for (unsigned i = 0; i < 64; ++i) {
    count += (w >> i) & 1U;
  }
  return count;
}

PopCount popcount_oracle(WordBlock block) noexcept {
  PopCount total = 0;
  for (Word w : block) {
    total += popcount_oracle_word(w);
  }
  return total;
}

std::vector<Word> load_words(std::span<const std::byte> bytes) {
  std::vector<Word> words((bytes.size() + kWordBytes - 1) / kWordBytes, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    words[i / kWordBytes] |= static_cast<Word>(bytes[i]) << (8 * (i % kWordBytes));
  }
  return words;
}

std::vector<Word> load_words_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::vector<char> raw((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read failed: " + path.string());
  }
  return load_words(std::as_bytes(std::span<const char>(raw)));
}

}  // namespace hamming
