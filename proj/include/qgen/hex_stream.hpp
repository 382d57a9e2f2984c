/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QGEN_HEX_STREAM_HPP_
#define QGEN_HEX_STREAM_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "qgen/error.hpp"
#include "qgen/md5.hpp"

namespace qgen {

constexpr int kDefaultOffset = 5;

// The generator's only source of randomness: the 32 hex digits of a digest,
// read cyclically. Pass k (zero-based) starts at digit (k * offset) mod 32,
// so with an odd offset every digit position starts exactly one pass out of
// every 32.
class HexStream {
 public:
  static constexpr int kDigits = 32;

  static HexStream from_hex(std::string_view hex, int offset = kDefaultOffset) {
    if (offset < 1 || offset % 2 == 0) {
      throw ConfigError("stream offset must be a positive odd integer, got " +
                        std::to_string(offset));
    }
    if (hex.size() != kDigits) {
      throw FormatError("digest must have 32 hex digits, got " +
                        std::to_string(hex.size()));
    }
    HexStream s;
    s.offset_ = offset;
    for (int i = 0; i < kDigits; ++i) {
      const int v = hex_value(hex[i]);
      if (v < 0) {
        throw FormatError("invalid hex digit '" + std::string(1, hex[i]) +
                          "' in digest");
      }
      s.digits_[i] = static_cast<std::uint8_t>(v);
    }
    s.hex_ = std::string(hex);
    for (char& c : s.hex_) {
      if (c >= 'A' && c <= 'F') c = static_cast<char>(c - 'A' + 'a');
    }
    return s;
  }

  // Hashes `info` verbatim.
  static HexStream from_info(std::string_view info,
                             int offset = kDefaultOffset) {
    return from_hex(md5_hex(info), offset);
  }

  int next() {
    const int value = digits_[(pass_count_ * offset_ + cursor_) % kDigits];
    if (++cursor_ == kDigits) {
      cursor_ = 0;
      ++pass_count_;
    }
    return value;
  }

  const std::string& digest_hex() const { return hex_; }
  const std::array<std::uint8_t, kDigits>& digits() const { return digits_; }
  int cursor() const { return cursor_; }
  std::uint64_t pass_count() const { return pass_count_; }
  int offset() const { return offset_; }

 private:
  HexStream() = default;

  static int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  }

  std::array<std::uint8_t, kDigits> digits_{};
  std::string hex_;
  int cursor_ = 0;
  std::uint64_t pass_count_ = 0;
  int offset_ = kDefaultOffset;
};

}  // namespace qgen

#endif  // QGEN_HEX_STREAM_HPP_
