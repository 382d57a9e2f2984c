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

// RFC 1321 message digest. Used only to spread student identifiers over the
// generator's digit stream; no security properties are assumed.

#ifndef QGEN_MD5_HPP_
#define QGEN_MD5_HPP_

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

namespace qgen {

using Md5Digest = std::array<std::uint8_t, 16>;

namespace detail {

class Md5 {
 public:
  void update(std::string_view data) {
    for (char c : data) {
      buffer_[buffer_len_++] = static_cast<std::uint8_t>(c);
      if (buffer_len_ == 64) {
        transform();
        buffer_len_ = 0;
      }
    }
    bit_len_ += static_cast<std::uint64_t>(data.size()) * 8;
  }

  Md5Digest finish() {
    const std::uint64_t bits = bit_len_;
    buffer_[buffer_len_++] = 0x80;
    if (buffer_len_ > 56) {
      while (buffer_len_ < 64) buffer_[buffer_len_++] = 0;
      transform();
      buffer_len_ = 0;
    }
    while (buffer_len_ < 56) buffer_[buffer_len_++] = 0;
    for (int i = 0; i < 8; ++i) {
      buffer_[56 + i] = static_cast<std::uint8_t>(bits >> (8 * i));
    }
    transform();

    Md5Digest out{};
    for (int i = 0; i < 4; ++i) {
      for (int b = 0; b < 4; ++b) {
        out[4 * i + b] = static_cast<std::uint8_t>(state_[i] >> (8 * b));
      }
    }
    return out;
  }

 private:
  static constexpr std::uint32_t rotl(std::uint32_t x, int c) {
    return (x << c) | (x >> (32 - c));
  }

  void transform() {
    // Per-round shift amounts and the sine-derived constants of RFC 1321.
    static constexpr int kShift[64] = {
        7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
        5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20,
        4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
        6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21};
    static constexpr std::uint32_t kSine[64] = {
        0xd76aa478, 0xe8c7b756, 0x242070db, 0xc1bdceee, 0xf57c0faf,
        0x4787c62a, 0xa8304613, 0xfd469501, 0x698098d8, 0x8b44f7af,
        0xffff5bb1, 0x895cd7be, 0x6b901122, 0xfd987193, 0xa679438e,
        0x49b40821, 0xf61e2562, 0xc040b340, 0x265e5a51, 0xe9b6c7aa,
        0xd62f105d, 0x02441453, 0xd8a1e681, 0xe7d3fbc8, 0x21e1cde6,
        0xc33707d6, 0xf4d50d87, 0x455a14ed, 0xa9e3e905, 0xfcefa3f8,
        0x676f02d9, 0x8d2a4c8a, 0xfffa3942, 0x8771f681, 0x6d9d6122,
        0xfde5380c, 0xa4beea44, 0x4bdecfa9, 0xf6bb4b60, 0xbebfbc70,
        0x289b7ec6, 0xeaa127fa, 0xd4ef3085, 0x04881d05, 0xd9d4d039,
        0xe6db99e5, 0x1fa27cf8, 0xc4ac5665, 0xf4292244, 0x432aff97,
        0xab9423a7, 0xfc93a039, 0x655b59c3, 0x8f0ccc92, 0xffeff47d,
        0x85845dd1, 0x6fa87e4f, 0xfe2ce6e0, 0xa3014314, 0x4e0811a1,
        0xf7537e82, 0xbd3af235, 0x2ad7d2bb, 0xeb86d391};

    std::uint32_t m[16];
    for (int i = 0; i < 16; ++i) {
      m[i] = static_cast<std::uint32_t>(buffer_[4 * i]) |
             static_cast<std::uint32_t>(buffer_[4 * i + 1]) << 8 |
             static_cast<std::uint32_t>(buffer_[4 * i + 2]) << 16 |
             static_cast<std::uint32_t>(buffer_[4 * i + 3]) << 24;
    }

    std::uint32_t a = state_[0], b = state_[1], c = state_[2], d = state_[3];
    for (int i = 0; i < 64; ++i) {
      std::uint32_t f;
      int g;
      if (i < 16) {
        f = (b & c) | (~b & d);
        g = i;
      } else if (i < 32) {
        f = (d & b) | (~d & c);
        g = (5 * i + 1) % 16;
      } else if (i < 48) {
        f = b ^ c ^ d;
        g = (3 * i + 5) % 16;
      } else {
        f = c ^ (b | ~d);
        g = (7 * i) % 16;
      }
      const std::uint32_t next = b + rotl(a + f + kSine[i] + m[g], kShift[i]);
      a = d;
      d = c;
      c = b;
      b = next;
    }
    state_[0] += a;
    state_[1] += b;
    state_[2] += c;
    state_[3] += d;
  }

  std::uint32_t state_[4] = {0x67452301, 0xefcdab89, 0x98badcfe, 0x10325476};
  std::uint8_t buffer_[64] = {};
  std::size_t buffer_len_ = 0;
  std::uint64_t bit_len_ = 0;
};

}  // namespace detail

inline Md5Digest md5(std::string_view data) {
  detail::Md5 h;
  h.update(data);
  return h.finish();
}

// 32 lowercase hex characters.
inline std::string md5_hex(std::string_view data) {
  static constexpr char kHex[] = "0123456789abcdef";
  const Md5Digest digest = md5(data);
  std::string out;
  out.reserve(32);
  for (std::uint8_t byte : digest) {
    out += kHex[byte >> 4];
    out += kHex[byte & 0xF];
  }
  return out;
}

}  // namespace qgen

#endif  // QGEN_MD5_HPP_
