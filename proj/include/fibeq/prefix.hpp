// Copyright 2026 The fibeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIBEQ_PREFIX_HPP_
#define FIBEQ_PREFIX_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace fibeq {

__extension__ typedef unsigned __int128 uint128;

inline constexpr int kMaxWidth = 128;

// Number of leading zero bits of a 128-bit value (128 for zero).
constexpr int countl_zero128(uint128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  if (hi != 0) return __builtin_clzll(hi);
  if (lo != 0) return 64 + __builtin_clzll(lo);
  return 128;
}

// Mask with the `len` most significant bits set.
constexpr uint128 leading_mask(int len) {
  if (len <= 0) return 0;
  if (len >= 128) return ~uint128{0};
  return ~uint128{0} << (128 - len);
}

// Width of every address and prefix taking part in one run, in bits.
class AddressWidth {
 public:
  // Throws ConfigError unless 1 <= bits <= 128.
  explicit AddressWidth(int bits);

  constexpr int bits() const { return bits_; }
  friend constexpr bool operator==(AddressWidth, AddressWidth) = default;

 private:
  int bits_;
};

// A bit string of length 0..128, stored MSB-first and left-aligned in a
// 128-bit word. Bits past `length()` are always zero.
class Prefix {
 public:
  // The zero-length prefix 0/0.
  constexpr Prefix() = default;

  // Masks away any bits past `length`. Throws ConfigError if length is
  // outside 0..128.
  static Prefix from_bits(uint128 left_aligned, int length);

  // Parses a raw MSB-first bit string such as "0110". Throws ConfigError on
  // characters other than '0'/'1' or strings longer than 128.
  static Prefix from_bit_string(std::string_view bits);

  constexpr int length() const { return length_; }
  constexpr uint128 bits() const { return bits_; }
  constexpr bool is_default() const { return length_ == 0; }

  // Bit at position `index` counted from the most significant end.
  constexpr bool bit(int index) const {
    return ((bits_ >> (127 - index)) & 1) != 0;
  }

  Prefix truncated(int length) const;
  // The prefix one bit longer with `one` appended.
  Prefix child(bool one) const;

  // "0110"; empty for the default prefix.
  std::string to_bit_string() const;

  friend constexpr bool operator==(const Prefix&, const Prefix&) = default;
  friend constexpr std::strong_ordering operator<=>(const Prefix& a,
                                                    const Prefix& b) {
    if (a.length_ != b.length_) return a.length_ <=> b.length_;
    if (a.bits_ != b.bits_) {
      return a.bits_ < b.bits_ ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  constexpr Prefix(uint128 bits, int length) : bits_(bits), length_(length) {}

  uint128 bits_ = 0;
  int length_ = 0;
};

// A full-width address, left-aligned like Prefix. The width lives with the
// table or trie that interprets it.
struct Address {
  uint128 bits = 0;

  // Address number `index` (0 .. 2^width - 1) in a space of `width` bits.
  static Address from_index(std::uint64_t index, AddressWidth width);
  std::uint64_t index(AddressWidth width) const;
  Prefix as_prefix(AddressWidth width) const {
    return Prefix::from_bits(bits, width.bits());
  }

  friend constexpr bool operator==(const Address&, const Address&) = default;
};

// True iff the first p.length() bits of q equal p.
constexpr bool is_prefix_of(const Prefix& p, const Prefix& q) {
  if (p.length() > q.length()) return false;
  return ((p.bits() ^ q.bits()) & leading_mask(p.length())) == 0;
}

// Largest k such that the first k bits of p and q agree.
constexpr int common_prefix_length(const Prefix& p, const Prefix& q) {
  const int limit = p.length() < q.length() ? p.length() : q.length();
  const int lz = countl_zero128(p.bits() ^ q.bits());
  return lz < limit ? lz : limit;
}

// True iff `a` lies inside the address region of `p`.
constexpr bool contains(const Prefix& p, const Address& a) {
  return ((p.bits() ^ a.bits) & leading_mask(p.length())) == 0;
}

// Lowest and highest address covered by `p` in a space of `width` bits.
Address first_address(const Prefix& p);
Address last_address(const Prefix& p, AddressWidth width);

// Non-negative next-hop identifier (AS number or interface id).
struct NextHopId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(const NextHopId&,
                                    const NextHopId&) = default;
};

// Hop used for a default route that a table does not carry itself.
inline constexpr NextHopId kSynthesizedDefaultHop{0};

}  // namespace fibeq

template <>
struct std::hash<fibeq::Prefix> {
  std::size_t operator()(const fibeq::Prefix& p) const noexcept {
    const auto hi = static_cast<std::uint64_t>(p.bits() >> 64);
    const auto lo = static_cast<std::uint64_t>(p.bits());
    std::uint64_t h = hi * 0x9E3779B97F4A7C15ULL;
    h ^= lo + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(p.length()) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

#endif  // FIBEQ_PREFIX_HPP_
