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

#include "fibeq/prefix.hpp"

#include "fibeq/errors.hpp"

namespace fibeq {

AddressWidth::AddressWidth(int bits) : bits_(bits) {
  if (bits < 1 || bits > kMaxWidth) {
    throw ConfigError("address width must be within 1..128, got " +
                      std::to_string(bits));
  }
}

Prefix Prefix::from_bits(uint128 left_aligned, int length) {
  if (length < 0 || length > kMaxWidth) {
    throw ConfigError("prefix length must be within 0..128, got " +
                      std::to_string(length));
  }
  return Prefix(left_aligned & leading_mask(length), length);
}

Prefix Prefix::from_bit_string(std::string_view bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxWidth)) {
    throw ConfigError("bit string longer than 128 bits");
  }
  uint128 v = 0;
  int i = 0;
  for (char c : bits) {
    if (c == '1') {
      v |= uint128{1} << (127 - i);
    } else if (c != '0') {
      throw ConfigError("invalid bit '" + std::string(1, c) +
                        "' in bit string");
    }
    ++i;
  }
  return Prefix(v, i);
}

Prefix Prefix::truncated(int length) const {
  if (length >= length_) return *this;
  return from_bits(bits_, length);
}

Prefix Prefix::child(bool one) const {
  if (length_ >= kMaxWidth) {
    throw ConfigError("cannot extend a 128-bit prefix");
  }
  uint128 v = bits_;
  if (one) v |= uint128{1} << (127 - length_);
  return Prefix(v, length_ + 1);
}

std::string Prefix::to_bit_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int i = 0; i < length_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

Address Address::from_index(std::uint64_t index, AddressWidth width) {
  const int w = width.bits();
  if (w > 64) return Address{static_cast<uint128>(index)};
  return Address{static_cast<uint128>(index) << (128 - w)};
}

std::uint64_t Address::index(AddressWidth width) const {
  const int w = width.bits();
  if (w > 64) return static_cast<std::uint64_t>(bits);
  return static_cast<std::uint64_t>(bits >> (128 - w));
}

Address first_address(const Prefix& p) { return Address{p.bits()}; }

Address last_address(const Prefix& p, AddressWidth width) {
  const uint128 host = leading_mask(width.bits()) & ~leading_mask(p.length());
  return Address{p.bits() | host};
}

}  // namespace fibeq
