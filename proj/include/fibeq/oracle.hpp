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

// Ground truth for everything else in the library. Nothing here uses a trie
// to decide forwarding; the joint trie is only used to name the regions in
// which disagreeing addresses are grouped.

#ifndef FIBEQ_ORACLE_HPP_
#define FIBEQ_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fibeq/fib_table.hpp"
#include "fibeq/verifier.hpp"

namespace fibeq {

// Largest width brute_force_verify will enumerate.
inline constexpr int kMaxEnumerationWidth = 20;

// Scans every entry; hop of the longest matching prefix, or nullopt.
std::optional<NextHopId> lpm_linear(const FibTable& table,
                                    const Address& address);

// Exact-match map per prefix length, probed from the longest length down.
class LengthIndexedLpm {
 public:
  explicit LengthIndexedLpm(const FibTable& table);
  std::optional<NextHopId> lookup(const Address& address) const;

 private:
  AddressWidth width_;
  std::vector<int> lengths_;  // distinct lengths, longest first
  std::unordered_map<Prefix, NextHopId> routes_;
};

// Hop of every address of the table's space (index = Address::index),
// written by painting entries from the shortest prefix to the longest.
// Throws CapacityError above kMaxEnumerationWidth.
std::vector<std::optional<NextHopId>> paint_address_space(
    const FibTable& table);

struct Disagreement {
  Address address;
  std::vector<NextHopId> hops;
};

// Every address at which the tables forward differently, a missing default
// route counting as kSynthesizedDefaultHop. Ascending address order.
std::vector<Disagreement> find_disagreements(std::span<const FibTable> tables);

// Exhaustive check over all 2^W addresses. Disagreeing addresses are
// grouped by the joint trie's LPM prefix; each record carries the hops of
// the first address in its region. Throws CapacityError when the width
// exceeds kMaxEnumerationWidth.
VerificationReport brute_force_verify(std::span<const FibTable> tables);

// Random spot check, reproducible from `seed`. Besides `samples` random
// addresses it always probes the first and last address of every entry
// prefix. The report is marked non-exhaustive.
VerificationReport sampled_verify(std::span<const FibTable> tables,
                                  std::uint64_t samples, std::uint64_t seed);

}  // namespace fibeq

#endif  // FIBEQ_ORACLE_HPP_
