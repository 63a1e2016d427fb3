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

#ifndef FIBEQ_TABLEGEN_HPP_
#define FIBEQ_TABLEGEN_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fibeq/fib_table.hpp"

namespace fibeq {

// Relative weight of each prefix length 1..W (index 0 is unused; the
// default route is always generated separately).
class LengthDistribution {
 public:
  // 60% of the weight on the top quartile of lengths, 30% on the middle
  // half and 10% on the bottom quartile. Widths below 4 are uniform.
  static LengthDistribution skewed(AddressWidth width);
  static LengthDistribution uniform(AddressWidth width);
  // Only prefixes of exactly `length` bits.
  static LengthDistribution fixed(AddressWidth width, int length);

  AddressWidth width() const { return width_; }
  std::uint64_t weight(int length) const {
    return weights_[static_cast<std::size_t>(length)];
  }

 private:
  explicit LengthDistribution(AddressWidth width)
      : width_(width),
        weights_(static_cast<std::size_t>(width.bits()) + 1, 0) {}

  AddressWidth width_;
  std::vector<std::uint64_t> weights_;
};

// Portable uniform draw in [0, bound); std distributions are not
// reproducible across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Random table with a 0/0 entry and `entries - 1` other distinct prefixes,
// hops drawn from 1..hop_count. Throws CapacityError when the distribution
// cannot supply that many distinct prefixes or `entries` exceeds 2^width.
FibTable gen_random_table(AddressWidth width, std::size_t entries,
                          std::uint64_t hop_count, std::uint64_t seed);
FibTable gen_random_table(const LengthDistribution& lengths,
                          std::size_t entries, std::uint64_t hop_count,
                          std::uint64_t seed);

// Smaller, forwarding-equivalent table: drops entries that repeat the hop
// they would inherit anyway and folds equal-hop sibling pairs into their
// parent, until neither applies. Needs a 0/0 entry (UsageError otherwise).
FibTable aggregate_equiv(const FibTable& table);

struct Mutation {
  FibTable table;
  std::vector<Prefix> prefixes;  // one per injected error
};

// Copy of `table` with `k` forwarding errors, each either a changed hop on
// an existing entry or a new entry, always with a hop unused by the table.
// Every error changes the forwarding of at least one address, and the
// regions of all errors, plus `exclude`, are pairwise disjoint. With n
// regions in play (k plus the excluded ones) each new region covers at most
// 1/2n of the space, so early picks cannot crowd out later ones. Throws
// UsageError for k = 0 and CapacityError if the table cannot host k errors.
Mutation mutate(const FibTable& table, std::size_t k, std::uint64_t seed,
                std::span<const Prefix> exclude = {});

}  // namespace fibeq

#endif  // FIBEQ_TABLEGEN_HPP_
