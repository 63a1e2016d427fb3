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

#ifndef FIBEQ_SPACECHECK_HPP_
#define FIBEQ_SPACECHECK_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "fibeq/fib_table.hpp"
#include "fibeq/metrics.hpp"

namespace fibeq {

// A REAL node at which some tables fall through to their default route
// while others have a more specific route. Only nodes that are the longest
// match for at least one address are reported; a node whose space is fully
// covered by more specific routes has no address that could leak.
struct LeakPoint {
  Prefix prefix;
  std::vector<bool> default_derived;  // per table
  std::vector<NextHopId> hops;        // resolved, per table
};

struct LeakReport {
  std::vector<LeakPoint> leak_points;
  // Per table: number of maximal subtrees in which that table resolves via
  // its default while another table has a specific route.
  std::vector<std::uint64_t> leaking_routes_per_table;
  MetricsContext metrics;

  bool has_leaks() const { return !leak_points.empty(); }
};

// Needs at least two tables of one width.
LeakReport detect_leaks(std::span<const FibTable> tables);

// Union of all prefixes. When several tables carry a prefix, the hop of the
// lowest-index table is kept.
FibTable merge_super(std::span<const FibTable> tables);

}  // namespace fibeq

#endif  // FIBEQ_SPACECHECK_HPP_
