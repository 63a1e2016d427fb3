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

#include "fibeq/tablegen.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fibeq/errors.hpp"
#include "fibeq/joint_trie.hpp"
#include "fibeq/oracle.hpp"

namespace fibeq {

LengthDistribution LengthDistribution::skewed(AddressWidth width) {
  const int w = width.bits();
  if (w < 4) return uniform(width);
  LengthDistribution d(width);
  const int q = w / 4;
  // Bands: [1, q], [q + 1, w - q], [w - q + 1, w].
  const struct {
    int lo, hi;
    std::uint64_t share;
  } bands[] = {{1, q, 100}, {q + 1, w - q, 300}, {w - q + 1, w, 600}};
  constexpr std::uint64_t kScale = 720720;  // divisible by 1..16
  for (const auto& b : bands) {
    const auto count = static_cast<std::uint64_t>(b.hi - b.lo + 1);
    for (int len = b.lo; len <= b.hi; ++len) {
      d.weights_[static_cast<std::size_t>(len)] = b.share * kScale / count;
    }
  }
  return d;
}

LengthDistribution LengthDistribution::uniform(AddressWidth width) {
  LengthDistribution d(width);
  for (int len = 1; len <= width.bits(); ++len) {
    d.weights_[static_cast<std::size_t>(len)] = 1;
  }
  return d;
}

LengthDistribution LengthDistribution::fixed(AddressWidth width, int length) {
  if (length < 1 || length > width.bits()) {
    throw ConfigError("fixed prefix length must be within 1..width");
  }
  LengthDistribution d(width);
  d.weights_[static_cast<std::size_t>(length)] = 1;
  return d;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound is 0");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

namespace {

uint128 random_bits(std::mt19937_64& rng) {
  const uint128 hi = rng();
  const uint128 lo = rng();
  return (hi << 64) | lo;
}

// Number of distinct prefixes of `length` bits, saturated.
std::uint64_t prefixes_of_length(int length) {
  return length >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << length);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > ~std::uint64_t{0} - b ? ~std::uint64_t{0} : a + b;
}

}  // namespace

FibTable gen_random_table(AddressWidth width, std::size_t entries,
                          std::uint64_t hop_count, std::uint64_t seed) {
  return gen_random_table(LengthDistribution::skewed(width), entries,
                          hop_count, seed);
}

FibTable gen_random_table(const LengthDistribution& lengths,
                          std::size_t entries, std::uint64_t hop_count,
                          std::uint64_t seed) {
  if (entries < 1) throw UsageError("gen_random_table: entries must be >= 1");
  if (hop_count < 1) throw UsageError("gen_random_table: hop_count must be >= 1");
  const AddressWidth width = lengths.width();
  const int w = width.bits();
  if (w < 64 && entries > (std::uint64_t{1} << w)) {
    throw CapacityError("cannot draw " + std::to_string(entries) +
                        " distinct prefixes from a " + std::to_string(w) +
                        "-bit space");
  }
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(w) + 1, 0);
  std::uint64_t capacity = 1;  // the default route
  for (int len = 1; len <= w; ++len) {
    weight[static_cast<std::size_t>(len)] = lengths.weight(len);
    if (lengths.weight(len) > 0) {
      capacity = saturating_add(capacity, prefixes_of_length(len));
    }
  }
  if (entries > capacity) {
    throw CapacityError("length distribution allows only " +
                        std::to_string(capacity) + " distinct prefixes, " +
                        std::to_string(entries) + " requested");
  }

  std::mt19937_64 rng(seed);
  FibTable table;
  table.width = width;
  table.name = "gen-" + std::to_string(seed);
  table.entries.reserve(entries);
  table.entries.push_back({Prefix{}, NextHopId{1 + uniform_below(rng, hop_count)}});

  std::unordered_set<Prefix> seen{Prefix{}};
  std::vector<std::uint64_t> used(static_cast<std::size_t>(w) + 1, 0);
  while (table.entries.size() < entries) {
    std::uint64_t total = 0;
    for (auto x : weight) total += x;
    std::uint64_t pick = uniform_below(rng, total);
    int len = 1;
    while (pick >= weight[static_cast<std::size_t>(len)]) {
      pick -= weight[static_cast<std::size_t>(len)];
      ++len;
    }
    const Prefix p = Prefix::from_bits(random_bits(rng), len);
    if (!seen.insert(p).second) continue;
    table.entries.push_back({p, NextHopId{1 + uniform_below(rng, hop_count)}});
    if (len < 63 && ++used[static_cast<std::size_t>(len)] ==
                        prefixes_of_length(len)) {
      weight[static_cast<std::size_t>(len)] = 0;  // length exhausted
    }
  }
  return table;
}

namespace {

Prefix sibling_of(const Prefix& p) {
  return Prefix::from_bits(p.bits() ^ (uint128{1} << (128 - p.length())),
                           p.length());
}

std::vector<Prefix> sorted_prefixes(
    const std::unordered_map<Prefix, NextHopId>& routes) {
  std::vector<Prefix> out;
  out.reserve(routes.size());
  for (const auto& [p, h] : routes) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FibTable aggregate_equiv(const FibTable& table) {
  if (!table.default_hop().has_value()) {
    throw UsageError("aggregate_equiv needs a table with a 0/0 route");
  }
  std::unordered_map<Prefix, NextHopId> routes;
  for (const auto& e : table.entries) routes[e.prefix] = e.nexthop;

  auto inherited = [&](const Prefix& p) {
    for (int len = p.length() - 1; len >= 0; --len) {
      auto it = routes.find(p.truncated(len));
      if (it != routes.end()) return it->second;
    }
    return routes.at(Prefix{});
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // Shortest first, so every ancestor is already final.
    for (const Prefix& p : sorted_prefixes(routes)) {
      if (p.is_default()) continue;
      if (routes.at(p) == inherited(p)) {
        routes.erase(p);
        changed = true;
      }
    }
    auto order = sorted_prefixes(routes);
    std::reverse(order.begin(), order.end());
    for (const Prefix& p : order) {
      if (p.is_default()) continue;
      auto it = routes.find(p);
      if (it == routes.end()) continue;
      auto sib = routes.find(sibling_of(p));
      if (sib == routes.end() || sib->second != it->second) continue;
      const NextHopId hop = it->second;
      routes.erase(sib);
      routes.erase(p);
      routes[p.truncated(p.length() - 1)] = hop;
      changed = true;
    }
  }

  FibTable out;
  out.width = table.width;
  out.name = table.name + ".agg";
  for (const Prefix& p : sorted_prefixes(routes)) {
    out.entries.push_back({p, routes.at(p)});
  }
  return out;
}

namespace {

// True iff entries of `trie` with prefixes extending `region` (or equal to
// it) cover every address of `region`.
bool covered(const JointTrie& trie, const Prefix& region) {
  NodeId cur = trie.root();
  while (trie.node(cur).length() < region.length()) {
    const Prefix& here = trie.node(cur).prefix;
    const NodeId child =
        region.bit(here.length()) ? trie.node(cur).right : trie.node(cur).left;
    if (child == kNoNode) return false;
    const Prefix& next = trie.node(child).prefix;
    if (is_prefix_of(next, region)) {
      cur = child;
      continue;
    }
    // Only a strictly longer prefix (or nothing) sits inside the region.
    return false;
  }
  if (trie.node(cur).prefix != region) return false;
  if (trie.node(cur).is_real()) return true;
  if (region.length() >= trie.width().bits()) return false;
  return covered(trie, region.child(false)) && covered(trie, region.child(true));
}

// True iff some address of `region` has no entry longer than `region`.
bool reaches_address(const JointTrie& trie, const Prefix& region) {
  if (region.length() >= trie.width().bits()) return true;
  return !(covered(trie, region.child(false)) &&
           covered(trie, region.child(true)));
}

bool overlaps(const Prefix& a, const Prefix& b) {
  return is_prefix_of(a, b) || is_prefix_of(b, a);
}

void check_with_oracle(const FibTable& before, const Mutation& m) {
  const auto a = paint_address_space(before);
  const auto b = paint_address_space(m.table);
  std::vector<bool> hit(m.prefixes.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    const Address addr = Address::from_index(i, before.width);
    bool inside = false;
    for (std::size_t j = 0; j < m.prefixes.size(); ++j) {
      if (contains(m.prefixes[j], addr)) {
        hit[j] = true;
        inside = true;
      }
    }
    if (!inside) throw std::logic_error("mutation changed an unselected region");
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw std::logic_error("mutation without forwarding effect");
  }
}

}  // namespace

Mutation mutate(const FibTable& table, std::size_t k, std::uint64_t seed,
                std::span<const Prefix> exclude) {
  if (k < 1) throw UsageError("mutate: k must be >= 1");
  const AddressWidth width = table.width;
  const int w = width.bits();

  MetricsContext scratch;
  const FibTable one[] = {table};
  const JointTrie trie = build_joint_pt(one, scratch);

  std::uint64_t fresh = 1;
  std::unordered_map<Prefix, std::size_t> position;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    fresh = std::max(fresh, table.entries[i].nexthop.value + 1);
    position[table.entries[i].prefix] = i;
  }

  Mutation out{table, {}};
  out.table.name = table.name + ".mut";
  std::vector<Prefix> taken(exclude.begin(), exclude.end());
  std::mt19937_64 rng(seed);
  const LengthDistribution lengths = LengthDistribution::skewed(width);
  std::uint64_t total_weight = 0;
  for (int len = 1; len <= w; ++len) total_weight += lengths.weight(len);

  // A broad region (the default route, a /1) would leave no room for the
  // rest, so with n regions in play each one spans at most 1/2n of the
  // space.
  const int min_length =
      std::min(w, static_cast<int>(std::bit_width(k + exclude.size() - 1)) +
                      (k + exclude.size() > 1 ? 1 : 0));

  const std::size_t max_attempts = 400 * k + 4000;
  for (std::size_t attempt = 0;
       attempt < max_attempts && out.prefixes.size() < k; ++attempt) {
    Prefix candidate;
    const std::uint64_t mode = uniform_below(rng, 4);
    if (mode < 2 && !table.entries.empty()) {
      candidate = table.entries[uniform_below(rng, table.entries.size())].prefix;
    } else if (mode == 2 && !table.entries.empty()) {
      // A more specific route under an existing one.
      const Prefix base =
          table.entries[uniform_below(rng, table.entries.size())].prefix;
      if (base.length() >= w) continue;
      const int room = std::min(w - base.length(), 8);
      const int len = base.length() + 1 +
                      static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(room)));
      const uint128 host = random_bits(rng) & ~leading_mask(base.length());
      candidate = Prefix::from_bits(base.bits() | host, len);
    } else {
      std::uint64_t pick = uniform_below(rng, total_weight);
      int len = 1;
      while (pick >= lengths.weight(len)) {
        pick -= lengths.weight(len);
        ++len;
      }
      candidate = Prefix::from_bits(random_bits(rng), len);
    }

    if (candidate.length() < min_length) continue;
    if (std::any_of(taken.begin(), taken.end(), [&](const Prefix& t) {
          return overlaps(t, candidate);
        })) {
      continue;
    }
    if (!reaches_address(trie, candidate)) continue;

    const NextHopId hop{fresh++};
    if (auto it = position.find(candidate); it != position.end()) {
      out.table.entries[it->second].nexthop = hop;
    } else {
      out.table.entries.push_back({candidate, hop});
    }
    taken.push_back(candidate);
    out.prefixes.push_back(candidate);
  }

  if (out.prefixes.size() < k) {
    throw CapacityError("table too small or saturated to host " +
                        std::to_string(k) + " disjoint errors (placed " +
                        std::to_string(out.prefixes.size()) + ")");
  }
  if (w <= 16) check_with_oracle(table, out);
  return out;
}

}  // namespace fibeq
