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

#include "fibeq/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "fibeq/errors.hpp"
#include "fibeq/joint_trie.hpp"

namespace fibeq {

std::optional<NextHopId> lpm_linear(const FibTable& table,
                                    const Address& address) {
  std::optional<NextHopId> best;
  int best_len = -1;
  for (const auto& e : table.entries) {
    if (e.prefix.length() > best_len && contains(e.prefix, address)) {
      best = e.nexthop;
      best_len = e.prefix.length();
    }
  }
  return best;
}

LengthIndexedLpm::LengthIndexedLpm(const FibTable& table)
    : width_(table.width) {
  std::vector<bool> seen(kMaxWidth + 1, false);
  routes_.reserve(table.entries.size());
  for (const auto& e : table.entries) {
    routes_[e.prefix] = e.nexthop;
    seen[static_cast<std::size_t>(e.prefix.length())] = true;
  }
  for (int len = kMaxWidth; len >= 0; --len) {
    if (seen[static_cast<std::size_t>(len)]) lengths_.push_back(len);
  }
}

std::optional<NextHopId> LengthIndexedLpm::lookup(
    const Address& address) const {
  for (int len : lengths_) {
    auto it = routes_.find(Prefix::from_bits(address.bits, len));
    if (it != routes_.end()) return it->second;
  }
  return std::nullopt;
}

namespace {

void check_enumerable(AddressWidth width) {
  if (width.bits() > kMaxEnumerationWidth) {
    throw CapacityError(
        "exhaustive enumeration is limited to widths <= " +
        std::to_string(kMaxEnumerationWidth) + " bits (got " +
        std::to_string(width.bits()) + "); use sampled_verify instead");
  }
}

std::vector<std::vector<NextHopId>> resolved_spaces(
    std::span<const FibTable> tables) {
  std::vector<std::vector<NextHopId>> spaces;
  spaces.reserve(tables.size());
  for (const auto& t : tables) {
    const auto painted = paint_address_space(t);
    std::vector<NextHopId> hops(painted.size());
    for (std::size_t a = 0; a < painted.size(); ++a) {
      hops[a] = painted[a].value_or(kSynthesizedDefaultHop);
    }
    spaces.push_back(std::move(hops));
  }
  return spaces;
}

// Groups disagreements by the joint-trie LPM prefix of their address.
void group_into_report(std::span<const FibTable> tables,
                       const std::vector<Disagreement>& found,
                       VerificationReport& report) {
  report.equivalent = found.empty();
  if (found.empty()) return;

  MetricsContext scratch;
  const JointTrie trie = build_joint_pt(tables, scratch);
  std::vector<bool> missing_default(tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    missing_default[i] = !tables[i].default_hop().has_value();
  }
  std::map<NodeId, std::size_t> region_of;
  for (const auto& d : found) {
    const NodeId n = trie.lpm_lookup(d.address, scratch);
    auto [it, inserted] = region_of.try_emplace(n, report.divergences.size());
    if (!inserted) continue;
    DivergenceRecord rec;
    rec.prefix = trie.node(n).prefix;
    rec.hops = d.hops;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      rec.synthesized.push_back(missing_default[i] &&
                                !trie.resolve(n, i).has_value());
    }
    report.divergences.push_back(std::move(rec));
  }
}

}  // namespace

std::vector<std::optional<NextHopId>> paint_address_space(
    const FibTable& table) {
  check_enumerable(table.width);
  const int w = table.width.bits();
  std::vector<std::optional<NextHopId>> space(std::size_t{1} << w);

  std::vector<const FibEntry*> order;
  order.reserve(table.entries.size());
  for (const auto& e : table.entries) order.push_back(&e);
  // Stable, so a later duplicate overwrites an earlier one.
  std::stable_sort(order.begin(), order.end(),
                   [](const FibEntry* a, const FibEntry* b) {
                     return a->prefix.length() < b->prefix.length();
                   });
  for (const FibEntry* e : order) {
    const std::uint64_t lo = first_address(e->prefix).index(table.width);
    const std::uint64_t count = std::uint64_t{1} << (w - e->prefix.length());
    std::fill_n(space.begin() + static_cast<std::ptrdiff_t>(lo), count,
                e->nexthop);
  }
  return space;
}

std::vector<Disagreement> find_disagreements(
    std::span<const FibTable> tables) {
  const AddressWidth width = common_width(tables);
  check_enumerable(width);
  const auto spaces = resolved_spaces(tables);
  std::vector<Disagreement> out;
  const std::size_t n = std::size_t{1} << width.bits();
  for (std::size_t a = 0; a < n; ++a) {
    bool differ = false;
    for (std::size_t t = 1; t < spaces.size(); ++t) {
      if (spaces[t][a] != spaces[0][a]) {
        differ = true;
        break;
      }
    }
    if (!differ) continue;
    Disagreement d{Address::from_index(a, width), {}};
    for (const auto& s : spaces) d.hops.push_back(s[a]);
    out.push_back(std::move(d));
  }
  return out;
}

VerificationReport brute_force_verify(std::span<const FibTable> tables) {
  VerificationReport report;
  report.algorithm = "brute-force";
  std::vector<Disagreement> found;
  {
    ScopedTimer timer(&report.metrics.verify_time);
    found = find_disagreements(tables);
    report.metrics.comparisons = std::uint64_t{1}
                                 << common_width(tables).bits();
  }
  group_into_report(tables, found, report);
  return report;
}

VerificationReport sampled_verify(std::span<const FibTable> tables,
                                  std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw UsageError("sampled_verify needs samples >= 1");
  const AddressWidth width = common_width(tables);
  VerificationReport report;
  report.algorithm = "sampled";
  report.exhaustive = false;

  std::vector<Address> probes;
  std::mt19937_64 rng(seed);
  const uint128 mask = leading_mask(width.bits());
  for (std::uint64_t i = 0; i < samples; ++i) {
    const uint128 hi = rng();
    const uint128 lo = rng();
    probes.push_back(Address{((hi << 64) | lo) & mask});
  }
  for (const auto& t : tables) {
    for (const auto& e : t.entries) {
      probes.push_back(first_address(e.prefix));
      probes.push_back(last_address(e.prefix, width));
    }
  }

  std::vector<Disagreement> found;
  {
    ScopedTimer timer(&report.metrics.verify_time);
    std::vector<LengthIndexedLpm> index;
    index.reserve(tables.size());
    for (const auto& t : tables) index.emplace_back(t);
    for (const Address& a : probes) {
      Disagreement d{a, {}};
      for (const auto& lpm : index) {
        d.hops.push_back(lpm.lookup(a).value_or(kSynthesizedDefaultHop));
      }
      ++report.metrics.comparisons;
      if (std::any_of(d.hops.begin(), d.hops.end(),
                      [&](NextHopId h) { return h != d.hops.front(); })) {
        found.push_back(std::move(d));
      }
    }
  }
  group_into_report(tables, found, report);
  return report;
}

}  // namespace fibeq
