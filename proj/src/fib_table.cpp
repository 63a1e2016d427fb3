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

#include "fibeq/fib_table.hpp"

#include <unordered_map>

#include "fibeq/errors.hpp"

namespace fibeq {

std::optional<NextHopId> FibTable::default_hop() const {
  std::optional<NextHopId> hop;
  for (const auto& e : entries) {
    if (e.prefix.is_default()) hop = e.nexthop;
  }
  return hop;
}

bool operator==(const FibTable& a, const FibTable& b) {
  return a.width == b.width && a.entries == b.entries;
}

CanonicalTable canonicalize_table(const FibTable& table) {
  CanonicalTable out;
  out.table.width = table.width;
  out.table.name = table.name;
  out.table.entries.reserve(table.entries.size());

  std::unordered_map<Prefix, std::size_t> position;
  position.reserve(table.entries.size());
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const FibEntry& e = table.entries[i];
    if (e.prefix.length() > table.width.bits()) {
      throw MalformedEntryError(
          i + 1, "prefix length " + std::to_string(e.prefix.length()) +
                     " exceeds address width " +
                     std::to_string(table.width.bits()));
    }
    auto [it, inserted] = position.try_emplace(e.prefix,
                                               out.table.entries.size());
    if (inserted) {
      out.table.entries.push_back(e);
    } else {
      out.table.entries[it->second].nexthop = e.nexthop;
      ++out.duplicates;
    }
  }
  return out;
}

AddressWidth common_width(std::span<const FibTable> tables) {
  if (tables.empty()) throw UsageError("at least one table is required");
  const AddressWidth w = tables.front().width;
  for (const auto& t : tables) {
    if (t.width != w) {
      throw ConfigError("tables have mixed address widths (" +
                        std::to_string(w.bits()) + " and " +
                        std::to_string(t.width.bits()) + ")");
    }
  }
  return w;
}

}  // namespace fibeq
