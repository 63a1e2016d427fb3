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

#ifndef FIBEQ_FIB_TABLE_HPP_
#define FIBEQ_FIB_TABLE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibeq/prefix.hpp"

namespace fibeq {

struct FibEntry {
  Prefix prefix;
  NextHopId nexthop;

  friend bool operator==(const FibEntry&, const FibEntry&) = default;
};

// One router's forwarding table. Entry order is the file order.
struct FibTable {
  AddressWidth width{32};
  std::vector<FibEntry> entries;
  std::string name;

  // Hop of the 0/0 entry, if the table has one.
  std::optional<NextHopId> default_hop() const;
  std::size_t size() const { return entries.size(); }
};

// Tables compare equal when width and entries match; the name is a label.
bool operator==(const FibTable& a, const FibTable& b);

struct CanonicalTable {
  FibTable table;
  std::size_t duplicates = 0;
};

// Collapses duplicate prefixes (the last hop wins, the first position is
// kept) and rejects prefixes longer than the table width. The error names
// the 1-based entry position.
CanonicalTable canonicalize_table(const FibTable& table);

// Throws ConfigError unless every table has the same width. Returns it.
AddressWidth common_width(std::span<const FibTable> tables);

}  // namespace fibeq

#endif  // FIBEQ_FIB_TABLE_HPP_
