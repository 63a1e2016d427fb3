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

// Text table format, one route per line:
//
//   <prefix>/<length> <nexthop>    # comment
//
// The prefix is dotted-quad for 32-bit tables, IPv6 colon-hex for 128-bit
// tables and a raw MSB-first bit string ("0110/4") for any other width.
// "0/0" is the default route in every notation. Blank lines and '#'
// comments are ignored; LF and CRLF line endings are accepted.

#ifndef FIBEQ_TABLE_IO_HPP_
#define FIBEQ_TABLE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "fibeq/fib_table.hpp"

namespace fibeq {

// Parses "10.0.0.0/8", "2001:db8::/32", "0110/4" or "0/0". Throws
// ConfigError with a description on malformed text.
Prefix parse_prefix(std::string_view text, AddressWidth width);
std::string format_prefix(const Prefix& prefix, AddressWidth width);

// Parsed and canonicalized table (duplicates collapsed last-wins).
struct ParsedTable {
  FibTable table;
  std::size_t duplicates = 0;
};

// Throws ParseError naming the line on any malformed line.
ParsedTable parse_table(std::istream& in, AddressWidth width,
                        std::string name = {});
ParsedTable parse_table_file(const std::filesystem::path& path,
                             AddressWidth width);

// 32 for dotted-quad, 128 for colon-hex; nullopt if the first route is in
// raw-bit form or the input has only 0/0 routes or none.
std::optional<AddressWidth> infer_width(std::istream& in);
std::optional<AddressWidth> infer_width_file(const std::filesystem::path& path);

void write_table(std::ostream& out, const FibTable& table);
std::string serialize_table(const FibTable& table);

}  // namespace fibeq

#endif  // FIBEQ_TABLE_IO_HPP_
