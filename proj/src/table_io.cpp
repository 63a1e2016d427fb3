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

#include "fibeq/table_io.hpp"

#include <arpa/inet.h>

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "fibeq/errors.hpp"

namespace fibeq {
namespace {

std::uint64_t parse_decimal(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(std::string("invalid ") + what + " '" + std::string(s) +
                      "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Strips comments and whitespace; empty if nothing is left.
std::string_view content_of(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  return trim(line);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

uint128 address_bits(std::string_view text, AddressWidth width) {
  const std::string s(text);
  if (width.bits() == 32) {
    in_addr a{};
    if (inet_pton(AF_INET, s.c_str(), &a) != 1) {
      throw ConfigError("invalid IPv4 address '" + s + "'");
    }
    return static_cast<uint128>(ntohl(a.s_addr)) << 96;
  }
  in6_addr a{};
  if (inet_pton(AF_INET6, s.c_str(), &a) != 1) {
    throw ConfigError("invalid IPv6 address '" + s + "'");
  }
  uint128 v = 0;
  for (unsigned char byte : a.s6_addr) v = (v << 8) | byte;
  return v;
}

}  // namespace

Prefix parse_prefix(std::string_view text, AddressWidth width) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ConfigError("missing '/length' in prefix '" + std::string(text) +
                      "'");
  }
  const std::string_view body = text.substr(0, slash);
  const auto length = parse_decimal(text.substr(slash + 1), "prefix length");
  if (length > static_cast<std::uint64_t>(width.bits())) {
    throw ConfigError("prefix length " + std::to_string(length) +
                      " exceeds address width " + std::to_string(width.bits()));
  }
  const int len = static_cast<int>(length);
  if (len == 0 && (body == "0" || body.empty())) return Prefix{};

  uint128 bits;
  if (width.bits() == 32 || width.bits() == 128) {
    bits = address_bits(body, width);
  } else {
    if (body.size() != static_cast<std::size_t>(len)) {
      throw ConfigError("bit string '" + std::string(body) +
                        "' does not have length " + std::to_string(len));
    }
    return Prefix::from_bit_string(body);
  }
  const Prefix p = Prefix::from_bits(bits, len);
  if (p.bits() != bits) {
    throw ConfigError("host bits set past /" + std::to_string(len) + " in '" +
                      std::string(text) + "'");
  }
  return p;
}

std::string format_prefix(const Prefix& prefix, AddressWidth width) {
  if (prefix.is_default()) return "0/0";
  const std::string len = "/" + std::to_string(prefix.length());
  if (width.bits() == 32) {
    in_addr a{};
    a.s_addr = htonl(static_cast<std::uint32_t>(prefix.bits() >> 96));
    std::array<char, INET_ADDRSTRLEN> buf{};
    inet_ntop(AF_INET, &a, buf.data(), buf.size());
    return std::string(buf.data()) + len;
  }
  if (width.bits() == 128) {
    in6_addr a{};
    uint128 v = prefix.bits();
    for (int i = 15; i >= 0; --i) {
      a.s6_addr[i] = static_cast<unsigned char>(v & 0xff);
      v >>= 8;
    }
    std::array<char, INET6_ADDRSTRLEN> buf{};
    inet_ntop(AF_INET6, &a, buf.data(), buf.size());
    return std::string(buf.data()) + len;
  }
  return prefix.to_bit_string() + len;
}

ParsedTable parse_table(std::istream& in, AddressWidth width,
                        std::string name) {
  FibTable raw;
  raw.width = width;
  raw.name = std::move(name);
  std::vector<std::size_t> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = content_of(line);
    if (body.empty()) continue;
    const auto fields = split_ws(body);
    if (fields.size() != 2) {
      throw ParseError(lineno, "expected '<prefix>/<length> <nexthop>'");
    }
    try {
      raw.entries.push_back({parse_prefix(fields[0], width),
                             NextHopId{parse_decimal(fields[1], "next hop")}});
    } catch (const ConfigError& e) {
      throw ParseError(lineno, e.what());
    }
    lines.push_back(lineno);
  }
  try {
    CanonicalTable c = canonicalize_table(raw);
    return {std::move(c.table), c.duplicates};
  } catch (const MalformedEntryError& e) {
    throw ParseError(lines.at(e.line() - 1), e.what());
  }
}

ParsedTable parse_table_file(const std::filesystem::path& path,
                             AddressWidth width) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_table(in, width, path.filename().string());
}

std::optional<AddressWidth> infer_width(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = content_of(line);
    if (body.empty()) continue;
    const auto fields = split_ws(body);
    if (fields.empty()) continue;
    const std::string_view prefix = fields[0];
    const std::string_view addr = prefix.substr(0, prefix.find('/'));
    if (addr.find(':') != std::string_view::npos) return AddressWidth{128};
    if (addr.find('.') != std::string_view::npos) return AddressWidth{32};
    if (addr == "0" || addr.empty()) continue;  // 0/0 fits every width
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<AddressWidth> infer_width_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return infer_width(in);
}

void write_table(std::ostream& out, const FibTable& table) {
  for (const auto& e : table.entries) {
    out << format_prefix(e.prefix, table.width) << ' ' << e.nexthop.value
        << '\n';
  }
}

std::string serialize_table(const FibTable& table) {
  std::ostringstream out;
  write_table(out, table);
  return out.str();
}

}  // namespace fibeq
