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

#include "fibeq/report_json.hpp"

#include <cstdio>
#include <sstream>

#include "fibeq/table_io.hpp"

namespace fibeq {
namespace {

using json = nlohmann::ordered_json;

std::string table_label(std::span<const FibTable> tables, std::size_t i) {
  const std::string& name = tables[i].name;
  return name.empty() ? "T" + std::to_string(i + 1) : name;
}

json tables_json(std::span<const FibTable> tables) {
  json out = json::array();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    out.push_back({{"name", table_label(tables, i)},
                   {"entries", tables[i].entries.size()}});
  }
  return out;
}

json metrics_json(const VerificationReport& report) {
  const MetricsContext& m = report.metrics;
  return {{"node_accesses", m.node_accesses},
          {"comparisons", m.comparisons},
          {"accesses_per_comparison", m.accesses_per_comparison()},
          {"build_ms", to_ms(m.build_time)},
          {"verify_ms", to_ms(m.verify_time)},
          {"nodes_allocated", m.nodes_allocated},
          {"nodes_real", report.structure.nodes_real},
          {"nodes_glue", report.structure.nodes_glue},
          {"est_memory_bytes", report.structure.est_memory_bytes}};
}

json hops_json(const std::vector<NextHopId>& hops) {
  json out = json::array();
  for (const NextHopId& h : hops) out.push_back(h.value);
  return out;
}

json bools_json(const std::vector<bool>& flags) {
  json out = json::array();
  for (bool f : flags) out.push_back(f);
  return out;
}

std::string verdict_of(const VerificationReport& report) {
  return report.equivalent ? "equivalent" : "not-equivalent";
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& report,
                              std::span<const FibTable> tables) {
  const AddressWidth width = common_width(tables);
  json divergences = json::array();
  for (const DivergenceRecord& d : report.divergences) {
    divergences.push_back({{"prefix", format_prefix(d.prefix, width)},
                           {"hops", hops_json(d.hops)},
                           {"synthesized_default", bools_json(d.synthesized)}});
  }
  return {{"tool", kToolName},
          {"algorithm", report.algorithm},
          {"verdict", verdict_of(report)},
          {"equivalent", report.equivalent},
          {"exhaustive", report.exhaustive},
          {"width", width.bits()},
          {"tables", tables_json(tables)},
          {"divergences", std::move(divergences)},
          {"metrics", metrics_json(report)}};
}

nlohmann::ordered_json leak_report_to_json(const LeakReport& report,
                                   std::span<const FibTable> tables) {
  const AddressWidth width = common_width(tables);
  json points = json::array();
  for (const LeakPoint& p : report.leak_points) {
    points.push_back({{"prefix", format_prefix(p.prefix, width)},
                      {"hops", hops_json(p.hops)},
                      {"default_derived", bools_json(p.default_derived)}});
  }
  json routes = json::array();
  for (std::uint64_t n : report.leaking_routes_per_table) routes.push_back(n);
  return {{"tool", kToolName},
          {"algorithm", "spacecheck"},
          {"verdict", report.has_leaks() ? "leaks" : "no-leaks"},
          {"width", width.bits()},
          {"tables", tables_json(tables)},
          {"leak_points", std::move(points)},
          {"leaking_routes_per_table", std::move(routes)},
          {"metrics",
           {{"node_accesses", report.metrics.node_accesses},
            {"comparisons", report.metrics.comparisons},
            {"build_ms", to_ms(report.metrics.build_time)},
            {"verify_ms", to_ms(report.metrics.verify_time)},
            {"nodes_allocated", report.metrics.nodes_allocated}}}};
}

nlohmann::ordered_json bench_row_to_json(const VerificationReport& report,
                                 std::span<const FibTable> tables,
                                 int repeats) {
  json row = report_to_json(report, tables);
  row["repeats"] = repeats;
  return row;
}

std::string report_to_text(const VerificationReport& report,
                           std::span<const FibTable> tables) {
  const AddressWidth width = common_width(tables);
  std::ostringstream out;
  out << verdict_of(report) << " (" << report.algorithm << ", "
      << tables.size() << " tables, W=" << width.bits() << ")\n";
  if (!report.exhaustive) out << "note: sampled check, not exhaustive\n";
  for (const DivergenceRecord& d : report.divergences) {
    out << "  diverges at " << format_prefix(d.prefix, width) << ":";
    for (std::size_t i = 0; i < d.hops.size(); ++i) {
      out << ' ' << table_label(tables, i) << '=' << d.hops[i].value;
      if (i < d.synthesized.size() && d.synthesized[i]) {
        out << "(synthesized default)";
      }
    }
    out << '\n';
  }
  const MetricsContext& m = report.metrics;
  out << "metrics: node_accesses=" << m.node_accesses
      << " comparisons=" << m.comparisons
      << " accesses/comparison=" << fixed3(m.accesses_per_comparison())
      << " build_ms=" << fixed3(to_ms(m.build_time))
      << " verify_ms=" << fixed3(to_ms(m.verify_time))
      << " nodes_real=" << report.structure.nodes_real
      << " nodes_glue=" << report.structure.nodes_glue
      << " est_memory_bytes=" << report.structure.est_memory_bytes << '\n';
  return out.str();
}

std::string leak_report_to_text(const LeakReport& report,
                                std::span<const FibTable> tables) {
  const AddressWidth width = common_width(tables);
  std::ostringstream out;
  out << (report.has_leaks() ? "leaks found" : "no leaks") << " ("
      << tables.size() << " tables, W=" << width.bits() << ")\n";
  for (const LeakPoint& p : report.leak_points) {
    out << "  leak at " << format_prefix(p.prefix, width) << ":";
    for (std::size_t i = 0; i < p.hops.size(); ++i) {
      out << ' ' << table_label(tables, i) << '=' << p.hops[i].value
          << (p.default_derived[i] ? "(default)" : "");
    }
    out << '\n';
  }
  out << "leaking routes per table:";
  for (std::size_t i = 0; i < report.leaking_routes_per_table.size(); ++i) {
    out << ' ' << table_label(tables, i) << '='
        << report.leaking_routes_per_table[i];
  }
  out << '\n';
  return out.str();
}

}  // namespace fibeq
