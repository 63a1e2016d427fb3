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

#include "fibeq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibeq/baselines.hpp"
#include "fibeq/errors.hpp"
#include "fibeq/report_json.hpp"
#include "fibeq/spacecheck.hpp"
#include "fibeq/table_io.hpp"
#include "fibeq/tablegen.hpp"
#include "fibeq/verifier.hpp"

namespace fibeq {
namespace {

enum class OutputFormat { kHuman, kJson };

struct Options {
  std::vector<std::string> paths;
  std::optional<int> width;
  std::string algorithm = "veritable";
  std::vector<std::string> algorithms;
  OutputFormat output = OutputFormat::kHuman;
  std::uint64_t seed = 1;
  std::size_t entries = 10000;
  std::uint64_t hops = 16;
  std::size_t errors = 0;
  int repeats = 1;
  std::string out_path;
};

const std::vector<std::string> kAlgorithms = {"veritable", "taco",
                                              "normalization"};

AddressWidth resolve_width(const Options& o) {
  if (o.width) return AddressWidth{*o.width};
  std::optional<AddressWidth> found;
  for (const std::string& path : o.paths) {
    const auto w = infer_width_file(path);
    if (!w) continue;
    if (found && *found != *w) {
      throw ConfigError("tables use different address notations");
    }
    found = w;
  }
  if (!found) {
    throw UsageError(
        "--width is required for raw bit-string tables (width cannot be "
        "inferred)");
  }
  return *found;
}

std::vector<FibTable> load_tables(const Options& o, std::ostream& err) {
  const AddressWidth width = resolve_width(o);
  std::vector<FibTable> tables;
  for (const std::string& path : o.paths) {
    try {
      ParsedTable parsed = parse_table_file(path, width);
      if (parsed.duplicates > 0) {
        err << "warning: " << path << ": " << parsed.duplicates
            << " duplicate prefix(es) collapsed, last next hop kept\n";
      }
      tables.push_back(std::move(parsed.table));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), path + ": " + e.what());
    }
  }
  return tables;
}

void require_tables(std::size_t n, std::size_t min, const char* what) {
  if (n < min) {
    throw UsageError(std::string(what) + " needs at least " +
                     std::to_string(min) + " tables, got " +
                     std::to_string(n));
  }
}

void check_arity(const std::string& algorithm, std::size_t tables) {
  if (algorithm != "veritable" && tables != 2) {
    throw UsageError(
        algorithm +
        " compares exactly two tables; checking n tables pairwise costs "
        "(n-1)*n runs, use --algorithm veritable for n > 2");
  }
}

VerificationReport run_algorithm(const std::string& algorithm,
                                 std::span<const FibTable> tables) {
  check_arity(algorithm, tables.size());
  if (algorithm == "veritable") return verify(tables);
  if (algorithm == "taco") return taco_verify(tables[0], tables[1]);
  return normalization_verify(tables[0], tables[1]);
}

// Writes to -o or stdout.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty() || o.out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error("cannot write " + o.out_path);
  file << text;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require_tables(o.paths.size(), 2, "verify");
  check_arity(o.algorithm, o.paths.size());
  const std::vector<FibTable> tables = load_tables(o, err);
  const VerificationReport report = run_algorithm(o.algorithm, tables);
  emit(o,
       o.output == OutputFormat::kJson
           ? report_to_json(report, tables).dump(2) + "\n"
           : report_to_text(report, tables),
       out);
  return report.equivalent ? kExitOk : kExitFinding;
}

int cmd_blackholes(const Options& o, std::ostream& out, std::ostream& err) {
  require_tables(o.paths.size(), 2, "blackholes");
  const std::vector<FibTable> tables = load_tables(o, err);
  const LeakReport report = detect_leaks(tables);
  emit(o,
       o.output == OutputFormat::kJson
           ? leak_report_to_json(report, tables).dump(2) + "\n"
           : leak_report_to_text(report, tables),
       out);
  return report.has_leaks() ? kExitFinding : kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const AddressWidth width{o.width.value_or(32)};
  const FibTable table = gen_random_table(width, o.entries, o.hops, o.seed);
  emit(o, serialize_table(table), out);
  return kExitOk;
}

FibTable load_single(const Options& o, std::ostream& err, const char* what) {
  if (o.paths.size() != 1) {
    throw UsageError(std::string(what) + " takes exactly one table");
  }
  return load_tables(o, err).front();
}

int cmd_aggregate(const Options& o, std::ostream& out, std::ostream& err) {
  const FibTable table = load_single(o, err, "aggregate");
  emit(o, serialize_table(aggregate_equiv(table)), out);
  return kExitOk;
}

int cmd_mutate(const Options& o, std::ostream& out, std::ostream& err) {
  const FibTable table = load_single(o, err, "mutate");
  const Mutation m = mutate(table, o.errors, o.seed);
  std::string text;
  for (const Prefix& p : m.prefixes) {
    text += "# mutated " + format_prefix(p, table.width) + "\n";
  }
  emit(o, text + serialize_table(m.table), out);
  return kExitOk;
}

std::vector<FibTable> bench_tables(const Options& o, std::ostream& err) {
  if (!o.paths.empty()) {
    require_tables(o.paths.size(), 2, "bench");
    return load_tables(o, err);
  }
  const AddressWidth width{o.width.value_or(32)};
  FibTable base = gen_random_table(width, o.entries, o.hops, o.seed);
  base.name = "generated";
  FibTable other = aggregate_equiv(base);
  if (o.errors > 0) other = mutate(other, o.errors, o.seed + 1).table;
  other.name = "generated-aggregated";
  return {std::move(base), std::move(other)};
}

template <typename Duration>
Duration median_of(std::vector<Duration> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.repeats < 1) throw UsageError("--repeats must be at least 1");
  const std::vector<FibTable> tables = bench_tables(o, err);
  std::vector<std::string> algorithms = o.algorithms;
  if (algorithms.empty()) {
    algorithms = tables.size() == 2 ? kAlgorithms
                                    : std::vector<std::string>{"veritable"};
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::string text;
  for (const std::string& algorithm : algorithms) {
    std::vector<std::chrono::nanoseconds> build, verify_times;
    VerificationReport first;
    for (int r = 0; r < o.repeats; ++r) {
      VerificationReport report = run_algorithm(algorithm, tables);
      build.push_back(report.metrics.build_time);
      verify_times.push_back(report.metrics.verify_time);
      if (r == 0) first = std::move(report);
    }
    first.metrics.build_time = median_of(build);
    first.metrics.verify_time = median_of(verify_times);
    rows.push_back(bench_row_to_json(first, tables, o.repeats));
    text += report_to_text(first, tables);
  }
  emit(o, o.output == OutputFormat::kJson ? rows.dump(2) + "\n" : text, out);
  return kExitOk;
}

void add_paths(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("tables", o.paths, "Table files");
  if (required) opt->required();
}

void add_width(CLI::App* cmd, Options& o) {
  cmd->add_option("--width,-w", o.width,
                  "Address width in bits (inferred for dotted-quad and "
                  "colon-hex tables)")
      ->check(CLI::Range(1, 128));
}

void add_output_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--output", o.output, "Report format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"human", OutputFormat::kHuman},
                                              {"json", OutputFormat::kJson}}));
}

void add_out_path(CLI::App* cmd, Options& o) {
  cmd->add_option("-o,--out", o.out_path, "Write to file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Forwarding-table equivalence verifier", "fibeq"};
  app.require_subcommand(1);
  Options o;

  auto* verify_cmd =
      app.add_subcommand("verify", "Check tables for forwarding equivalence");
  add_paths(verify_cmd, o, true);
  add_width(verify_cmd, o);
  add_output_format(verify_cmd, o);
  add_out_path(verify_cmd, o);
  verify_cmd
      ->add_option("--algorithm,-a", o.algorithm, "veritable|taco|normalization")
      ->check(CLI::IsMember(kAlgorithms));

  auto* leaks_cmd = app.add_subcommand(
      "blackholes", "Report regions one table leaks to its default route");
  add_paths(leaks_cmd, o, true);
  add_width(leaks_cmd, o);
  add_output_format(leaks_cmd, o);
  add_out_path(leaks_cmd, o);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random table");
  add_width(gen_cmd, o);
  gen_cmd->add_option("--entries,-n", o.entries, "Number of entries");
  gen_cmd->add_option("--hops", o.hops, "Number of distinct next hops")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", o.seed, "RNG seed");
  add_out_path(gen_cmd, o);

  auto* agg_cmd = app.add_subcommand(
      "aggregate", "Write a smaller forwarding-equivalent table");
  add_paths(agg_cmd, o, true);
  add_width(agg_cmd, o);
  add_out_path(agg_cmd, o);

  auto* mut_cmd =
      app.add_subcommand("mutate", "Inject disjoint forwarding errors");
  add_paths(mut_cmd, o, true);
  add_width(mut_cmd, o);
  mut_cmd->add_option("--errors,-k", o.errors, "Number of errors")->required();
  mut_cmd->add_option("--seed", o.seed, "RNG seed");
  add_out_path(mut_cmd, o);

  auto* bench_cmd = app.add_subcommand(
      "bench", "Time algorithms on table files or a generated pair");
  add_paths(bench_cmd, o, false);
  add_width(bench_cmd, o);
  add_output_format(bench_cmd, o);
  add_out_path(bench_cmd, o);
  bench_cmd
      ->add_option("--algorithm,-a", o.algorithms,
                   "Algorithms to run (repeatable or comma-separated)")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->check(CLI::IsMember(kAlgorithms));
  bench_cmd->add_option("--entries,-n", o.entries, "Generated table size");
  bench_cmd->add_option("--hops", o.hops, "Generated next-hop count")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", o.seed, "RNG seed");
  bench_cmd->add_option("--errors,-k", o.errors,
                        "Errors injected into the generated pair");
  bench_cmd->add_option("--repeats,-r", o.repeats, "Runs per algorithm");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*leaks_cmd) return cmd_blackholes(o, out, err);
    if (*gen_cmd) return cmd_gen(o, out);
    if (*agg_cmd) return cmd_aggregate(o, out, err);
    if (*mut_cmd) return cmd_mutate(o, out, err);
    if (*bench_cmd) return cmd_bench(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace fibeq
