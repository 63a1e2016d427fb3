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

// Acceptance suite: one PASS/FAIL line per acceptance criterion. Exits
// non-zero if any criterion fails. Ground truth comes from the oracle
// module (address-space painting and linear scans), never from the trie.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "fibeq/baselines.hpp"
#include "fibeq/joint_trie.hpp"
#include "fibeq/oracle.hpp"
#include "fibeq/spacecheck.hpp"
#include "fibeq/tablegen.hpp"
#include "fibeq/verifier.hpp"
#include "test_support.hpp"

namespace fibeq {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Tolerances and sizes, pinned.
constexpr double kWorkedExampleBudgetMs = 1.0;
constexpr int kPairsW8 = 1000;
constexpr int kPairsW16 = 200;
constexpr std::size_t kMaxEntries = 500;
constexpr double kCorpusBudgetSeconds = 120.0;
constexpr int kAggregationTables = 500;
constexpr std::size_t kLargeEntries = 50000;
constexpr double kMaxAccessesPerComparison = 2.0;
constexpr double kScalingTolerance = 0.20;
constexpr int kLeakSelfTables = 100;
constexpr int kCommutativitySets = 100;

// ---------------------------------------------------------------------------
// 1. Worked example.
Outcome worked_example() {
  Outcome o;
  const std::vector<FibTable> pair = testing::worked_pair();
  const auto start = Clock::now();
  const VerificationReport r = verify(pair);
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  MetricsContext m;
  const std::uint64_t pt1 =
      build_joint_pt(std::vector<FibTable>{pair[0]}, m).census().total;
  const std::uint64_t pt2 =
      build_joint_pt(std::vector<FibTable>{pair[1]}, m).census().total;
  const std::uint64_t bt1 = build_bt(pair[0], m).node_count();
  const std::uint64_t bt2 = build_bt(pair[1], m).node_count();
  const bool oracle_equivalent = find_disagreements(pair).empty();

  o.pass = r.equivalent && oracle_equivalent && pt1 == 7 && pt2 == 4 &&
           bt1 == 10 && bt2 == 7 && ms < kWorkedExampleBudgetMs;
  o.detail = fmt(
      "equivalent=%d (oracle %d), PT nodes %llu/%llu (want 7/4), BT nodes "
      "%llu/%llu (want 10/7), %.4f ms (< %.1f ms)",
      r.equivalent, oracle_equivalent, (unsigned long long)pt1,
      (unsigned long long)pt2, (unsigned long long)bt1,
      (unsigned long long)bt2, ms, kWorkedExampleBudgetMs);
  return o;
}

// ---------------------------------------------------------------------------
// Shared random corpus for criteria 2 and 3.
struct CorpusCase {
  testing::RandomCase c;
  std::vector<Disagreement> disagreements;  // from the oracle
};

std::vector<CorpusCase> build_corpus(double& seconds) {
  const auto start = Clock::now();
  std::vector<CorpusCase> corpus;
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < kPairsW8 + kPairsW16; ++i) {
    const AddressWidth w{i < kPairsW8 ? 8 : 16};
    CorpusCase cc;
    cc.c = testing::random_case(rng, w, kMaxEntries);
    cc.disagreements = find_disagreements(cc.c.tables);
    corpus.push_back(std::move(cc));
  }
  seconds = seconds_since(start);
  return corpus;
}

// 2. Verifier verdicts and divergence regions against the oracle.
Outcome verifier_matches_oracle(const std::vector<CorpusCase>& corpus,
                           double corpus_seconds) {
  Outcome o;
  const auto start = Clock::now();
  int verdict_mismatch = 0, uncovered = 0, unwitnessed = 0, equivalent = 0;
  std::size_t w8 = 0, w16 = 0, max_entries = 0;
  for (const CorpusCase& cc : corpus) {
    const auto& tables = cc.c.tables;
    const AddressWidth w = tables.front().width;
    (w.bits() == 8 ? w8 : w16) += 1;
    for (const auto& t : tables) max_entries = std::max(max_entries, t.size());
    const VerificationReport r = verify(tables);
    const bool truth = cc.disagreements.empty();
    equivalent += truth;
    if (r.equivalent != truth) ++verdict_mismatch;

    std::unordered_set<Prefix> reported;
    for (const auto& d : r.divergences) reported.insert(d.prefix);
    // Every disagreeing address lies inside a reported prefix.
    std::vector<std::uint64_t> bad;
    for (const Disagreement& d : cc.disagreements) {
      bad.push_back(d.address.index(w));
      bool inside = false;
      for (int len = 0; len <= w.bits() && !inside; ++len) {
        inside = reported.count(Prefix::from_bits(d.address.bits, len)) > 0;
      }
      if (!inside) ++uncovered;
    }
    // Every reported prefix contains a disagreeing address.
    for (const auto& d : r.divergences) {
      const std::uint64_t lo = first_address(d.prefix).index(w);
      const std::uint64_t hi = last_address(d.prefix, w).index(w);
      const auto it = std::lower_bound(bad.begin(), bad.end(), lo);
      if (it == bad.end() || *it > hi) ++unwitnessed;
    }
  }
  const double total = corpus_seconds + seconds_since(start);
  o.pass = verdict_mismatch == 0 && uncovered == 0 && unwitnessed == 0 &&
           w8 >= kPairsW8 && w16 >= kPairsW16 &&
           total < kCorpusBudgetSeconds;
  o.detail = fmt(
      "%zu pairs W=8 + %zu pairs W=16 (max %zu entries, %d equivalent), "
      "verdict mismatches %d, uncovered addresses %d, unwitnessed records "
      "%d, %.1f s (< %.0f s)",
      w8, w16, max_entries, equivalent, verdict_mismatch, uncovered,
      unwitnessed, total, kCorpusBudgetSeconds);
  return o;
}

BinaryTree normal_form(const FibTable& t) {
  MetricsContext m;
  BinaryTree bt = build_bt(t, m);
  synthesize_default(bt);
  leaf_push(bt, m);
  normalize(bt);
  return bt;
}

// 3. Baseline verdicts and normal-form uniqueness.
Outcome baseline_agreement(const std::vector<CorpusCase>& corpus) {
  Outcome o;
  int taco_bad = 0, norm_bad = 0, form_bad = 0;
  for (const CorpusCase& cc : corpus) {
    const auto& t = cc.c.tables;
    const bool truth = cc.disagreements.empty();
    if (taco_verify(t[0], t[1]).equivalent != truth) ++taco_bad;
    if (normalization_verify(t[0], t[1]).equivalent != truth) ++norm_bad;
    if (structurally_identical(normal_form(t[0]), normal_form(t[1])) != truth) {
      ++form_bad;
    }
  }
  o.pass = taco_bad == 0 && norm_bad == 0 && form_bad == 0;
  o.detail = fmt(
      "%zu pairs: TaCo mismatches %d, Normalization mismatches %d, "
      "normal-form identity mismatches %d",
      corpus.size(), taco_bad, norm_bad, form_bad);
  return o;
}

// ---------------------------------------------------------------------------
// 4. Aggregation preserves forwarding.
Outcome aggregation_equivalence() {
  Outcome o;
  std::mt19937_64 rng(4);
  int verify_bad = 0, oracle_bad = 0, larger = 0;
  std::size_t before = 0, after = 0;
  for (int i = 0; i < kAggregationTables; ++i) {
    const LengthDistribution dist = i % 2 == 0
                                        ? LengthDistribution::skewed(AddressWidth{16})
                                        : LengthDistribution::uniform(AddressWidth{16});
    const FibTable t = gen_random_table(dist, 1 + uniform_below(rng, kMaxEntries),
                                        1 + uniform_below(rng, 4), rng());
    const FibTable agg = aggregate_equiv(t);
    const std::vector<FibTable> pair = {t, agg};
    if (!verify(pair).equivalent) ++verify_bad;
    if (!find_disagreements(pair).empty()) ++oracle_bad;
    if (agg.size() > t.size()) ++larger;
    before += t.size();
    after += agg.size();
  }
  o.pass = verify_bad == 0 && oracle_bad == 0 && larger == 0;
  o.detail = fmt(
      "%d tables W=16: verify non-equivalent %d, oracle non-equivalent %d, "
      "grown %d; entries %zu -> %zu",
      kAggregationTables, verify_bad, oracle_bad, larger, before, after);
  return o;
}

// ---------------------------------------------------------------------------
// 5. Mutation detection.
struct MutationRun {
  bool detected = false;
  int uncovered_prefixes = 0;   // mutated prefix with no record inside it
  int uncovered_addresses = 0;  // disagreeing address outside all records
  int false_records = 0;        // record outside every mutated region
};

MutationRun mutation_run(std::size_t k, std::size_t table_count,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const AddressWidth w{16};
  const FibTable base = gen_random_table(w, 500, 4, rng());
  std::vector<FibTable> tables;
  for (std::size_t i = 0; i < table_count; ++i) {
    tables.push_back(i % 2 == 0 ? base : aggregate_equiv(base));
  }
  // Spread the k errors over tables 1..n-1, keeping all regions disjoint.
  std::vector<Prefix> mutated;
  const std::size_t victims = table_count - 1;
  for (std::size_t v = 0; v < victims; ++v) {
    const std::size_t share = k / victims + (v < k % victims ? 1 : 0);
    if (share == 0) continue;
    const Mutation m = mutate(tables[v + 1], share, rng(), mutated);
    tables[v + 1] = m.table;
    mutated.insert(mutated.end(), m.prefixes.begin(), m.prefixes.end());
  }

  MutationRun out;
  const VerificationReport r = verify(tables);
  out.detected = !r.equivalent;
  std::unordered_set<Prefix> reported;
  for (const auto& d : r.divergences) {
    reported.insert(d.prefix);
    const bool inside = std::any_of(mutated.begin(), mutated.end(),
                                    [&](const Prefix& p) {
                                      return is_prefix_of(p, d.prefix);
                                    });
    if (!inside) ++out.false_records;
  }
  for (const Prefix& p : mutated) {
    const bool covered = std::any_of(
        r.divergences.begin(), r.divergences.end(),
        [&](const DivergenceRecord& d) { return is_prefix_of(p, d.prefix); });
    if (!covered) ++out.uncovered_prefixes;
  }
  for (const Disagreement& d : find_disagreements(tables)) {
    bool inside = false;
    for (int len = 0; len <= w.bits() && !inside; ++len) {
      inside = reported.count(Prefix::from_bits(d.address.bits, len)) > 0;
    }
    if (!inside) ++out.uncovered_addresses;
    const bool in_mutated = std::any_of(
        mutated.begin(), mutated.end(),
        [&](const Prefix& p) { return contains(p, d.address); });
    if (!in_mutated) ++out.false_records;  // oracle sees a stray change
  }
  return out;
}

Outcome mutation_detection() {
  Outcome o;
  std::string detail;
  for (const std::size_t k : {1, 10, 100}) {
    int missed = 0, uncovered = 0, stray = 0, runs = 0;
    for (const std::size_t n : {2, 3, 5, 10}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const MutationRun r = mutation_run(k, n, 1000 * k + 10 * n + seed);
        ++runs;
        missed += !r.detected;
        uncovered += r.uncovered_prefixes + r.uncovered_addresses;
        stray += r.false_records;
      }
    }
    o.pass = o.pass && missed == 0 && uncovered == 0 && stray == 0;
    detail += fmt("k=%zu: %d runs, missed %d, uncovered %d, false %d; ", k,
                  runs, missed, uncovered, stray);
  }
  o.detail = detail + "tables n in {2,3,5,10}, W=16, oracle-checked";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Node-access properties at W=32.
Outcome node_access_properties() {
  Outcome o;
  std::string detail;
  for (const std::uint64_t seed : {1, 2}) {
    const FibTable t = gen_random_table(AddressWidth{32}, kLargeEntries, 16, seed);
    for (const bool mutated : {false, true}) {
      FibTable other = aggregate_equiv(t);
      if (mutated) other = mutate(other, 100, seed + 7).table;
      const VerificationReport v = verify(std::vector<FibTable>{t, other});
      const VerificationReport n = normalization_verify(t, other);
      const VerificationReport c = taco_verify(t, other);
      const double av = v.metrics.accesses_per_comparison();
      const double an = n.metrics.accesses_per_comparison();
      const double ac = c.metrics.accesses_per_comparison();
      const bool ok = av < kMaxAccessesPerComparison && av < an && an < ac &&
                      v.equivalent == !mutated && n.equivalent == !mutated &&
                      c.equivalent == !mutated;
      o.pass = o.pass && ok;
      detail += fmt("seed %llu%s: VeriTable %.3f < Normalization %.3f < TaCo "
                    "%.3f; ",
                    (unsigned long long)seed, mutated ? " mutated" : "", av,
                    an, ac);
    }
  }
  o.detail = detail + fmt("%zu entries, VeriTable < %.0f required",
                          kLargeEntries, kMaxAccessesPerComparison);
  return o;
}

// ---------------------------------------------------------------------------
// 7. Multi-table scaling.
bool increments_constant(const std::vector<std::uint64_t>& series,
                         double& mean, double& worst) {
  std::vector<double> inc;
  for (std::size_t i = 1; i < series.size(); ++i) {
    inc.push_back(static_cast<double>(series[i]) -
                  static_cast<double>(series[i - 1]));
  }
  mean = std::accumulate(inc.begin(), inc.end(), 0.0) /
         static_cast<double>(inc.size());
  worst = 0;
  for (double d : inc) {
    const double dev = mean == 0 ? std::abs(d) : std::abs(d - mean) / std::abs(mean);
    worst = std::max(worst, dev);
  }
  return mean == 0 ? worst == 0 : worst <= kScalingTolerance;
}

Outcome multi_table_scaling() {
  Outcome o;
  const AddressWidth w{32};
  const FibTable base = gen_random_table(w, 20000, 8, 77);
  std::mt19937_64 rng(78);

  // (a) Fixed prefix union: every table routes the same prefixes, hops
  // differ. One traversal means constant comparisons, and accesses may only
  // grow additively.
  std::vector<FibTable> fixed_union;
  for (int i = 0; i < 10; ++i) {
    FibTable t = base;
    for (auto& e : t.entries) {
      if (uniform_below(rng, 50) == 0) e.nexthop = NextHopId{100 + uniform_below(rng, 8)};
    }
    fixed_union.push_back(std::move(t));
  }
  std::vector<std::uint64_t> accesses, comparisons;
  for (std::size_t n = 2; n <= 10; ++n) {
    const VerificationReport r = verify(std::span<const FibTable>(fixed_union).first(n));
    accesses.push_back(r.metrics.node_accesses);
    comparisons.push_back(r.metrics.comparisons);
  }
  double mean_a = 0, worst_a = 0;
  const bool additive_a = increments_constant(accesses, mean_a, worst_a);
  const bool single_traversal =
      std::all_of(comparisons.begin(), comparisons.end(),
                  [&](std::uint64_t c) { return c == comparisons.front(); });
  const bool not_multiplicative_a = accesses.back() < 5 * accesses.front();

  // (b) Each added table brings its own new-prefix errors, so the union
  // grows by a similar amount per table.
  std::vector<FibTable> growing = {base};
  std::vector<Prefix> taken;
  for (int i = 1; i < 10; ++i) {
    Mutation m = mutate(base, 500, 1000 + i, taken);
    taken.insert(taken.end(), m.prefixes.begin(), m.prefixes.end());
    growing.push_back(std::move(m.table));
  }
  std::vector<std::uint64_t> grow_accesses;
  for (std::size_t n = 2; n <= 10; ++n) {
    grow_accesses.push_back(
        verify(std::span<const FibTable>(growing).first(n)).metrics.node_accesses);
  }
  double mean_b = 0, worst_b = 0;
  const bool additive_b = increments_constant(grow_accesses, mean_b, worst_b);
  const bool not_multiplicative_b = grow_accesses.back() < 5 * grow_accesses.front();

  o.pass = additive_a && single_traversal && not_multiplicative_a &&
           additive_b && not_multiplicative_b;
  o.detail = fmt(
      "fixed union n=2..10: accesses %llu..%llu, mean increment %.1f (max "
      "deviation %.3f), comparisons constant=%d (%llu); growing union: "
      "accesses %llu..%llu, mean increment %.1f (max relative deviation %.3f "
      "<= %.2f)",
      (unsigned long long)accesses.front(), (unsigned long long)accesses.back(),
      mean_a, worst_a, single_traversal, (unsigned long long)comparisons.front(),
      (unsigned long long)grow_accesses.front(),
      (unsigned long long)grow_accesses.back(), mean_b, worst_b,
      kScalingTolerance);
  return o;
}

// ---------------------------------------------------------------------------
// 8. Blackhole detection.
Outcome blackhole_detection() {
  Outcome o;
  const std::vector<FibTable> pair = {
      testing::make_table(8, {{"", testing::kA}, {"100", 9}}),
      testing::make_table(8, {{"", testing::kA}})};
  const LeakReport r = detect_leaks(pair);
  const bool constructed = r.leak_points.size() == 1 &&
                           r.leak_points[0].prefix == testing::bits("100");
  std::mt19937_64 rng(8);
  int leaky_self = 0;
  for (int i = 0; i < kLeakSelfTables; ++i) {
    const AddressWidth w{uniform_below(rng, 2) == 0 ? 16 : 32};
    FibTable t = gen_random_table(w, 1 + uniform_below(rng, 2000), 8, rng());
    if (uniform_below(rng, 4) == 0) t = testing::strip_default(t);
    if (detect_leaks(std::vector<FibTable>{t, t}).has_leaks()) ++leaky_self;
  }
  o.pass = constructed && leaky_self == 0;
  o.detail = fmt(
      "constructed pair: %zu leak point(s)%s; detect_leaks(T, T) leaked for "
      "%d of %d random T",
      r.leak_points.size(),
      r.leak_points.empty()
          ? ""
          : (" at " + r.leak_points[0].prefix.to_bit_string()).c_str(),
      leaky_self, kLeakSelfTables);
  return o;
}

// ---------------------------------------------------------------------------
// 9. Build commutativity.
struct BuildFingerprint {
  NodeCensus census;
  std::set<std::pair<Prefix, bool>> nodes;  // prefix, is_real
  bool equivalent;
  std::set<Prefix> divergent;

  bool operator==(const BuildFingerprint&) const = default;
};

BuildFingerprint fingerprint(const std::vector<FibTable>& tables) {
  MetricsContext m;
  const JointTrie trie = build_joint_pt(tables, m);
  BuildFingerprint f{trie.census(), {}, false, {}};
  for (const TrieNode& n : trie.nodes()) f.nodes.emplace(n.prefix, n.is_real());
  const VerificationReport r = verify(tables);
  f.equivalent = r.equivalent;
  for (const auto& d : r.divergences) f.divergent.insert(d.prefix);
  return f;
}

Outcome build_commutativity() {
  Outcome o;
  std::mt19937_64 rng(9);
  int differing = 0, orders = 0;
  for (int s = 0; s < kCommutativitySets; ++s) {
    const std::size_t n = 2 + uniform_below(rng, 3);  // 2..4 tables
    const AddressWidth w{static_cast<int>(8 + uniform_below(rng, 9))};
    testing::RandomCase c = testing::random_case(rng, w, 200, n);
    const BuildFingerprint reference = fingerprint(c.tables);
    // Every table order.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<FibTable> permuted;
      for (std::size_t i : perm) permuted.push_back(c.tables[i]);
      ++orders;
      if (!(fingerprint(permuted) == reference)) ++differing;
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Shuffled entry order inside each table.
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::vector<FibTable> shuffled = c.tables;
      for (auto& t : shuffled) std::shuffle(t.entries.begin(), t.entries.end(), rng);
      ++orders;
      if (!(fingerprint(shuffled) == reference)) ++differing;
    }
  }
  o.pass = differing == 0;
  o.detail = fmt("%d table sets, %d insertion orders, %d differing census/"
                 "verdict",
                 kCommutativitySets, orders, differing);
  return o;
}

}  // namespace
}  // namespace fibeq

int main() {
  using namespace fibeq;
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("[%s] criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id,
                name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  };
  report(1, "worked example", worked_example());
  double corpus_seconds = 0;
  const auto corpus = build_corpus(corpus_seconds);
  report(2, "verifier vs oracle", verifier_matches_oracle(corpus, corpus_seconds));
  report(3, "baseline agreement", baseline_agreement(corpus));
  report(4, "aggregation equivalence", aggregation_equivalence());
  report(5, "mutation detection", mutation_detection());
  report(6, "node-access properties", node_access_properties());
  report(7, "multi-table scaling", multi_table_scaling());
  report(8, "blackhole detection", blackhole_detection());
  report(9, "build commutativity", build_commutativity());
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
