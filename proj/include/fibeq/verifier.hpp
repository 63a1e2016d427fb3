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

#ifndef FIBEQ_VERIFIER_HPP_
#define FIBEQ_VERIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fibeq/fib_table.hpp"
#include "fibeq/joint_trie.hpp"
#include "fibeq/metrics.hpp"

namespace fibeq {

// A region where the tables forward differently. `hops` holds one fully
// resolved hop per table; `synthesized[i]` is set when table i's hop comes
// from a default route the table did not have.
struct DivergenceRecord {
  Prefix prefix;
  std::vector<NextHopId> hops;
  std::vector<bool> synthesized;
};

struct StructureStats {
  std::uint64_t nodes_real = 0;
  std::uint64_t nodes_glue = 0;
  std::uint64_t est_memory_bytes = 0;
};

struct VerificationReport {
  std::string algorithm;
  bool equivalent = true;
  // False for sampled checks, where "equivalent" means nothing was found.
  bool exhaustive = true;
  std::vector<DivergenceRecord> divergences;
  MetricsContext metrics;
  StructureStats structure;
};

// A joint trie whose root carries a hop for every table. Tables without a
// 0/0 route get kSynthesizedDefaultHop, recorded in `synthesized_default`.
struct PreparedTrie {
  JointTrie trie;
  std::vector<bool> synthesized_default;
};

// Builds the joint trie and fills in missing default routes. Throws
// UsageError for fewer than two tables, ConfigError for mixed widths.
PreparedTrie prepare(std::span<const FibTable> tables,
                     MetricsContext& metrics);

// Top-down next-hop inheritance over a prepared trie, with per-slot
// provenance: a slot is root-derived when its value was copied, possibly
// through several REAL nodes, from the root.
class HopInheritance {
 public:
  explicit HopInheritance(PreparedTrie& prepared);

  // Fills every empty slot of `node` from `ancestor`. Non-empty slots are
  // kept. `ancestor` must be fully resolved.
  void inherit_next_hops(NodeId ancestor, NodeId node);

  bool root_derived(NodeId node, std::size_t slot) const {
    return root_derived_[index(node, slot)] != 0;
  }
  bool synthesized(NodeId node, std::size_t slot) const {
    return root_derived(node, slot) && prepared_.synthesized_default[slot];
  }

  JointTrie& trie() { return prepared_.trie; }
  const JointTrie& trie() const { return prepared_.trie; }

 private:
  std::size_t index(NodeId node, std::size_t slot) const {
    return static_cast<std::size_t>(node) * prepared_.trie.table_count() +
           slot;
  }

  PreparedTrie& prepared_;
  std::vector<std::uint8_t> root_derived_;
};

// One post-order pass over a prepared trie: REAL children inherit hops on
// the way down; leaves, and REAL nodes that receive a raised LEAK flag, are
// compared on the way up.
//
// The pass rewrites the trie's hop arrays, so a trie can be verified once.
class VeriTableRun {
 public:
  explicit VeriTableRun(PreparedTrie& prepared);

  // Runs from the root and returns the finished report.
  VerificationReport run();

  // Recursive step. Returns the LEAK flag for `node`'s subtree: true when
  // part of its routing space is not yet checked and must be compared at
  // the nearest REAL ancestor.
  bool veritable(NodeId ancestor, NodeId node);

  void inherit_next_hops(NodeId ancestor, NodeId node) {
    inheritance_.inherit_next_hops(ancestor, node);
  }

  // Counts one comparison and records a divergence if the slots differ.
  void compare_next_hops(NodeId node);

  const VerificationReport& report() const { return report_; }

 private:
  HopInheritance inheritance_;
  VerificationReport report_;
};

// prepare() followed by one VeriTable pass.
VerificationReport verify(std::span<const FibTable> tables);

}  // namespace fibeq

#endif  // FIBEQ_VERIFIER_HPP_
