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

#include "fibeq/verifier.hpp"

#include <cassert>

#include "fibeq/errors.hpp"

namespace fibeq {

PreparedTrie prepare(std::span<const FibTable> tables,
                     MetricsContext& metrics) {
  if (tables.size() < 2) {
    throw UsageError("verification needs at least two tables, got " +
                     std::to_string(tables.size()));
  }
  PreparedTrie out{build_joint_pt(tables, metrics),
                   std::vector<bool>(tables.size(), false)};
  JointTrie& trie = out.trie;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (!trie.hops(trie.root())[i].has_value()) {
      trie.set_root_hop(i, kSynthesizedDefaultHop);
      out.synthesized_default[i] = true;
    }
  }
  return out;
}

HopInheritance::HopInheritance(PreparedTrie& prepared)
    : prepared_(prepared),
      root_derived_(prepared.trie.size() * prepared.trie.table_count(), 0) {
  const JointTrie& trie = prepared_.trie;
  for (std::size_t i = 0; i < trie.table_count(); ++i) {
    root_derived_[index(trie.root(), i)] = 1;
  }
}

void HopInheritance::inherit_next_hops(NodeId ancestor, NodeId node) {
  JointTrie& trie = prepared_.trie;
  const auto from = trie.hops(ancestor);
  const auto to = trie.hops(node);
  for (std::size_t i = 0; i < to.size(); ++i) {
    if (!to[i].has_value()) {
      assert(from[i].has_value());
      to[i] = from[i];
      root_derived_[index(node, i)] = root_derived_[index(ancestor, i)];
    }
  }
}

VeriTableRun::VeriTableRun(PreparedTrie& prepared) : inheritance_(prepared) {
  report_.algorithm = "veritable";
}

VerificationReport VeriTableRun::run() {
  const JointTrie& trie = inheritance_.trie();
  {
    ScopedTimer timer(&report_.metrics.verify_time);
    veritable(trie.root(), trie.root());
  }
  report_.equivalent = report_.divergences.empty();
  const NodeCensus census = trie.census();
  report_.structure.nodes_real = census.real;
  report_.structure.nodes_glue = census.glue;
  report_.structure.est_memory_bytes = trie.estimated_memory_bytes();
  return report_;
}

bool VeriTableRun::veritable(NodeId ancestor, NodeId node) {
  ++report_.metrics.node_accesses;
  const TrieNode& n = inheritance_.trie().node(node);
  if (n.is_real()) ancestor = node;

  const NodeId l = n.left;
  const NodeId r = n.right;
  bool left_flag = false;
  bool right_flag = false;

  if (l != kNoNode) {
    if (inheritance_.trie().node(l).is_real()) inherit_next_hops(ancestor, l);
    left_flag = veritable(ancestor, l);
  }
  if (r != kNoNode) {
    if (inheritance_.trie().node(r).is_real()) inherit_next_hops(ancestor, r);
    right_flag = veritable(ancestor, r);
  }

  if (l == kNoNode && r == kNoNode) {
    // Glue nodes always have two children, so a leaf is REAL.
    assert(n.is_real() || node == inheritance_.trie().root());
    compare_next_hops(node);
    return false;
  }

  const JointTrie& trie = inheritance_.trie();
  bool leak = false;
  if (l != kNoNode && trie.node(l).length() - n.length() > 1) {
    leak = true;
  } else if (r != kNoNode && trie.node(r).length() - n.length() > 1) {
    leak = true;
  } else if (l == kNoNode || r == kNoNode) {
    leak = true;
  } else if (left_flag || right_flag) {
    leak = true;
  }

  if (leak && n.is_real()) {
    compare_next_hops(node);
    leak = false;
  }
  return leak;
}

void VeriTableRun::compare_next_hops(NodeId node) {
  ++report_.metrics.comparisons;
  const JointTrie& trie = inheritance_.trie();
  const auto slots = trie.hops(node);
  bool differ = false;
  for (std::size_t i = 1; i < slots.size(); ++i) {
    if (slots[i] != slots[0]) {
      differ = true;
      break;
    }
  }
  if (!differ) return;

  DivergenceRecord rec;
  rec.prefix = trie.node(node).prefix;
  rec.hops.reserve(slots.size());
  rec.synthesized.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    assert(slots[i].has_value());
    rec.hops.push_back(*slots[i]);
    rec.synthesized.push_back(inheritance_.synthesized(node, i));
  }
  report_.divergences.push_back(std::move(rec));
}

VerificationReport verify(std::span<const FibTable> tables) {
  MetricsContext build_metrics;
  PreparedTrie prepared = prepare(tables, build_metrics);
  VeriTableRun run(prepared);
  VerificationReport report = run.run();
  report.metrics.build_time = build_metrics.build_time;
  report.metrics.nodes_allocated = build_metrics.nodes_allocated;
  return report;
}

}  // namespace fibeq
