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

#include "fibeq/spacecheck.hpp"

#include <unordered_set>

#include "fibeq/verifier.hpp"

namespace fibeq {
namespace {

// Marks the REAL nodes that own part of the address space: some address
// has the node as its longest match in the joint trie. These are the nodes
// a verification traversal compares (leaves, and nodes with routing space
// not covered by children). Returns true if `node` leaves space uncovered
// that belongs to its nearest REAL ancestor.
bool mark_owners(const JointTrie& trie, NodeId node, std::vector<bool>& owns,
                 MetricsContext& metrics) {
  ++metrics.node_accesses;
  const TrieNode& n = trie.node(node);
  if (n.is_leaf()) {
    owns[node] = n.is_real();
    return !n.is_real();
  }
  bool gap = false;
  for (const NodeId c : {n.left, n.right}) {
    if (c == kNoNode || trie.node(c).length() - n.length() > 1) gap = true;
    if (c != kNoNode && mark_owners(trie, c, owns, metrics)) gap = true;
  }
  if (n.is_real()) {
    owns[node] = gap;
    return false;
  }
  return gap;
}

class LeakWalk {
 public:
  LeakWalk(HopInheritance& inheritance, const std::vector<bool>& owns,
           LeakReport& report)
      : inheritance_(inheritance),
        owns_(owns),
        report_(report),
        open_(inheritance.trie().table_count(), 0) {}

  void visit(NodeId ancestor, NodeId node) {
    ++report_.metrics.node_accesses;
    const JointTrie& trie = inheritance_.trie();
    const TrieNode& n = trie.node(node);
    std::vector<std::size_t> opened;
    if (n.is_real()) {
      if (node != trie.root()) inheritance_.inherit_next_hops(ancestor, node);
      ancestor = node;
      if (owns_[node]) check(node, opened);
    }
    if (n.left != kNoNode) visit(ancestor, n.left);
    if (n.right != kNoNode) visit(ancestor, n.right);
    for (std::size_t i : opened) --open_[i];
  }

 private:
  void check(NodeId node, std::vector<std::size_t>& opened) {
    const JointTrie& trie = inheritance_.trie();
    const std::size_t tables = trie.table_count();
    ++report_.metrics.comparisons;
    bool any_default = false;
    bool any_specific = false;
    for (std::size_t i = 0; i < tables; ++i) {
      if (inheritance_.root_derived(node, i)) {
        any_default = true;
      } else {
        any_specific = true;
      }
    }
    if (!any_default || !any_specific) return;

    LeakPoint lp;
    lp.prefix = trie.node(node).prefix;
    for (std::size_t i = 0; i < tables; ++i) {
      const bool d = inheritance_.root_derived(node, i);
      lp.default_derived.push_back(d);
      lp.hops.push_back(*trie.hops(node)[i]);
      if (d) {
        if (open_[i] == 0) ++report_.leaking_routes_per_table[i];
        ++open_[i];
        opened.push_back(i);
      }
    }
    report_.leak_points.push_back(std::move(lp));
  }

  HopInheritance& inheritance_;
  const std::vector<bool>& owns_;
  LeakReport& report_;
  // Leak points currently open on the path from the root, per table.
  std::vector<int> open_;
};

}  // namespace

LeakReport detect_leaks(std::span<const FibTable> tables) {
  LeakReport report;
  PreparedTrie prepared = prepare(tables, report.metrics);
  report.leaking_routes_per_table.assign(tables.size(), 0);
  HopInheritance inheritance(prepared);
  {
    ScopedTimer timer(&report.metrics.verify_time);
    const JointTrie& trie = prepared.trie;
    std::vector<bool> owns(trie.size(), false);
    mark_owners(trie, trie.root(), owns, report.metrics);
    LeakWalk(inheritance, owns, report).visit(trie.root(), trie.root());
  }
  return report;
}

FibTable merge_super(std::span<const FibTable> tables) {
  FibTable out;
  out.width = common_width(tables);
  out.name = "super";
  std::unordered_set<Prefix> seen;
  for (const auto& t : tables) {
    for (const auto& e : t.entries) {
      if (seen.insert(e.prefix).second) out.entries.push_back(e);
    }
  }
  return out;
}

}  // namespace fibeq
