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

#include "fibeq/joint_trie.hpp"

#include <string>

#include "fibeq/errors.hpp"

namespace fibeq {

JointTrie::JointTrie(AddressWidth width, std::size_t table_count)
    : width_(width), table_count_(table_count) {
  if (table_count == 0) throw UsageError("a joint trie needs >= 1 table");
  nodes_.push_back(TrieNode{});
  slots_.resize(table_count_);
}

NodeId JointTrie::allocate(const Prefix& prefix, NodeKind kind, NodeId parent,
                           MetricsContext& metrics) {
  const auto id = static_cast<NodeId>(nodes_.size());
  TrieNode n;
  n.prefix = prefix;
  n.kind = kind;
  n.parent = parent;
  nodes_.push_back(n);
  slots_.resize(slots_.size() + table_count_);
  ++metrics.nodes_allocated;
  return id;
}

// Links `child` below `parent` on the side given by the child's bit right
// after the parent prefix.
void JointTrie::attach(NodeId parent, NodeId child) {
  TrieNode& p = nodes_[parent];
  if (nodes_[child].prefix.bit(p.prefix.length())) {
    p.right = child;
  } else {
    p.left = child;
  }
  nodes_[child].parent = parent;
}

InsertCase JointTrie::insert(std::size_t table_index, const FibEntry& entry,
                             MetricsContext& metrics) {
  if (table_index >= table_count_) {
    throw ConfigError("table index " + std::to_string(table_index) +
                      " out of range");
  }
  const Prefix& p = entry.prefix;
  if (p.length() > width_.bits()) {
    throw ConfigError("prefix longer than the trie width");
  }

  NodeId cur = root();
  while (true) {
    if (nodes_[cur].prefix == p) {
      hops(cur)[table_index] = entry.nexthop;
      nodes_[cur].kind = NodeKind::kReal;
      return InsertCase::kUpdated;
    }
    const bool go_right = p.bit(nodes_[cur].prefix.length());
    const NodeId child = go_right ? nodes_[cur].right : nodes_[cur].left;

    if (child == kNoNode) {
      const NodeId fresh = allocate(p, NodeKind::kReal, cur, metrics);
      hops(fresh)[table_index] = entry.nexthop;
      attach(cur, fresh);
      return InsertCase::kLeaf;
    }

    const Prefix child_prefix = nodes_[child].prefix;
    if (is_prefix_of(child_prefix, p)) {
      cur = child;
      continue;
    }

    const NodeId fresh = allocate(p, NodeKind::kReal, cur, metrics);
    hops(fresh)[table_index] = entry.nexthop;

    if (is_prefix_of(p, child_prefix)) {
      attach(cur, fresh);
      attach(fresh, child);
      return InsertCase::kSpliced;
    }

    // The new prefix and the child diverge strictly below both of them and
    // strictly above `cur`: join them under a glue node at the fork.
    const int fork = common_prefix_length(p, child_prefix);
    const NodeId glue =
        allocate(p.truncated(fork), NodeKind::kGlue, cur, metrics);
    attach(cur, glue);
    attach(glue, child);
    attach(glue, fresh);
    return InsertCase::kGlued;
  }
}

void JointTrie::set_root_hop(std::size_t table_index, NextHopId hop) {
  if (table_index >= table_count_) {
    throw ConfigError("table index " + std::to_string(table_index) +
                      " out of range");
  }
  hops(root())[table_index] = hop;
  nodes_[root()].kind = NodeKind::kReal;
}

NodeId JointTrie::lpm_lookup(const Address& address,
                             MetricsContext& metrics) const {
  NodeId cur = root();
  ++metrics.node_accesses;
  NodeId best = nodes_[cur].is_real() ? cur : kNoNode;
  while (nodes_[cur].prefix.length() < width_.bits()) {
    const int depth = nodes_[cur].prefix.length();
    const bool go_right = ((address.bits >> (127 - depth)) & 1) != 0;
    const NodeId child = go_right ? nodes_[cur].right : nodes_[cur].left;
    if (child == kNoNode) break;
    ++metrics.node_accesses;
    if (!contains(nodes_[child].prefix, address)) break;
    cur = child;
    if (nodes_[cur].is_real()) best = cur;
  }
  return best == kNoNode ? root() : best;
}

std::optional<NextHopId> JointTrie::resolve(NodeId id,
                                            std::size_t table_index) const {
  for (NodeId cur = id; cur != kNoNode; cur = nodes_[cur].parent) {
    if (const auto& h = hops(cur)[table_index]; h.has_value()) return h;
  }
  return std::nullopt;
}

std::optional<NodeId> JointTrie::find(const Prefix& prefix) const {
  NodeId cur = root();
  while (true) {
    const Prefix& here = nodes_[cur].prefix;
    if (here == prefix) return cur;
    if (!is_prefix_of(here, prefix)) return std::nullopt;
    const NodeId child =
        prefix.bit(here.length()) ? nodes_[cur].right : nodes_[cur].left;
    if (child == kNoNode) return std::nullopt;
    cur = child;
  }
}

NodeCensus JointTrie::census() const {
  NodeCensus c;
  for (const auto& n : nodes_) {
    if (n.is_real()) {
      ++c.real;
    } else {
      ++c.glue;
    }
  }
  c.total = c.real + c.glue;
  return c;
}

JointTrie build_joint_pt(std::span<const FibTable> tables,
                         MetricsContext& metrics) {
  const AddressWidth width = common_width(tables);
  ScopedTimer timer(&metrics.build_time);
  JointTrie trie(width, tables.size());
  ++metrics.nodes_allocated;  // root
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (const auto& e : tables[i].entries) trie.insert(i, e, metrics);
  }
  return trie;
}

}  // namespace fibeq
