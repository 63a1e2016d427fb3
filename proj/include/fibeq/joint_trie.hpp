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

#ifndef FIBEQ_JOINT_TRIE_HPP_
#define FIBEQ_JOINT_TRIE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fibeq/fib_table.hpp"
#include "fibeq/metrics.hpp"
#include "fibeq/prefix.hpp"

namespace fibeq {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// REAL nodes carry a prefix from at least one table; GLUE nodes only join
// two diverging subtrees.
enum class NodeKind : std::uint8_t { kReal, kGlue };

struct TrieNode {
  NodeId parent = kNoNode;
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  Prefix prefix;
  NodeKind kind = NodeKind::kGlue;

  bool is_leaf() const { return left == kNoNode && right == kNoNode; }
  bool is_real() const { return kind == NodeKind::kReal; }
  int length() const { return prefix.length(); }
};

struct NodeCensus {
  std::uint64_t real = 0;
  std::uint64_t glue = 0;
  std::uint64_t total = 0;

  friend bool operator==(const NodeCensus&, const NodeCensus&) = default;
};

// Which structural case an insertion took.
enum class InsertCase {
  kUpdated,  // a node with the same prefix already existed
  kSpliced,  // new node placed between a node and its child
  kLeaf,     // new node attached as a fresh leaf
  kGlued,    // new node and an existing child joined under a new glue node
};

// PATRICIA trie holding the union of the prefixes of `table_count` tables,
// with one next-hop slot per table on every node. The root always exists
// and has prefix 0/0.
//
// Nodes live in an arena and are addressed by NodeId; the root is node 0.
// Building is single-threaded. A built trie can be read concurrently.
class JointTrie {
 public:
  JointTrie(AddressWidth width, std::size_t table_count);

  AddressWidth width() const { return width_; }
  std::size_t table_count() const { return table_count_; }
  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }

  const TrieNode& node(NodeId id) const { return nodes_[id]; }
  std::span<const TrieNode> nodes() const { return nodes_; }

  std::span<const std::optional<NextHopId>> hops(NodeId id) const {
    return {slots_.data() + static_cast<std::size_t>(id) * table_count_,
            table_count_};
  }
  std::span<std::optional<NextHopId>> hops(NodeId id) {
    return {slots_.data() + static_cast<std::size_t>(id) * table_count_,
            table_count_};
  }

  // Records `entry` as table `table_index`'s route. Throws ConfigError if
  // the index or the prefix length is out of range.
  InsertCase insert(std::size_t table_index, const FibEntry& entry,
                    MetricsContext& metrics);

  // Sets the root slot for `table_index` and marks the root REAL.
  void set_root_hop(std::size_t table_index, NextHopId hop);

  // Deepest REAL node whose prefix covers `address`. Counts every node
  // touched. Falls back to the root when no REAL node matches.
  NodeId lpm_lookup(const Address& address, MetricsContext& metrics) const;

  // Hop that table `table_index` assigns to the region of `id`: the slot of
  // the nearest node at or above `id` that has it set.
  std::optional<NextHopId> resolve(NodeId id, std::size_t table_index) const;

  // Node with exactly this prefix, if any.
  std::optional<NodeId> find(const Prefix& prefix) const;

  NodeCensus census() const;

  std::uint64_t estimated_memory_bytes() const {
    return memory_model::joint_trie_bytes(nodes_.size(), table_count_);
  }

 private:
  NodeId allocate(const Prefix& prefix, NodeKind kind, NodeId parent,
                  MetricsContext& metrics);
  void attach(NodeId parent, NodeId child);

  AddressWidth width_;
  std::size_t table_count_;
  std::vector<TrieNode> nodes_;
  std::vector<std::optional<NextHopId>> slots_;
};

// Builds one trie over all tables, inserting table by table in entry order.
// Throws ConfigError on mixed widths and UsageError on an empty list.
JointTrie build_joint_pt(std::span<const FibTable> tables,
                         MetricsContext& metrics);

}  // namespace fibeq

#endif  // FIBEQ_JOINT_TRIE_HPP_
