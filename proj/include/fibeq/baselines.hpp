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

// Two-table reference verifiers built on one-bit-per-level binary trees:
//
//  * TaCo: leaf-push both trees, compare hops of leaves present in both
//    trees directly, and resolve every remaining leaf region by LPM lookups
//    in the other tree.
//  * Normalization: leaf-push, merge equal-hop sibling leaves until no pair
//    is left, then walk both normal forms side by side.
//
// Both synthesize a 0/0 route with kSynthesizedDefaultHop for a table that
// lacks one, as prepare() does for the joint trie.

#ifndef FIBEQ_BASELINES_HPP_
#define FIBEQ_BASELINES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "fibeq/fib_table.hpp"
#include "fibeq/joint_trie.hpp"
#include "fibeq/metrics.hpp"
#include "fibeq/verifier.hpp"

namespace fibeq {

struct BinaryTreeNode {
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  Prefix prefix;
  std::optional<NextHopId> nexthop;
  // Entry came from the table (as opposed to being created by pushing).
  bool original = false;
  // Hop descends from a default route that was synthesized.
  bool synthesized = false;

  bool is_leaf() const { return left == kNoNode && right == kNoNode; }
};

// Arena-backed binary tree; node 0 is the root (prefix 0/0). Nodes dropped
// by normalize() stay in the arena but are no longer reachable.
class BinaryTree {
 public:
  explicit BinaryTree(AddressWidth width);

  AddressWidth width() const { return width_; }
  NodeId root() const { return 0; }
  const BinaryTreeNode& node(NodeId id) const { return nodes_[id]; }
  BinaryTreeNode& node(NodeId id) { return nodes_[id]; }

  // Creates every missing node on the path to `entry.prefix`.
  void insert(const FibEntry& entry, MetricsContext& metrics);
  NodeId add_child(NodeId parent, bool one, MetricsContext& metrics);

  // Number of nodes reachable from the root.
  std::uint64_t node_count() const;
  std::uint64_t allocated() const { return nodes_.size(); }

  // Walks from the root one bit at a time; the node with exactly `prefix`,
  // or kNoNode if the path ends first. Counts accesses.
  NodeId find(const Prefix& prefix, MetricsContext& metrics) const;

  // Leaf region holding `address` in a full tree. Counts accesses.
  NodeId leaf_for(const Address& address, MetricsContext& metrics) const;

  // Leaves in left-to-right order. Counts accesses.
  std::vector<NodeId> leaves(NodeId from, MetricsContext& metrics) const;

 private:
  AddressWidth width_;
  std::vector<BinaryTreeNode> nodes_;
};

BinaryTree build_bt(const FibTable& table, MetricsContext& metrics);

// Gives the root kSynthesizedDefaultHop if it has no hop.
void synthesize_default(BinaryTree& bt);

// Makes the tree full: every node gets zero or two children and every leaf a
// hop inherited from its nearest hop-bearing ancestor. The root must have a
// hop.
void leaf_push(BinaryTree& bt, MetricsContext& metrics);

// Merges sibling leaves with equal hops into their parent, bottom-up, until
// none are left. The tree must be leaf-pushed.
void normalize(BinaryTree& bt);

// True iff two leaf-pushed trees have the same shape and leaf hops.
bool structurally_identical(const BinaryTree& a, const BinaryTree& b);

VerificationReport taco_verify(const FibTable& t1, const FibTable& t2);
VerificationReport normalization_verify(const FibTable& t1,
                                        const FibTable& t2);

// Widths up to this use literal address enumeration for TaCo's non-common
// regions; wider spaces compare leaf regions instead.
inline constexpr int kTacoAddressExpansionMaxWidth = 16;

}  // namespace fibeq

#endif  // FIBEQ_BASELINES_HPP_
