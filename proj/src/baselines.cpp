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

#include "fibeq/baselines.hpp"

#include <array>
#include <cassert>
#include <utility>

#include "fibeq/errors.hpp"

namespace fibeq {

BinaryTree::BinaryTree(AddressWidth width) : width_(width) {
  nodes_.push_back(BinaryTreeNode{});
}

NodeId BinaryTree::add_child(NodeId parent, bool one,
                             MetricsContext& metrics) {
  const auto id = static_cast<NodeId>(nodes_.size());
  BinaryTreeNode n;
  n.prefix = nodes_[parent].prefix.child(one);
  nodes_.push_back(n);
  (one ? nodes_[parent].right : nodes_[parent].left) = id;
  ++metrics.nodes_allocated;
  return id;
}

void BinaryTree::insert(const FibEntry& entry, MetricsContext& metrics) {
  if (entry.prefix.length() > width_.bits()) {
    throw ConfigError("prefix longer than the tree width");
  }
  NodeId cur = root();
  for (int depth = 0; depth < entry.prefix.length(); ++depth) {
    const bool one = entry.prefix.bit(depth);
    NodeId next = one ? nodes_[cur].right : nodes_[cur].left;
    if (next == kNoNode) next = add_child(cur, one, metrics);
    cur = next;
  }
  nodes_[cur].nexthop = entry.nexthop;
  nodes_[cur].original = true;
}

std::uint64_t BinaryTree::node_count() const {
  std::uint64_t count = 0;
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    ++count;
    if (nodes_[id].left != kNoNode) stack.push_back(nodes_[id].left);
    if (nodes_[id].right != kNoNode) stack.push_back(nodes_[id].right);
  }
  return count;
}

NodeId BinaryTree::find(const Prefix& prefix, MetricsContext& metrics) const {
  NodeId cur = root();
  ++metrics.node_accesses;
  for (int depth = 0; depth < prefix.length(); ++depth) {
    cur = prefix.bit(depth) ? nodes_[cur].right : nodes_[cur].left;
    if (cur == kNoNode) return kNoNode;
    ++metrics.node_accesses;
  }
  return cur;
}

NodeId BinaryTree::leaf_for(const Address& address,
                            MetricsContext& metrics) const {
  NodeId cur = root();
  ++metrics.node_accesses;
  int depth = 0;
  while (!nodes_[cur].is_leaf()) {
    const bool one = ((address.bits >> (127 - depth)) & 1) != 0;
    cur = one ? nodes_[cur].right : nodes_[cur].left;
    assert(cur != kNoNode);
    ++metrics.node_accesses;
    ++depth;
  }
  return cur;
}

std::vector<NodeId> BinaryTree::leaves(NodeId from,
                                       MetricsContext& metrics) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{from};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    ++metrics.node_accesses;
    const BinaryTreeNode& n = nodes_[id];
    if (n.is_leaf()) {
      out.push_back(id);
      continue;
    }
    if (n.right != kNoNode) stack.push_back(n.right);
    if (n.left != kNoNode) stack.push_back(n.left);
  }
  return out;
}

BinaryTree build_bt(const FibTable& table, MetricsContext& metrics) {
  BinaryTree bt(table.width);
  ++metrics.nodes_allocated;  // root
  for (const auto& e : table.entries) bt.insert(e, metrics);
  return bt;
}

void synthesize_default(BinaryTree& bt) {
  BinaryTreeNode& root = bt.node(bt.root());
  if (!root.nexthop.has_value()) {
    root.nexthop = kSynthesizedDefaultHop;
    root.synthesized = true;
  }
}

void leaf_push(BinaryTree& bt, MetricsContext& metrics) {
  struct Frame {
    NodeId id;
    NextHopId hop;
    bool synthesized;
  };
  const BinaryTreeNode& root = bt.node(bt.root());
  if (!root.nexthop.has_value()) {
    throw UsageError("leaf pushing needs a default route at the root");
  }
  std::vector<Frame> stack{{bt.root(), *root.nexthop, root.synthesized}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    BinaryTreeNode& n = bt.node(f.id);
    if (n.nexthop.has_value()) {
      f.hop = *n.nexthop;
      f.synthesized = n.synthesized;
    }
    if (n.is_leaf()) {
      if (!n.nexthop.has_value()) {
        n.nexthop = f.hop;
        n.synthesized = f.synthesized;
      }
      continue;
    }
    // Copy the links first: add_child may grow the arena.
    std::array<NodeId, 2> kids{n.left, n.right};
    for (int side = 0; side < 2; ++side) {
      if (kids[side] == kNoNode) {
        kids[side] = bt.add_child(f.id, side == 1, metrics);
      }
    }
    stack.push_back({kids[1], f.hop, f.synthesized});
    stack.push_back({kids[0], f.hop, f.synthesized});
  }
}

namespace {

void normalize_from(BinaryTree& bt, NodeId id) {
  if (bt.node(id).is_leaf()) return;
  const NodeId l = bt.node(id).left;
  const NodeId r = bt.node(id).right;
  assert(l != kNoNode && r != kNoNode);
  normalize_from(bt, l);
  normalize_from(bt, r);
  const BinaryTreeNode& ln = bt.node(l);
  const BinaryTreeNode& rn = bt.node(r);
  if (ln.is_leaf() && rn.is_leaf() && ln.nexthop == rn.nexthop) {
    BinaryTreeNode& n = bt.node(id);
    n.nexthop = ln.nexthop;
    n.synthesized = ln.synthesized && rn.synthesized;
    n.left = kNoNode;
    n.right = kNoNode;
  }
}

bool identical_from(const BinaryTree& a, NodeId x, const BinaryTree& b,
                    NodeId y) {
  const BinaryTreeNode& nx = a.node(x);
  const BinaryTreeNode& ny = b.node(y);
  if (nx.is_leaf() != ny.is_leaf()) return false;
  if (nx.is_leaf()) return nx.nexthop == ny.nexthop;
  return identical_from(a, nx.left, b, ny.left) &&
         identical_from(a, nx.right, b, ny.right);
}

DivergenceRecord make_record(const Prefix& prefix, const BinaryTreeNode& first,
                             const BinaryTreeNode& second) {
  return DivergenceRecord{prefix,
                          {*first.nexthop, *second.nexthop},
                          {first.synthesized, second.synthesized}};
}

void fill_structure(const BinaryTree& a, const BinaryTree& b,
                    StructureStats& out) {
  std::uint64_t real = 0;
  std::uint64_t total = 0;
  for (const BinaryTree* bt : {&a, &b}) {
    std::vector<NodeId> stack{bt->root()};
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      ++total;
      if (bt->node(id).original) ++real;
      if (bt->node(id).left != kNoNode) stack.push_back(bt->node(id).left);
      if (bt->node(id).right != kNoNode) stack.push_back(bt->node(id).right);
    }
  }
  out.nodes_real = real;
  out.nodes_glue = total - real;
  out.est_memory_bytes =
      memory_model::binary_tree_bytes(a.allocated() + b.allocated());
}

// Prepares both trees (build, default, leaf push) under the build timer.
std::pair<BinaryTree, BinaryTree> pushed_pair(const FibTable& t1,
                                              const FibTable& t2,
                                              MetricsContext& metrics,
                                              bool normalized) {
  if (t1.width != t2.width) {
    throw ConfigError("tables have mixed address widths");
  }
  ScopedTimer timer(&metrics.build_time);
  BinaryTree a = build_bt(t1, metrics);
  BinaryTree b = build_bt(t2, metrics);
  for (BinaryTree* bt : {&a, &b}) {
    synthesize_default(*bt);
    leaf_push(*bt, metrics);
    if (normalized) normalize(*bt);
  }
  return {std::move(a), std::move(b)};
}

class TacoRun {
 public:
  TacoRun(const BinaryTree& a, const BinaryTree& b, VerificationReport& report)
      : trees_{&a, &b}, report_(report) {}

  void run() {
    MetricsContext& m = report_.metrics;
    std::array<std::vector<NodeId>, 2> leaves{trees_[0]->leaves(0, m),
                                              trees_[1]->leaves(0, m)};
    // Leaves of tree `side`; look each one up in the other tree.
    for (int side = 0; side < 2; ++side) {
      const BinaryTree& self = *trees_[side];
      const BinaryTree& other = *trees_[1 - side];
      for (NodeId leaf : leaves[side]) {
        const BinaryTreeNode& ln = self.node(leaf);
        const NodeId match = other.find(ln.prefix, m);
        if (match == kNoNode) continue;  // the other tree is coarser here
        if (other.node(match).is_leaf()) {
          if (side == 1) continue;  // common prefix, compared from side 0
          ++m.comparisons;
          if (ln.nexthop != other.node(match).nexthop) {
            report_.divergences.push_back(
                make_record(ln.prefix, ln, other.node(match)));
          }
          continue;
        }
        expand(side, ln, match);
      }
    }
  }

 private:
  // `coarse` is a leaf of tree `side`; the other tree splits its region
  // further below `fine_root`. Compare the coarse hop with the other tree's
  // LPM result across the whole region.
  void expand(int side, const BinaryTreeNode& coarse, NodeId fine_root) {
    MetricsContext& m = report_.metrics;
    const BinaryTree& other = *trees_[1 - side];
    const AddressWidth width = other.width();
    bool recorded = false;
    auto check = [&](NodeId fine_leaf) {
      ++m.comparisons;
      const BinaryTreeNode& fn = other.node(fine_leaf);
      if (recorded || fn.nexthop == coarse.nexthop) return;
      recorded = true;
      report_.divergences.push_back(side == 0
                                        ? make_record(coarse.prefix, coarse, fn)
                                        : make_record(coarse.prefix, fn, coarse));
    };

    if (width.bits() <= kTacoAddressExpansionMaxWidth) {
      const std::uint64_t lo = first_address(coarse.prefix).index(width);
      const std::uint64_t hi = last_address(coarse.prefix, width).index(width);
      for (std::uint64_t a = lo; a <= hi; ++a) {
        check(other.leaf_for(Address::from_index(a, width), m));
      }
      return;
    }
    for (NodeId sub : other.leaves(fine_root, m)) {
      check(other.leaf_for(first_address(other.node(sub).prefix), m));
    }
  }

  std::array<const BinaryTree*, 2> trees_;
  VerificationReport& report_;
};

void normalized_walk(const BinaryTree& a, NodeId x, const BinaryTree& b,
                     NodeId y, VerificationReport& report) {
  MetricsContext& m = report.metrics;
  m.node_accesses += 2;
  const BinaryTreeNode& nx = a.node(x);
  const BinaryTreeNode& ny = b.node(y);
  if (nx.is_leaf() && ny.is_leaf()) {
    ++m.comparisons;
    if (nx.nexthop != ny.nexthop) {
      report.divergences.push_back(make_record(nx.prefix, nx, ny));
    }
    return;
  }
  if (nx.is_leaf() || ny.is_leaf()) {
    // Shapes differ. A normalized internal node always has a leaf below it
    // whose hop differs from the other side's single hop.
    ++m.comparisons;
    const bool a_is_leaf = nx.is_leaf();
    const BinaryTree& deep = a_is_leaf ? b : a;
    const BinaryTreeNode& flat = a_is_leaf ? nx : ny;
    for (NodeId leaf : deep.leaves(a_is_leaf ? y : x, m)) {
      const BinaryTreeNode& ln = deep.node(leaf);
      if (ln.nexthop != flat.nexthop) {
        report.divergences.push_back(a_is_leaf
                                         ? make_record(nx.prefix, nx, ln)
                                         : make_record(nx.prefix, ln, ny));
        return;
      }
    }
    return;
  }
  normalized_walk(a, nx.left, b, ny.left, report);
  normalized_walk(a, nx.right, b, ny.right, report);
}

}  // namespace

void normalize(BinaryTree& bt) { normalize_from(bt, bt.root()); }

bool structurally_identical(const BinaryTree& a, const BinaryTree& b) {
  return identical_from(a, a.root(), b, b.root());
}

VerificationReport taco_verify(const FibTable& t1, const FibTable& t2) {
  VerificationReport report;
  report.algorithm = "taco";
  auto [a, b] = pushed_pair(t1, t2, report.metrics, /*normalized=*/false);
  {
    ScopedTimer timer(&report.metrics.verify_time);
    TacoRun(a, b, report).run();
  }
  report.equivalent = report.divergences.empty();
  fill_structure(a, b, report.structure);
  return report;
}

VerificationReport normalization_verify(const FibTable& t1,
                                        const FibTable& t2) {
  VerificationReport report;
  report.algorithm = "normalization";
  auto [a, b] = pushed_pair(t1, t2, report.metrics, /*normalized=*/true);
  {
    ScopedTimer timer(&report.metrics.verify_time);
    normalized_walk(a, a.root(), b, b.root(), report);
  }
  report.equivalent = report.divergences.empty();
  fill_structure(a, b, report.structure);
  return report;
}

}  // namespace fibeq
