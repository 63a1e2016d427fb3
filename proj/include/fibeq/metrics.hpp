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

#ifndef FIBEQ_METRICS_HPP_
#define FIBEQ_METRICS_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>

namespace fibeq {

// Per-run counters. A run owns its context; concurrent readers keep their own
// and merge afterwards.
struct MetricsContext {
  std::uint64_t node_accesses = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t nodes_allocated = 0;
  std::chrono::nanoseconds build_time{0};
  std::chrono::nanoseconds verify_time{0};

  void merge(const MetricsContext& other) {
    node_accesses += other.node_accesses;
    comparisons += other.comparisons;
    nodes_allocated += other.nodes_allocated;
    build_time += other.build_time;
    verify_time += other.verify_time;
  }

  double accesses_per_comparison() const {
    return comparisons == 0 ? 0.0
                            : static_cast<double>(node_accesses) /
                                  static_cast<double>(comparisons);
  }
};

// Adds the elapsed time to `*target` when it goes out of scope.
class ScopedTimer {
 public:
  explicit ScopedTimer(std::chrono::nanoseconds* target)
      : target_(target), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() { *target_ += std::chrono::steady_clock::now() - start_; }

  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  std::chrono::nanoseconds* target_;
  std::chrono::steady_clock::time_point start_;
};

inline double to_ms(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

// Memory model used for reports: a fixed byte cost per node kind, so that
// numbers are reproducible across platforms.
//
//   joint trie node   : 3 links (24) + prefix (24) + kind (8) = 56 bytes,
//                       plus 16 bytes per next-hop slot (one per table)
//   binary tree node  : 2 links (16) + prefix (24) + hop (16) + flags (8)
//                       = 64 bytes
namespace memory_model {
inline constexpr std::size_t kJointNodeBytes = 56;
inline constexpr std::size_t kJointHopSlotBytes = 16;
inline constexpr std::size_t kBinaryNodeBytes = 64;

inline constexpr std::uint64_t joint_trie_bytes(std::uint64_t nodes,
                                                std::size_t tables) {
  return nodes * (kJointNodeBytes + kJointHopSlotBytes * tables);
}
inline constexpr std::uint64_t binary_tree_bytes(std::uint64_t nodes) {
  return nodes * kBinaryNodeBytes;
}
}  // namespace memory_model

}  // namespace fibeq

#endif  // FIBEQ_METRICS_HPP_
