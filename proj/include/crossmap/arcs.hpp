#pragma once

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "crossmap/partition.hpp"

namespace crossmap {

/// A pair of elements consecutive within a block, left <= right. A loop
/// (left == right) stands for a singleton block under the enhanced view.
struct Arc {
  int left = 0;
  int right = 0;

  bool is_loop() const noexcept { return left == right; }
  int length() const noexcept { return right - left; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class ArcMode { classical, enhanced };

std::string_view to_string(ArcMode mode);
ArcMode parse_arc_mode(std::string_view text);

/// Arcs of one partition, sorted by left endpoint. Left endpoints are
/// pairwise distinct, as are right endpoints; classical sets hold no loops.
struct ArcSet {
  ArcMode mode = ArcMode::classical;
  std::vector<Arc> arcs;

  std::size_t size() const noexcept { return arcs.size(); }
  bool empty() const noexcept { return arcs.empty(); }
  auto begin() const noexcept { return arcs.begin(); }
  auto end() const noexcept { return arcs.end(); }

  friend bool operator==(const ArcSet&, const ArcSet&) = default;
};

ArcSet arcs_classical(const PartialPartition& p);
ArcSet arcs_enhanced(const PartialPartition& p);
ArcSet arcs_of(const PartialPartition& p, ArcMode mode);

// Allocation-reusing variant for hot enumeration loops.
void arcs_into(const PartialPartition& p, ArcMode mode, std::vector<Arc>& out);

/// Sorted multiset of right - left over all arcs (loops give 0).
std::vector<int> distance_multiset(const ArcSet& arcs);

/// Rebuilds the partition over [n] whose enhanced arcs are `arcs`.
/// Elements touched by no arc are absent.
PartialPartition partition_from_arcs(int n, const ArcSet& arcs);

}  // namespace crossmap
