#include "crossmap/arcs.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "crossmap/disjoint_sets.hpp"
#include "crossmap/error.hpp"

namespace crossmap {

std::string_view to_string(ArcMode mode) {
  return mode == ArcMode::classical ? "classical" : "enhanced";
}

ArcMode parse_arc_mode(std::string_view text) {
  if (text == "classical") return ArcMode::classical;
  if (text == "enhanced") return ArcMode::enhanced;
  fail(ErrorCode::ParseError, "unknown arc mode '" + std::string(text) + "'");
}

void arcs_into(const PartialPartition& p, ArcMode mode, std::vector<Arc>& out) {
  out.clear();
  const auto labels = p.labels();
  std::array<int, kMaxGroundSize + 1> block_size{};
  if (mode == ArcMode::enhanced) {
    for (auto v : labels) ++block_size[v];
  }
  // Walk right to left so each element meets its in-block successor first;
  // arcs come out in decreasing left order.
  std::array<int, kMaxGroundSize + 1> successor{};
  for (int j = p.n(); j >= 1; --j) {
    const auto v = labels[static_cast<std::size_t>(j - 1)];
    if (v == 0) continue;
    if (successor[v] != 0) {
      out.push_back({j, successor[v]});
    } else if (mode == ArcMode::enhanced && block_size[v] == 1) {
      out.push_back({j, j});
    }
    successor[v] = j;
  }
  std::reverse(out.begin(), out.end());
}

ArcSet arcs_of(const PartialPartition& p, ArcMode mode) {
  ArcSet set{mode, {}};
  arcs_into(p, mode, set.arcs);
  return set;
}

ArcSet arcs_classical(const PartialPartition& p) { return arcs_of(p, ArcMode::classical); }
ArcSet arcs_enhanced(const PartialPartition& p) { return arcs_of(p, ArcMode::enhanced); }

std::vector<int> distance_multiset(const ArcSet& arcs) {
  std::vector<int> distances;
  distances.reserve(arcs.size());
  for (const auto& arc : arcs) distances.push_back(arc.length());
  std::sort(distances.begin(), distances.end());
  return distances;
}

PartialPartition partition_from_arcs(int n, const ArcSet& arcs) {
  if (n < 0 || n > kMaxGroundSize) fail(ErrorCode::OutOfRange, "ground set size out of range");
  DisjointSets sets(n + 1);
  std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> has_successor(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> has_predecessor(static_cast<std::size_t>(n) + 1, false);
  for (const auto& arc : arcs) {
    if (arc.left < 1 || arc.right > n || arc.left > arc.right) {
      fail(ErrorCode::OutOfRange, "arc (" + std::to_string(arc.left) + "," + std::to_string(arc.right) +
                                      ") invalid over [" + std::to_string(n) + "]");
    }
    const auto l = static_cast<std::size_t>(arc.left);
    const auto r = static_cast<std::size_t>(arc.right);
    if (has_successor[l] || has_predecessor[r]) {
      fail(ErrorCode::DuplicateElement, "arc endpoints repeat at (" + std::to_string(arc.left) + "," +
                                            std::to_string(arc.right) + ")");
    }
    has_successor[l] = has_predecessor[r] = true;
    present[l] = present[r] = true;
    sets.unite(arc.left, arc.right);
  }
  std::vector<Label> labels(static_cast<std::size_t>(n), 0);
  std::vector<Label> root_label(static_cast<std::size_t>(n) + 1, 0);
  Label next = 1;
  for (int e = 1; e <= n; ++e) {
    if (!present[static_cast<std::size_t>(e)]) continue;
    auto& id = root_label[static_cast<std::size_t>(sets.find(e))];
    if (id == 0) id = next++;
    labels[static_cast<std::size_t>(e - 1)] = id;
  }
  return PartialPartition::from_labels(std::move(labels));
}

}  // namespace crossmap
