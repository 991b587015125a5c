#include "crossmap/bijection.hpp"

#include <string>

#include "crossmap/disjoint_sets.hpp"
#include "crossmap/error.hpp"

namespace crossmap {

namespace {

// Relabels union-find classes over 1..n by first occurrence.
PartialPartition collect(int n, DisjointSets& sets, const std::vector<bool>& present) {
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

CrossingWitness shift_rights(const CrossingWitness& w, int delta, ArcMode mode) {
  CrossingWitness out{w.kind, mode, w.arcs};
  for (auto& arc : out.arcs) arc.right += delta;
  return out;
}

}  // namespace

PartialPartition forward(const PartialPartition& p) {
  const int size = p.n() + 1;
  if (size > kMaxGroundSize) fail(ErrorCode::OutOfRange, "image would exceed the ground-set cap");
  DisjointSets sets(size + 1);
  for (const auto& arc : arcs_enhanced(p)) sets.unite(arc.left, arc.right + 1);
  return collect(size, sets, std::vector<bool>(static_cast<std::size_t>(size) + 1, true));
}

PartialPartition reverse(const PartialPartition& q) {
  if (!q.is_full()) fail(ErrorCode::NotFull, "reverse needs a partition of all of [n+1]: " + to_text(q));
  if (q.n() < 1) fail(ErrorCode::OutOfRange, "reverse needs n+1 >= 1");
  const int n = q.n() - 1;
  DisjointSets sets(n + 1);
  std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
  for (const auto& arc : arcs_classical(q)) {
    const int right = arc.right - 1;
    present[static_cast<std::size_t>(arc.left)] = present[static_cast<std::size_t>(right)] = true;
    sets.unite(arc.left, right);
  }
  return collect(n, sets, present);
}

CrossingWitness witness_forward(const CrossingWitness& w) { return shift_rights(w, +1, ArcMode::classical); }

CrossingWitness witness_reverse(const CrossingWitness& w) { return shift_rights(w, -1, ArcMode::enhanced); }

}  // namespace crossmap
