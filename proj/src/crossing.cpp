#include "crossmap/crossing.hpp"

#include <algorithm>
#include <string>

#include "crossmap/error.hpp"

namespace crossmap {

std::string_view to_string(Pattern kind) {
  return kind == Pattern::crossing ? "crossing" : "nesting";
}

Pattern parse_pattern(std::string_view text) {
  if (text == "crossing") return Pattern::crossing;
  if (text == "nesting") return Pattern::nesting;
  fail(ErrorCode::ParseError, "unknown pattern kind '" + std::string(text) + "'");
}

namespace {

void check_k(int k) {
  if (k < 1 || k > kMaxK) {
    fail(ErrorCode::InvalidK, "k = " + std::to_string(k) + " outside [1, " + std::to_string(kMaxK) + "]");
  }
}

bool single_ok(const Arc& arc, ArcMode mode) {
  return mode == ArcMode::enhanced ? arc.left <= arc.right : arc.left < arc.right;
}

bool within(int lower, int upper, ArcMode mode) {
  return mode == ArcMode::enhanced ? lower <= upper : lower < upper;
}

// Depth-first search over chains of pairwise-compatible arcs. `visit` gets
// the chosen indices and returns true to stop the search.
template <typename Visit>
class ChainSearch {
 public:
  ChainSearch(std::span<const Arc> arcs, int k, Pattern kind, ArcMode mode, Visit& visit)
      : arcs_(arcs), k_(k), kind_(kind), mode_(mode), visit_(visit), chain_(static_cast<std::size_t>(k)) {}

  bool run() { return extend(0, 0); }

 private:
  bool extend(int depth, std::size_t start) {
    const std::size_t n = arcs_.size();
    for (std::size_t i = start; i < n; ++i) {
      if (n - i < static_cast<std::size_t>(k_ - depth)) break;
      const Arc& candidate = arcs_[i];
      if (depth > 0 && exhausted(candidate, depth)) break;
      if (!single_ok(candidate, mode_)) continue;
      bool compatible = true;
      for (int j = 0; j < depth && compatible; ++j) {
        compatible = forms_pair(arcs_[chain_[static_cast<std::size_t>(j)]], candidate, kind_, mode_);
      }
      if (!compatible) continue;
      chain_[static_cast<std::size_t>(depth)] = i;
      if (depth + 1 == k_) {
        if (visit_(std::span<const std::size_t>(chain_))) return true;
      } else if (extend(depth + 1, i + 1)) {
        return true;
      }
    }
    return false;
  }

  // Lefts only grow from here on, so once the bound fails it fails for
  // every later candidate too.
  bool exhausted(const Arc& candidate, int depth) const {
    if (kind_ == Pattern::crossing) {
      const Arc& first = arcs_[chain_[0]];
      return !within(candidate.left, first.right, mode_);
    }
    const Arc& last = arcs_[chain_[static_cast<std::size_t>(depth - 1)]];
    return candidate.left >= last.right;
  }

  std::span<const Arc> arcs_;
  int k_;
  Pattern kind_;
  ArcMode mode_;
  Visit& visit_;
  std::vector<std::size_t> chain_;
};

template <typename Visit>
bool search_chains(std::span<const Arc> arcs, int k, Pattern kind, ArcMode mode, Visit visit) {
  if (k < 1 || static_cast<std::size_t>(k) > arcs.size()) return false;
  ChainSearch<Visit> search(arcs, k, kind, mode, visit);
  return search.run();
}

CrossingWitness make_witness(std::span<const Arc> arcs, std::span<const std::size_t> chosen, Pattern kind,
                             ArcMode mode) {
  CrossingWitness w{kind, mode, {}};
  w.arcs.reserve(chosen.size());
  for (auto i : chosen) w.arcs.push_back(arcs[i]);
  return w;
}

std::vector<Arc> sorted_copy(const ArcSet& arcs) {
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

bool forms_pair(const Arc& first, const Arc& second, Pattern kind, ArcMode mode) {
  if (!(first.left < second.left)) return false;
  if (kind == Pattern::crossing) {
    return first.right < second.right && within(second.left, first.right, mode);
  }
  return second.right < first.right && within(second.left, second.right, mode);
}

bool satisfies_chain(std::span<const Arc> arcs, Pattern kind, ArcMode mode) {
  if (arcs.empty()) return false;
  const std::size_t k = arcs.size();
  for (const auto& arc : arcs) {
    if (arc.left > arc.right) return false;
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!(arcs[i].left < arcs[i + 1].left)) return false;
    const bool ordered = kind == Pattern::crossing ? arcs[i].right < arcs[i + 1].right
                                                   : arcs[i].right > arcs[i + 1].right;
    if (!ordered) return false;
  }
  const int bound = kind == Pattern::crossing ? arcs.front().right : arcs.back().right;
  return within(arcs.back().left, bound, mode);
}

bool is_valid(const CrossingWitness& witness) { return satisfies_chain(witness.arcs, witness.kind, witness.mode); }

std::optional<CrossingWitness> find_k_pattern(const ArcSet& arcs, int k, Pattern kind, ArcMode mode) {
  check_k(k);
  std::optional<CrossingWitness> found;
  search_chains(arcs.arcs, k, kind, mode, [&](std::span<const std::size_t> chosen) {
    found = make_witness(arcs.arcs, chosen, kind, mode);
    return true;
  });
  return found;
}

std::optional<CrossingWitness> find_k_crossing(const ArcSet& arcs, int k) {
  return find_k_pattern(arcs, k, Pattern::crossing, arcs.mode);
}
std::optional<CrossingWitness> find_k_crossing(const ArcSet& arcs, int k, ArcMode mode) {
  return find_k_pattern(arcs, k, Pattern::crossing, mode);
}
std::optional<CrossingWitness> find_k_nesting(const ArcSet& arcs, int k) {
  return find_k_pattern(arcs, k, Pattern::nesting, arcs.mode);
}
std::optional<CrossingWitness> find_k_nesting(const ArcSet& arcs, int k, ArcMode mode) {
  return find_k_pattern(arcs, k, Pattern::nesting, mode);
}

bool has_k_pattern(std::span<const Arc> arcs, int k, Pattern kind, ArcMode mode) {
  return search_chains(arcs, k, kind, mode, [](std::span<const std::size_t>) { return true; });
}

std::uint64_t count_k_witnesses(const ArcSet& arcs, int k, Pattern kind, ArcMode mode) {
  check_k(k);
  std::uint64_t count = 0;
  search_chains(arcs.arcs, k, kind, mode, [&](std::span<const std::size_t>) {
    ++count;
    return false;
  });
  return count;
}

std::vector<CrossingWitness> list_k_witnesses(const ArcSet& arcs, int k, Pattern kind, ArcMode mode) {
  check_k(k);
  std::vector<CrossingWitness> out;
  search_chains(arcs.arcs, k, kind, mode, [&](std::span<const std::size_t> chosen) {
    out.push_back(make_witness(arcs.arcs, chosen, kind, mode));
    return false;
  });
  return out;
}

int max_pattern_number(std::span<const Arc> arcs, Pattern kind, ArcMode mode) {
  int best = 0;
  while (static_cast<std::size_t>(best) < arcs.size() && has_k_pattern(arcs, best + 1, kind, mode)) ++best;
  return best;
}

int max_crossing_number(const ArcSet& arcs, ArcMode mode) {
  return max_pattern_number(arcs.arcs, Pattern::crossing, mode);
}

int max_nesting_number(const ArcSet& arcs, ArcMode mode) {
  return max_pattern_number(arcs.arcs, Pattern::nesting, mode);
}

namespace {

// Visits every k-subset of indices in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, int k, Visit visit) {
  const auto kk = static_cast<std::size_t>(k);
  if (kk > n) return;
  std::vector<std::size_t> idx(kk);
  for (std::size_t i = 0; i < kk; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return;
    std::size_t i = kk;
    while (i > 0 && idx[i - 1] == n - kk + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < kk; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <typename Visit>
void oracle_scan(const ArcSet& arcs, int k, Pattern kind, ArcMode mode, Visit visit) {
  check_k(k);
  if (arcs.size() > kOracleMaxArcs) {
    fail(ErrorCode::TooManyArcs, std::to_string(arcs.size()) + " arcs exceed the oracle limit of " +
                                     std::to_string(kOracleMaxArcs));
  }
  const auto sorted = sorted_copy(arcs);
  std::vector<Arc> chosen;
  for_each_subset(sorted.size(), k, [&](const std::vector<std::size_t>& idx) {
    chosen.clear();
    for (auto i : idx) chosen.push_back(sorted[i]);
    return satisfies_chain(chosen, kind, mode) && visit(chosen);
  });
}

}  // namespace

std::optional<CrossingWitness> oracle_find(const ArcSet& arcs, int k, Pattern kind, ArcMode mode) {
  std::optional<CrossingWitness> found;
  oracle_scan(arcs, k, kind, mode, [&](const std::vector<Arc>& chosen) {
    found = CrossingWitness{kind, mode, chosen};
    return true;
  });
  return found;
}

std::uint64_t oracle_count(const ArcSet& arcs, int k, Pattern kind, ArcMode mode) {
  std::uint64_t count = 0;
  oracle_scan(arcs, k, kind, mode, [&](const std::vector<Arc>&) {
    ++count;
    return false;
  });
  return count;
}

CrossingReport crossing_report(const ArcSet& arcs, ArcMode mode) {
  CrossingReport report;
  report.max_crossing = max_crossing_number(arcs, mode);
  report.max_nesting = max_nesting_number(arcs, mode);
  for (auto kind : {Pattern::crossing, Pattern::nesting}) {
    const int top = kind == Pattern::crossing ? report.max_crossing : report.max_nesting;
    for (int k = 1; k <= std::min(top, kMaxK); ++k) {
      report.counts[{kind, k}] = count_k_witnesses(arcs, k, kind, mode);
    }
  }
  return report;
}

}  // namespace crossmap
