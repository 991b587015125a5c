#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "crossmap/arcs.hpp"

namespace crossmap {

enum class Pattern { crossing, nesting };

std::string_view to_string(Pattern kind);
Pattern parse_pattern(std::string_view text);

inline constexpr int kMaxK = 8;
inline constexpr std::size_t kOracleMaxArcs = 24;

/// k arcs, sorted by left endpoint, certifying a k-crossing or k-nesting.
///
/// crossing: a_1 < ... < a_k, b_1 < ... < b_k, and a_k <= b_1 (enhanced)
///           or a_k < b_1 (classical).
/// nesting:  a_1 < ... < a_k, b_k < ... < b_1, and a_k <= b_k (enhanced)
///           or a_k < b_k (classical).
struct CrossingWitness {
  Pattern kind = Pattern::crossing;
  ArcMode mode = ArcMode::enhanced;
  std::vector<Arc> arcs;

  int k() const noexcept { return static_cast<int>(arcs.size()); }
  friend bool operator==(const CrossingWitness&, const CrossingWitness&) = default;
};

/// Checks the chain inequalities directly on arcs sorted by left endpoint.
bool satisfies_chain(std::span<const Arc> arcs, Pattern kind, ArcMode mode);
bool is_valid(const CrossingWitness& witness);

/// Two arcs (first.left < second.left) forming a 2-crossing or 2-nesting.
bool forms_pair(const Arc& first, const Arc& second, Pattern kind, ArcMode mode);

// Pruned detector. A k-subset is a witness iff every pair in it is one, so
// the search grows chains of pairwise-compatible arcs in left-endpoint order.
// The mode argument selects the inequality; classical queries never pick
// loops. Returned witnesses are lexicographically least by left endpoints.
std::optional<CrossingWitness> find_k_pattern(const ArcSet& arcs, int k, Pattern kind, ArcMode mode);
std::optional<CrossingWitness> find_k_crossing(const ArcSet& arcs, int k);
std::optional<CrossingWitness> find_k_crossing(const ArcSet& arcs, int k, ArcMode mode);
std::optional<CrossingWitness> find_k_nesting(const ArcSet& arcs, int k);
std::optional<CrossingWitness> find_k_nesting(const ArcSet& arcs, int k, ArcMode mode);

/// Allocation-free presence test used by the counting loops. Any k >= 1.
bool has_k_pattern(std::span<const Arc> arcs, int k, Pattern kind, ArcMode mode);

std::uint64_t count_k_witnesses(const ArcSet& arcs, int k, Pattern kind, ArcMode mode);
std::vector<CrossingWitness> list_k_witnesses(const ArcSet& arcs, int k, Pattern kind, ArcMode mode);

/// Largest k with a k-pattern, 0 when no arc qualifies.
int max_pattern_number(std::span<const Arc> arcs, Pattern kind, ArcMode mode);
int max_crossing_number(const ArcSet& arcs, ArcMode mode);
int max_nesting_number(const ArcSet& arcs, ArcMode mode);

// Brute-force reference: every k-subset, no pruning. Throws TooManyArcs
// above kOracleMaxArcs arcs.
std::optional<CrossingWitness> oracle_find(const ArcSet& arcs, int k, Pattern kind, ArcMode mode);
std::uint64_t oracle_count(const ArcSet& arcs, int k, Pattern kind, ArcMode mode);

struct CrossingReport {
  int max_crossing = 0;
  int max_nesting = 0;
  std::map<std::pair<Pattern, int>, std::uint64_t> counts;
};

CrossingReport crossing_report(const ArcSet& arcs, ArcMode mode);

}  // namespace crossmap
