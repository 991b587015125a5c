#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "crossmap/crossing.hpp"

namespace crossmap {

inline constexpr int kDefaultBudget = 12;

struct CountOptions {
  int parts = 1;              // enumeration sub-ranges counted on separate threads
  int max_n = kDefaultBudget; // largest enumerated ground set allowed
};

std::uint64_t binomial(int n, int i);

/// Bell numbers from the Bell triangle, 0 <= n <= 25.
std::uint64_t bell(int n);

/// Partitions of [n] (or of subsets of [n] when `partial`) with no k-pattern
/// of the given kind and mode. Early-exits per partition.
std::uint64_t count_avoiding(int k, int n, Pattern kind, ArcMode mode, bool partial,
                             const CountOptions& options = {});

/// C_k(n): partitions of [n] avoiding classical k-crossings.
std::uint64_t count_C(int k, int n, const CountOptions& options = {});
/// E_k(n): partitions of [n] avoiding enhanced k-crossings.
std::uint64_t count_E(int k, int n, const CountOptions& options = {});
/// Partitions of subsets of [n] avoiding enhanced k-crossings.
std::uint64_t count_partial_E(int k, int n, const CountOptions& options = {});

struct IdentityReport {
  int k = 0;
  int n = 0;
  std::uint64_t lhs = 0;                 // C_k(n+1)
  std::vector<std::uint64_t> e_values;   // E_k(i), i = 0..n
  std::vector<std::uint64_t> rhs_terms;  // binom(n,i) * E_k(i)
  std::uint64_t rhs = 0;
  std::uint64_t rhs_direct = 0;          // partial partitions over [n] avoiding enhanced k-crossings
  bool holds = false;                    // lhs == rhs

  bool routes_agree() const noexcept { return rhs == rhs_direct; }
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// C_k(n+1) against the binomial transform of E_k, plus the direct count of
/// partial partitions as a second right-hand side.
IdentityReport verify_identity(int k, int n, const CountOptions& options = {});

struct EigenReport {
  int n = 0;
  std::uint64_t lhs = 0;                 // B_{n+1} from the triangle
  std::vector<std::uint64_t> rhs_terms;  // binom(n,i) * B_i
  std::uint64_t rhs = 0;
  std::uint64_t enumerated = 0;          // partitions of [n+1] enumerated
  std::uint64_t partial_count = 0;       // partial partitions over [n] enumerated
  std::uint64_t distinct_images = 0;     // distinct reverse images of partitions of [n+1]

  bool holds() const noexcept {
    return lhs == rhs && enumerated == lhs && partial_count == lhs && distinct_images == lhs;
  }
};

/// B_{n+1} = sum binom(n,i) B_i checked by triangle values, by enumeration
/// and by pushing every partition of [n+1] through reverse. n <= 12.
EigenReport verify_eigensequence(int n, const CountOptions& options = {});

/// Distribution of the maximum pattern number on both sides of the
/// bijection. Index k holds the count with maximum exactly k, k <= k_max;
/// the final slot collects everything above k_max.
struct DistributionTable {
  int n = 0;
  Pattern kind = Pattern::crossing;
  int k_max = 0;
  std::vector<std::uint64_t> partial_enhanced;  // partial partitions over [n]
  std::vector<std::uint64_t> full_classical;    // partitions of [n+1]

  bool matches() const noexcept { return partial_enhanced == full_classical; }
};

DistributionTable distribution_table(int n, int k_max, Pattern kind, const CountOptions& options = {});

enum class Family { C, E, Bell, PartialE };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

struct SequenceRow {
  Family family = Family::C;
  std::optional<int> k;
  int n = 0;
  std::uint64_t value = 0;

  friend bool operator==(const SequenceRow&, const SequenceRow&) = default;
};

struct SequenceTable {
  std::vector<SequenceRow> rows;

  /// Inserts a row; throws OutOfRange when (family, k, n) is already present.
  void add(Family family, std::optional<int> k, int n, std::uint64_t value);
  std::optional<std::uint64_t> find(Family family, std::optional<int> k, int n) const;

  friend bool operator==(const SequenceTable&, const SequenceTable&) = default;
};

/// C_k, E_k and partial-E_k for n = 0..n_max, and Bell for n = 0..n_max.
SequenceTable sequence_table(int k, int n_max, const CountOptions& options = {});

}  // namespace crossmap
