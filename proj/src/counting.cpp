#include "crossmap/counting.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "crossmap/bijection.hpp"
#include "crossmap/error.hpp"

namespace crossmap {

namespace {

constexpr int kEigenMaxN = 12;

void check_k(int k) {
  if (k < 1 || k > kMaxK) {
    fail(ErrorCode::InvalidK, "k = " + std::to_string(k) + " outside [1, " + std::to_string(kMaxK) + "]");
  }
}

// Partial enumeration over [n] costs as much as full enumeration over [n+1].
void check_budget(int n, bool partial, const CountOptions& options) {
  if (n < 0) fail(ErrorCode::OutOfRange, "n must be nonnegative");
  const int effective = partial ? n + 1 : n;
  const int cap = std::min(options.max_n, kMaxEnumerationSize);
  if (effective > cap) {
    fail(ErrorCode::OutOfBudget, "n = " + std::to_string(n) + (partial ? " (partial)" : "") +
                                     " exceeds the enumeration budget of " + std::to_string(cap));
  }
  if (options.parts < 1) fail(ErrorCode::OutOfRange, "parts must be at least 1");
}

// Runs `make_worker()` once per sub-range on its own thread; each worker
// maps a partition to a count and the results are summed. Workers share
// nothing, so the sum is independent of the split.
template <typename MakeWorker>
std::uint64_t parallel_sum(int n, bool partial, int parts, MakeWorker make_worker) {
  const auto ranges = split_range(n, parts, partial);
  std::vector<std::uint64_t> partials(ranges.size(), 0);
  auto run = [&](std::size_t i) {
    auto worker = make_worker();
    std::uint64_t total = 0;
    for_each_partition(ranges[i], [&](const PartialPartition& p) { total += worker(p); });
    partials[i] = total;
  };
  if (ranges.size() == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) threads.emplace_back(run, i);
  }
  std::uint64_t sum = 0;
  for (auto v : partials) sum = checked_add(sum, v);
  return sum;
}

}  // namespace

std::uint64_t binomial(int n, int i) {
  if (n < 0 || n > 62 || i < 0 || i > n) {
    fail(ErrorCode::OutOfRange, "binomial(" + std::to_string(n) + "," + std::to_string(i) + ") outside 0 <= i <= n <= 62");
  }
  std::vector<std::uint64_t> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(m) + 1, 1);
    for (int j = 1; j < m; ++j) {
      next[static_cast<std::size_t>(j)] =
          checked_add(row[static_cast<std::size_t>(j - 1)], row[static_cast<std::size_t>(j)]);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

std::uint64_t bell(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "bell(n) needs n >= 0");
  if (n == 0) return 1;
  // Row m of the triangle starts with B_m and ends with B_{m+1}.
  std::vector<std::uint64_t> row{1};
  for (int m = 1; m < n; ++m) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto above : row) next.push_back(checked_add(next.back(), above));
    row = std::move(next);
  }
  return row.back();
}

std::uint64_t count_avoiding(int k, int n, Pattern kind, ArcMode mode, bool partial, const CountOptions& options) {
  check_k(k);
  check_budget(n, partial, options);
  return parallel_sum(n, partial, options.parts, [k, kind, mode] {
    return [k, kind, mode, arcs = std::vector<Arc>{}](const PartialPartition& p) mutable -> std::uint64_t {
      arcs_into(p, mode, arcs);
      return has_k_pattern(arcs, k, kind, mode) ? 0 : 1;
    };
  });
}

std::uint64_t count_C(int k, int n, const CountOptions& options) {
  return count_avoiding(k, n, Pattern::crossing, ArcMode::classical, false, options);
}

std::uint64_t count_E(int k, int n, const CountOptions& options) {
  return count_avoiding(k, n, Pattern::crossing, ArcMode::enhanced, false, options);
}

std::uint64_t count_partial_E(int k, int n, const CountOptions& options) {
  return count_avoiding(k, n, Pattern::crossing, ArcMode::enhanced, true, options);
}

IdentityReport verify_identity(int k, int n, const CountOptions& options) {
  check_k(k);
  check_budget(n + 1, false, options);
  IdentityReport report;
  report.k = k;
  report.n = n;
  report.lhs = count_C(k, n + 1, options);
  for (int i = 0; i <= n; ++i) {
    const auto e = count_E(k, i, options);
    const auto term = checked_mul(binomial(n, i), e);
    report.e_values.push_back(e);
    report.rhs_terms.push_back(term);
    report.rhs = checked_add(report.rhs, term);
  }
  report.rhs_direct = count_partial_E(k, n, options);
  report.holds = report.lhs == report.rhs;
  return report;
}

EigenReport verify_eigensequence(int n, const CountOptions& options) {
  if (n < 0) fail(ErrorCode::OutOfRange, "n must be nonnegative");
  if (n > kEigenMaxN) {
    fail(ErrorCode::OutOfBudget, "eigensequence check is limited to n <= " + std::to_string(kEigenMaxN));
  }
  const CountOptions budget{options.parts, kEigenMaxN + 1};
  EigenReport report;
  report.n = n;
  report.lhs = bell(n + 1);
  for (int i = 0; i <= n; ++i) {
    const auto term = checked_mul(binomial(n, i), bell(i));
    report.rhs_terms.push_back(term);
    report.rhs = checked_add(report.rhs, term);
  }
  check_budget(n + 1, false, budget);
  report.enumerated = parallel_sum(n + 1, false, budget.parts, [] {
    return [](const PartialPartition&) -> std::uint64_t { return 1; };
  });
  report.partial_count = parallel_sum(n, true, budget.parts, [] {
    return [](const PartialPartition&) -> std::uint64_t { return 1; };
  });

  // Labels over [n <= 12] are below 16, so 4 bits each packs an image into a key.
  std::vector<std::uint64_t> keys;
  for_each_partition(whole_range(n + 1, false), [&](const PartialPartition& q) {
    const auto p = reverse(q);
    std::uint64_t key = 0;
    for (auto v : p.labels()) key = (key << 4) | v;
    keys.push_back(key);
  });
  std::sort(keys.begin(), keys.end());
  report.distinct_images = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
  return report;
}

DistributionTable distribution_table(int n, int k_max, Pattern kind, const CountOptions& options) {
  if (k_max < 0) fail(ErrorCode::InvalidK, "k_max must be nonnegative");
  check_budget(n + 1, false, options);
  DistributionTable table{n, kind, k_max, {}, {}};
  const auto slots = static_cast<std::size_t>(k_max) + 2;
  auto tally = [&](int size, bool partial, ArcMode mode) {
    std::vector<std::uint64_t> column(slots, 0);
    std::vector<Arc> arcs;
    for_each_partition(whole_range(size, partial), [&](const PartialPartition& p) {
      arcs_into(p, mode, arcs);
      const int top = max_pattern_number(arcs, kind, mode);
      ++column[std::min(static_cast<std::size_t>(top), slots - 1)];
    });
    return column;
  };
  table.partial_enhanced = tally(n, true, ArcMode::enhanced);
  table.full_classical = tally(n + 1, false, ArcMode::classical);
  return table;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::C: return "C";
    case Family::E: return "E";
    case Family::Bell: return "Bell";
    case Family::PartialE: return "partial-E";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "C") return Family::C;
  if (text == "E") return Family::E;
  if (text == "Bell") return Family::Bell;
  if (text == "partial-E") return Family::PartialE;
  fail(ErrorCode::ParseError, "unknown family '" + std::string(text) + "'");
}

void SequenceTable::add(Family family, std::optional<int> k, int n, std::uint64_t value) {
  if (find(family, k, n)) {
    fail(ErrorCode::OutOfRange, "duplicate row " + std::string(to_string(family)) + " n=" + std::to_string(n));
  }
  rows.push_back({family, k, n, value});
}

std::optional<std::uint64_t> SequenceTable::find(Family family, std::optional<int> k, int n) const {
  for (const auto& row : rows) {
    if (row.family == family && row.k == k && row.n == n) return row.value;
  }
  return std::nullopt;
}

SequenceTable sequence_table(int k, int n_max, const CountOptions& options) {
  check_k(k);
  check_budget(n_max, false, options);
  SequenceTable table;
  for (int n = 0; n <= n_max; ++n) table.add(Family::C, k, n, count_C(k, n, options));
  for (int n = 0; n <= n_max; ++n) table.add(Family::E, k, n, count_E(k, n, options));
  for (int n = 0; n + 1 <= std::min(options.max_n, kMaxEnumerationSize) && n <= n_max; ++n) {
    table.add(Family::PartialE, k, n, count_partial_E(k, n, options));
  }
  for (int n = 0; n <= n_max; ++n) table.add(Family::Bell, std::nullopt, n, bell(n));
  return table;
}

}  // namespace crossmap
