#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// enumeration, arc extraction or detectors, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

// Bell numbers as row sums of Stirling numbers of the second kind.
inline std::uint64_t bell(int n) {
  std::vector<std::vector<unsigned __int128>> s(static_cast<std::size_t>(n) + 1,
                                                std::vector<unsigned __int128>(static_cast<std::size_t>(n) + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
    for (std::size_t k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  }
  unsigned __int128 total = 0;
  for (auto v : s[static_cast<std::size_t>(n)]) total += v;
  return static_cast<std::uint64_t>(total);
}

// Pascal-free binomial via the multiplicative formula in 128 bits.
inline std::uint64_t binomial(int n, int k) {
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

// Every set partition of `elements`, by inserting each element into an
// existing block or a new one. Blocks come out sorted by minimum.
inline std::vector<Blocks> set_partitions(const std::vector<int>& elements) {
  std::vector<Blocks> out{{}};
  for (int e : elements) {
    std::vector<Blocks> next;
    for (const auto& p : out) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto q = p;
        q[b].push_back(e);
        next.push_back(std::move(q));
      }
      auto q = p;
      q.push_back({e});
      next.push_back(std::move(q));
    }
    out = std::move(next);
  }
  for (auto& p : out) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end());
  }
  return out;
}

inline std::vector<Blocks> full_partitions(int n) {
  std::vector<int> elements;
  for (int i = 1; i <= n; ++i) elements.push_back(i);
  return set_partitions(elements);
}

// Partitions of every subset of [n], subsets taken by bitmask.
inline std::vector<Blocks> partial_partitions(int n) {
  std::vector<Blocks> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> elements;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) elements.push_back(i + 1);
    }
    for (auto& p : set_partitions(elements)) out.push_back(std::move(p));
  }
  return out;
}

struct Pair {
  int a;
  int b;
};

// Consecutive in-block pairs; singletons give (u, u) only when enhanced.
inline std::vector<Pair> pairs_of(const Blocks& blocks, bool enhanced) {
  std::vector<Pair> out;
  for (const auto& b : blocks) {
    if (b.size() == 1 && enhanced) out.push_back({b[0], b[0]});
    for (std::size_t i = 0; i + 1 < b.size(); ++i) out.push_back({b[i], b[i + 1]});
  }
  std::sort(out.begin(), out.end(), [](Pair x, Pair y) { return x.a < y.a; });
  return out;
}

// Number of k-subsets of pairs meeting the chain definition literally:
// crossing a1<..<ak <=/< b1<..<bk, nesting a1<..<ak <=/< bk<..<b1.
inline std::uint64_t count_patterns(const std::vector<Pair>& pairs, int k, bool nesting, bool enhanced) {
  const int m = static_cast<int>(pairs.size());
  if (k > m) return 0;
  std::uint64_t count = 0;
  std::vector<int> pick(static_cast<std::size_t>(k));
  auto check = [&] {
    for (int i = 0; i + 1 < k; ++i) {
      const auto& x = pairs[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
      const auto& y = pairs[static_cast<std::size_t>(pick[static_cast<std::size_t>(i + 1)])];
      if (!(x.a < y.a)) return false;
      if (nesting ? !(x.b > y.b) : !(x.b < y.b)) return false;
    }
    const auto& last = pairs[static_cast<std::size_t>(pick.back())];
    const int bound = nesting ? last.b : pairs[static_cast<std::size_t>(pick.front())].b;
    return enhanced ? last.a <= bound : last.a < bound;
  };
  // Odometer over increasing index tuples.
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (check()) ++count;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

inline std::uint64_t count_avoiding(int n, int k, bool enhanced) {
  std::uint64_t total = 0;
  for (const auto& p : full_partitions(n)) {
    if (count_patterns(pairs_of(p, enhanced), k, false, enhanced) == 0) ++total;
  }
  return total;
}

}  // namespace oracle
