#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crossmap {

using Label = std::uint8_t;
using Block = std::vector<int>;

// Largest ambient ground set a partition value may carry. One above the
// enumeration cap so that images of partitions over [20] are representable.
inline constexpr int kMaxGroundSize = 21;
inline constexpr int kMaxEnumerationSize = 20;

/// A set partition of a subset of [n], stored as a restricted-growth string
/// extended with 0 for elements absent from the ground subset.
///
/// labels()[j] is the block id of element j+1 (0 = absent). Positive labels
/// first appear in the order 1, 2, 3, ... so every partition has exactly one
/// representation. The empty partition of any n is a valid value.
class PartialPartition {
 public:
  PartialPartition() = default;

  /// Validates restricted-growth order; throws Error(InvalidLabels/OutOfRange).
  static PartialPartition from_labels(std::vector<Label> labels);
  static PartialPartition empty(int n);
  static PartialPartition singletons(int n);

  int n() const noexcept { return static_cast<int>(labels_.size()); }
  std::span<const Label> labels() const noexcept { return labels_; }
  int block_count() const noexcept { return blocks_; }

  /// 1-based element access; 0 means absent.
  Label label_of(int element) const { return labels_.at(static_cast<std::size_t>(element - 1)); }
  bool contains(int element) const { return label_of(element) != 0; }

  int present_count() const noexcept;
  bool is_full() const noexcept;

  friend bool operator==(const PartialPartition&, const PartialPartition&) = default;
  friend auto operator<=>(const PartialPartition& a, const PartialPartition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  friend class PartitionStream;

  std::vector<Label> labels_;
  int blocks_ = 0;
};

/// Builds the canonical partition whose blocks equal `blocks` as sets.
/// Throws DuplicateElement, OutOfRange or EmptyBlock.
PartialPartition from_blocks(int n, const std::vector<Block>& blocks);

/// Blocks sorted by minimum element, each strictly increasing.
std::vector<Block> blocks_of(const PartialPartition& p);

// Text grammar: "9:1,4,7,9/2,5/3/6"; the empty partition over [n] is "n:".
std::string to_text(const PartialPartition& p);
PartialPartition parse_partition(std::string_view text);

// ---------------------------------------------------------------------------
// Enumeration

/// A slice of the lexicographic enumeration: all label arrays of length n
/// that start with one of `prefixes` (each of length prefix_length).
struct EnumerationRange {
  int n = 0;
  bool partial = false;
  int prefix_length = 0;
  std::vector<std::vector<Label>> prefixes;

  bool empty() const noexcept { return prefixes.empty(); }
};

/// The whole stream of partitions of [n] (or of subsets of [n] when partial).
EnumerationRange whole_range(int n, bool partial);

/// Splits the stream into `parts` disjoint ranges whose concatenation, in
/// order, is the unsplit stream. Some ranges may be empty when parts exceeds
/// the number of available prefixes.
std::vector<EnumerationRange> split_range(int n, int parts, bool partial = false);

/// Single-consumer stream over an EnumerationRange in lexicographic
/// label order (0 sorts before 1).
class PartitionStream {
 public:
  explicit PartitionStream(EnumerationRange range);

  /// Advances to the next partition; false once the range is exhausted.
  bool next();
  const PartialPartition& current() const noexcept { return current_; }

  class iterator {
   public:
    using value_type = PartialPartition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(PartitionStream* stream) : stream_(stream) { advance(); }

    const PartialPartition& operator*() const { return stream_->current(); }
    const PartialPartition* operator->() const { return &stream_->current(); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

   private:
    void advance() {
      if (stream_ && !stream_->next()) stream_ = nullptr;
    }
    PartitionStream* stream_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return {}; }

 private:
  void load_prefix();
  void refresh_from(int position);

  EnumerationRange range_;
  std::size_t prefix_index_ = 0;
  bool started_ = false;
  Label minimum_ = 1;
  std::vector<int> prefix_max_;
  PartialPartition current_;
};

PartitionStream enumerate_full(int n);
PartitionStream enumerate_partial(int n);

template <typename Visitor>
void for_each_partition(const EnumerationRange& range, Visitor&& visit) {
  PartitionStream stream(range);
  while (stream.next()) visit(stream.current());
}

}  // namespace crossmap

template <>
struct std::hash<crossmap::PartialPartition> {
  std::size_t operator()(const crossmap::PartialPartition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto label : p.labels()) h = (h ^ label) * 1099511628211ull;
    return h ^ static_cast<std::size_t>(p.n());
  }
};
