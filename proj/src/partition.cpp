#include "crossmap/partition.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "crossmap/error.hpp"

namespace crossmap {

namespace {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    fail(ErrorCode::OutOfRange,
         "ground set size " + std::to_string(n) + " outside [0, " + std::to_string(kMaxGroundSize) + "]");
  }
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorCode::ParseError, "bad integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

PartialPartition PartialPartition::from_labels(std::vector<Label> labels) {
  check_ground_size(static_cast<int>(labels.size()));
  int max_label = 0;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const int v = labels[j];
    if (v > max_label + 1) {
      fail(ErrorCode::InvalidLabels,
           "label " + std::to_string(v) + " at element " + std::to_string(j + 1) + " breaks restricted growth");
    }
    max_label = std::max(max_label, v);
  }
  PartialPartition p;
  p.labels_ = std::move(labels);
  p.blocks_ = max_label;
  return p;
}

PartialPartition PartialPartition::empty(int n) {
  check_ground_size(n);
  return from_labels(std::vector<Label>(static_cast<std::size_t>(n), 0));
}

PartialPartition PartialPartition::singletons(int n) {
  check_ground_size(n);
  std::vector<Label> labels(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) labels[static_cast<std::size_t>(j)] = static_cast<Label>(j + 1);
  return from_labels(std::move(labels));
}

int PartialPartition::present_count() const noexcept {
  return static_cast<int>(std::count_if(labels_.begin(), labels_.end(), [](Label v) { return v != 0; }));
}

bool PartialPartition::is_full() const noexcept {
  return std::none_of(labels_.begin(), labels_.end(), [](Label v) { return v == 0; });
}

PartialPartition from_blocks(int n, const std::vector<Block>& blocks) {
  check_ground_size(n);
  // Provisional ids are input block indices + 1; relabel by first occurrence.
  std::vector<int> provisional(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) fail(ErrorCode::EmptyBlock, "block " + std::to_string(b + 1) + " is empty");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) {
        fail(ErrorCode::OutOfRange, "element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
      }
      auto& slot = provisional[static_cast<std::size_t>(e - 1)];
      if (slot != 0) fail(ErrorCode::DuplicateElement, "element " + std::to_string(e) + " appears twice");
      slot = static_cast<int>(b) + 1;
    }
  }
  std::vector<int> relabel(blocks.size() + 1, 0);
  std::vector<Label> labels(static_cast<std::size_t>(n), 0);
  Label next = 1;
  for (std::size_t j = 0; j < provisional.size(); ++j) {
    const int id = provisional[j];
    if (id == 0) continue;
    if (relabel[static_cast<std::size_t>(id)] == 0) relabel[static_cast<std::size_t>(id)] = next++;
    labels[j] = static_cast<Label>(relabel[static_cast<std::size_t>(id)]);
  }
  return PartialPartition::from_labels(std::move(labels));
}

std::vector<Block> blocks_of(const PartialPartition& p) {
  std::vector<Block> blocks(static_cast<std::size_t>(p.block_count()));
  const auto labels = p.labels();
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] != 0) blocks[labels[j] - 1u].push_back(static_cast<int>(j) + 1);
  }
  // Restricted growth already orders blocks by minimum element.
  return blocks;
}

std::string to_text(const PartialPartition& p) {
  std::string out = std::to_string(p.n()) + ":";
  bool first_block = true;
  for (const auto& block : blocks_of(p)) {
    if (!first_block) out += '/';
    first_block = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

PartialPartition parse_partition(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    fail(ErrorCode::ParseError, "partition text '" + std::string(text) + "' lacks 'n:' prefix");
  }
  const int n = parse_int(text.substr(0, colon), text);
  const auto body = text.substr(colon + 1);
  std::vector<Block> blocks;
  if (!body.empty()) {
    for (auto block_text : split(body, '/')) {
      if (block_text.empty()) fail(ErrorCode::EmptyBlock, "empty block in '" + std::string(text) + "'");
      Block block;
      for (auto element : split(block_text, ',')) block.push_back(parse_int(element, text));
      blocks.push_back(std::move(block));
    }
  }
  return from_blocks(n, blocks);
}

// ---------------------------------------------------------------------------
// Enumeration

EnumerationRange whole_range(int n, bool partial) {
  if (n < 0 || n > kMaxEnumerationSize) {
    fail(ErrorCode::OutOfRange, "enumeration size " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxEnumerationSize) + "]");
  }
  return EnumerationRange{n, partial, 0, {{}}};
}

std::vector<EnumerationRange> split_range(int n, int parts, bool partial) {
  if (parts < 1) fail(ErrorCode::OutOfRange, "parts must be at least 1");
  auto whole = whole_range(n, partial);
  if (parts == 1) return {whole};

  // Shortest prefix length giving a few prefixes per part, for balance.
  const std::size_t wanted = static_cast<std::size_t>(parts) * 4;
  std::vector<std::vector<Label>> prefixes;
  int depth = 0;
  for (; depth <= n; ++depth) {
    prefixes.clear();
    for_each_partition(whole_range(depth, partial), [&](const PartialPartition& p) {
      prefixes.emplace_back(p.labels().begin(), p.labels().end());
    });
    if (prefixes.size() >= wanted) break;
  }
  depth = std::min(depth, n);

  std::vector<EnumerationRange> ranges;
  ranges.reserve(static_cast<std::size_t>(parts));
  const std::size_t total = prefixes.size();
  for (int i = 0; i < parts; ++i) {
    const std::size_t lo = total * static_cast<std::size_t>(i) / static_cast<std::size_t>(parts);
    const std::size_t hi = total * static_cast<std::size_t>(i + 1) / static_cast<std::size_t>(parts);
    EnumerationRange range{n, partial, depth, {}};
    range.prefixes.assign(prefixes.begin() + static_cast<std::ptrdiff_t>(lo),
                          prefixes.begin() + static_cast<std::ptrdiff_t>(hi));
    ranges.push_back(std::move(range));
  }
  return ranges;
}

PartitionStream::PartitionStream(EnumerationRange range)
    : range_(std::move(range)), minimum_(range_.partial ? 0 : 1) {
  current_.labels_.assign(static_cast<std::size_t>(range_.n), minimum_);
  prefix_max_.assign(static_cast<std::size_t>(range_.n) + 1, 0);
}

void PartitionStream::refresh_from(int position) {
  auto& labels = current_.labels_;
  for (int j = position; j < range_.n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    prefix_max_[uj + 1] = std::max(prefix_max_[uj], static_cast<int>(labels[uj]));
  }
  current_.blocks_ = prefix_max_.back();
}

void PartitionStream::load_prefix() {
  const auto& prefix = range_.prefixes[prefix_index_];
  auto& labels = current_.labels_;
  std::copy(prefix.begin(), prefix.end(), labels.begin());
  std::fill(labels.begin() + static_cast<std::ptrdiff_t>(prefix.size()), labels.end(), minimum_);
  refresh_from(0);
}

bool PartitionStream::next() {
  if (!started_) {
    started_ = true;
    if (range_.prefixes.empty()) return false;
    load_prefix();
    return true;
  }
  if (prefix_index_ >= range_.prefixes.size()) return false;

  auto& labels = current_.labels_;
  for (int j = range_.n - 1; j >= range_.prefix_length; --j) {
    const auto uj = static_cast<std::size_t>(j);
    if (labels[uj] < prefix_max_[uj] + 1) {
      ++labels[uj];
      std::fill(labels.begin() + j + 1, labels.end(), minimum_);
      refresh_from(j);
      return true;
    }
  }
  if (++prefix_index_ >= range_.prefixes.size()) return false;
  load_prefix();
  return true;
}

PartitionStream enumerate_full(int n) { return PartitionStream(whole_range(n, false)); }
PartitionStream enumerate_partial(int n) { return PartitionStream(whole_range(n, true)); }

}  // namespace crossmap
