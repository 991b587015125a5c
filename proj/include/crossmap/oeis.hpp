#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossmap/counting.hpp"

namespace crossmap::oeis {

enum class Source { bundled, fetched, cached };

std::string_view to_string(Source source);

/// An OEIS sequence. Values are kept as decimal strings because b-files run
/// far past 64 bits; value_at() narrows when it can.
struct RefSequence {
  std::string id;
  int offset = 0;
  std::vector<std::string> values;
  Source source = Source::bundled;

  int last_index() const noexcept { return offset + static_cast<int>(values.size()) - 1; }
  std::optional<std::uint64_t> value_at(int index) const;
};

/// True for "A" followed by six digits.
bool is_valid_id(std::string_view id);

/// Parses b-file text ("index value" lines, '#' comments, blank lines
/// ignored) keeping at most `limit` terms (limit <= 0 keeps all). Indices
/// must be consecutive. Throws ParseError.
RefSequence parse_bfile(std::string_view id, std::string_view text, int limit, Source source);

/// Ids shipped with the library.
const std::vector<std::string>& bundled_ids();

/// Snapshot shipped with the library. Throws UnknownId.
RefSequence bundled(std::string_view id);

struct FetchOptions {
  std::string base_url = "https://oeis.org";
  std::filesystem::path cache_dir;  // empty: default_cache_dir()
  int timeout_seconds = 10;
};

/// $CROSSMAP_CACHE_DIR, else $XDG_CACHE_HOME/crossmap, else
/// $HOME/.cache/crossmap, else ./.crossmap-cache.
std::filesystem::path default_cache_dir();

/// Downloads <base_url>/A123456/b123456.txt, caches the verbatim bytes and
/// parses up to `limit` terms. If the request fails the cached copy is used.
/// Throws NetworkError (no cache), UnknownId (HTTP 404), ParseError.
RefSequence fetch_bfile(std::string_view id, int limit, const FetchOptions& options = {});

/// Which computed family an id tracks.
struct Binding {
  Family family = Family::C;
  std::optional<int> k;
};

std::optional<Binding> binding_for(std::string_view id);

struct Mismatch {
  int n = 0;
  std::uint64_t computed = 0;
  std::string expected;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct SequenceDiff {
  std::string id;
  Family family = Family::C;
  std::optional<int> k;
  int compared = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Aligns table rows for (family, k) with the reference on n = OEIS index.
/// Throws NoOverlap when no index is shared.
SequenceDiff compare(const SequenceTable& computed, const RefSequence& ref, Family family, std::optional<int> k);

}  // namespace crossmap::oeis
