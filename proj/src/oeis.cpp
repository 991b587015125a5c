#include "crossmap/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include <httplib.h>

#include "crossmap/error.hpp"
#include "oeis_bundled.hpp"

namespace crossmap::oeis {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

void require_id(std::string_view id) {
  if (!is_valid_id(id)) fail(ErrorCode::UnknownId, "'" + std::string(id) + "' is not an OEIS id");
}

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Write-temp-then-rename so readers never observe a partial file.
void write_atomically(const std::filesystem::path& path, std::string_view bytes) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto temp = path;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      std::filesystem::remove(temp, ec);
      return;
    }
  }
  std::filesystem::rename(temp, path, ec);
  if (ec) std::filesystem::remove(temp, ec);
}

}  // namespace

std::string_view to_string(Source source) {
  switch (source) {
    case Source::bundled: return "bundled";
    case Source::fetched: return "fetched";
    case Source::cached: return "cached";
  }
  return "?";
}

bool is_valid_id(std::string_view id) { return id.size() == 7 && id[0] == 'A' && all_digits(id.substr(1)); }

std::optional<std::uint64_t> RefSequence::value_at(int index) const {
  if (index < offset || index > last_index()) return std::nullopt;
  const auto& text = values[static_cast<std::size_t>(index - offset)];
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

RefSequence parse_bfile(std::string_view id, std::string_view text, int limit, Source source) {
  require_id(id);
  RefSequence seq{std::string(id), 0, {}, source};
  std::optional<long> previous;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size() && (limit <= 0 || seq.values.size() < static_cast<std::size_t>(limit))) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto parts = tokens(line);
    auto bad = [&](const std::string& why) {
      fail(ErrorCode::ParseError, std::string(id) + " b-file line " + std::to_string(line_no) + " '" +
                                      std::string(line) + "': " + why);
    };
    if (parts.size() != 2) bad("expected '<index> <value>'");
    long index = 0;
    const auto idx = parts[0];
    const bool neg_index = idx.front() == '-';
    if (!all_digits(neg_index ? idx.substr(1) : idx)) bad("index is not an integer");
    std::from_chars(idx.data() + (neg_index ? 1 : 0), idx.data() + idx.size(), index);
    if (neg_index) index = -index;
    const auto value = parts[1];
    if (!all_digits(value.front() == '-' ? value.substr(1) : value)) bad("value is not an integer");
    if (previous && index != *previous + 1) bad("indices are not consecutive");
    if (!previous) seq.offset = static_cast<int>(index);
    previous = index;
    seq.values.emplace_back(value);
  }
  if (seq.values.empty()) fail(ErrorCode::ParseError, std::string(id) + " b-file holds no terms");
  return seq;
}

const std::vector<std::string>& bundled_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : detail::bundled_bfiles()) out.emplace_back(entry.id);
    return out;
  }();
  return ids;
}

RefSequence bundled(std::string_view id) {
  for (const auto& entry : detail::bundled_bfiles()) {
    if (entry.id == id) return parse_bfile(id, entry.text, 0, Source::bundled);
  }
  fail(ErrorCode::UnknownId, "no bundled snapshot for '" + std::string(id) + "'");
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("CROSSMAP_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "crossmap";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "crossmap";
  }
  return ".crossmap-cache";
}

RefSequence fetch_bfile(std::string_view id, int limit, const FetchOptions& options) {
  require_id(id);
  if (limit < 1) fail(ErrorCode::OutOfRange, "limit must be at least 1");
  const auto cache_dir = options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
  const auto cache_path = cache_dir / bfile_name(id);
  const auto path = "/" + std::string(id) + "/" + bfile_name(id);

  std::string failure;
  try {
    httplib::Client client(options.base_url);
    client.set_connection_timeout(options.timeout_seconds, 0);
    client.set_read_timeout(options.timeout_seconds, 0);
    client.set_follow_location(true);
    if (auto response = client.Get(path)) {
      if (response->status == 200) {
        auto seq = parse_bfile(id, response->body, limit, Source::fetched);
        write_atomically(cache_path, response->body);
        return seq;
      }
      if (response->status == 404) fail(ErrorCode::UnknownId, "OEIS has no b-file for " + std::string(id));
      failure = "HTTP status " + std::to_string(response->status);
    } else {
      failure = httplib::to_string(response.error());
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    failure = e.what();
  }

  if (auto cached = read_file(cache_path)) return parse_bfile(id, *cached, limit, Source::cached);
  fail(ErrorCode::NetworkError, "fetching " + options.base_url + path + " failed (" + failure +
                                    ") and no cache at " + cache_path.string());
}

std::optional<Binding> binding_for(std::string_view id) {
  if (id == "A000108") return Binding{Family::C, 2};
  if (id == "A001006") return Binding{Family::E, 2};
  if (id == "A108304") return Binding{Family::C, 3};
  if (id == "A108307") return Binding{Family::E, 3};
  if (id == "A000110") return Binding{Family::Bell, std::nullopt};
  return std::nullopt;
}

SequenceDiff compare(const SequenceTable& computed, const RefSequence& ref, Family family, std::optional<int> k) {
  SequenceDiff diff{ref.id, family, k, 0, {}};
  for (const auto& row : computed.rows) {
    if (row.family != family || row.k != k) continue;
    if (row.n < ref.offset || row.n > ref.last_index()) continue;
    ++diff.compared;
    const auto& expected = ref.values[static_cast<std::size_t>(row.n - ref.offset)];
    if (expected != std::to_string(row.value)) diff.mismatches.push_back({row.n, row.value, expected});
  }
  if (diff.compared == 0) {
    fail(ErrorCode::NoOverlap, "no n shared between the computed " + std::string(to_string(family)) +
                                   " rows and " + ref.id);
  }
  std::sort(diff.mismatches.begin(), diff.mismatches.end(), [](const Mismatch& a, const Mismatch& b) { return a.n < b.n; });
  return diff;
}

}  // namespace crossmap::oeis
