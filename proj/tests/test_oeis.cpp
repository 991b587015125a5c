#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include <unistd.h>

#include <httplib.h>

#include "crossmap/error.hpp"
#include "crossmap/oeis.hpp"

using namespace crossmap;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected crossmap::Error");
  return ErrorCode::ParseError;
}

std::vector<std::string> S(std::initializer_list<const char*> values) { return {values.begin(), values.end()}; }

// Serves a fixed set of b-files on localhost; everything else is a 404.
class FakeOeis {
 public:
  FakeOeis() {
    server_.Get(R"(/(A\d{6})/(b\d{6}\.txt))", [this](const httplib::Request& req, httplib::Response& res) {
      const auto it = files_.find(req.matches[1].str());
      if (it == files_.end()) {
        res.status = 404;
        return;
      }
      ++hits_;
      res.set_content(it->second, "text/plain");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeOeis() { stop(); }

  void serve(const std::string& id, std::string body) { files_[id] = std::move(body); }
  void stop() {
    if (thread_.joinable()) {
      server_.stop();
      thread_.join();
    }
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int hits() const { return hits_; }

 private:
  httplib::Server server_;
  std::map<std::string, std::string> files_;
  std::thread thread_;
  int port_ = 0;
  int hits_ = 0;
};

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("crossmap-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const char* kCatalanBfile =
    "# A000108 served locally\n"
    "0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n7 429\n8 1430\n9 4862\n10 16796\n"
    "11 58786\n12 208012\n13 742900\n14 2674440\n15 9694845\n16 35357670\n"
    "17 129644790\n18 477638700\n19 1767263190\n20 6564120420\n21 24466267020\n"
    "22 91482563640\n23 343059613650\n24 1289904147324\n25 4861946401452\n";

}  // namespace

TEST_CASE("bundled snapshots") {
  const auto& ids = oeis::bundled_ids();
  for (const char* id : {"A000108", "A001006", "A108304", "A108307", "A000110"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }

  const auto catalan = oeis::bundled("A000108");
  CHECK(catalan.offset == 0);
  CHECK(catalan.source == oeis::Source::bundled);
  CHECK(std::vector<std::string>(catalan.values.begin(), catalan.values.begin() + 7) ==
        S({"1", "1", "2", "5", "14", "42", "132"}));
  CHECK(oeis::bundled("A108304").value_at(6) == 202u);
  CHECK(oeis::bundled("A108307").value_at(5) == 51u);
  CHECK(oeis::bundled("A001006").value_at(6) == 51u);
  CHECK(oeis::bundled("A000110").value_at(10) == 115975u);
  CHECK(oeis::bundled("A000108").value_at(-1) == std::nullopt);
  CHECK(oeis::bundled("A000108").value_at(1000) == std::nullopt);

  CHECK(code_of([] { oeis::bundled("A999999"); }) == ErrorCode::UnknownId);
  CHECK(code_of([] { oeis::bundled("X1"); }) == ErrorCode::UnknownId);
}

TEST_CASE("bundled snapshots agree with the library for every available n") {
  for (const auto& id : oeis::bundled_ids()) {
    const auto ref = oeis::bundled(id);
    const auto binding = oeis::binding_for(id);
    REQUIRE(binding.has_value());
    const int k = binding->k.value_or(2);
    const auto table = sequence_table(k, 9);
    const auto diff = oeis::compare(table, ref, binding->family, binding->k);
    INFO(id);
    CHECK(diff.ok());
    CHECK(diff.compared == 10);
  }
}

TEST_CASE("ids") {
  CHECK(oeis::is_valid_id("A000108"));
  CHECK_FALSE(oeis::is_valid_id("A00010"));
  CHECK_FALSE(oeis::is_valid_id("a000108"));
  CHECK_FALSE(oeis::is_valid_id("A0001080"));
  CHECK_FALSE(oeis::binding_for("A000045").has_value());
  CHECK(oeis::binding_for("A108307")->family == Family::E);
  CHECK(oeis::binding_for("A108307")->k == 3);
}

TEST_CASE("b-file parsing") {
  const auto seq = oeis::parse_bfile("A000001", "# header\n\n3 7\n4 8\n5 123456789012345678901234567890\n", 0,
                                     oeis::Source::fetched);
  CHECK(seq.offset == 3);
  CHECK(seq.values == S({"7", "8", "123456789012345678901234567890"}));
  CHECK(seq.last_index() == 5);
  CHECK(seq.value_at(4) == 8u);
  CHECK(seq.value_at(5) == std::nullopt);  // too wide for 64 bits

  CHECK(oeis::parse_bfile("A000001", "0 1\r\n1 -2\r\n", 0, oeis::Source::fetched).values == S({"1", "-2"}));
  CHECK(oeis::parse_bfile("A000001", kCatalanBfile, 4, oeis::Source::fetched).values == S({"1", "1", "2", "5"}));

  auto parse = [](const char* text) { oeis::parse_bfile("A000001", text, 0, oeis::Source::fetched); };
  CHECK(code_of([&] { parse("abc def\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse("0 1 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse("0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse("0 1\n2 3\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse("0 1.5\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse("# nothing\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse("<html>not found</html>"); }) == ErrorCode::ParseError);
}

TEST_CASE("compare") {
  const auto table = sequence_table(2, 6);
  const auto ref = oeis::bundled("A000108");
  const auto clean = oeis::compare(table, ref, Family::C, 2);
  CHECK(clean.ok());
  CHECK(clean.compared == 7);

  auto corrupted = ref;
  corrupted.values[5] = "43";
  const auto bad = oeis::compare(table, corrupted, Family::C, 2);
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0] == oeis::Mismatch{5, 42, "43"});

  auto shifted = ref;
  shifted.offset = 100;
  CHECK(code_of([&] { oeis::compare(table, shifted, Family::C, 2); }) == ErrorCode::NoOverlap);
  CHECK(code_of([&] { oeis::compare(table, ref, Family::C, 3); }) == ErrorCode::NoOverlap);
}

TEST_CASE("fetch from a local server, then fall back to the cache") {
  TempDir cache;
  FakeOeis server;
  server.serve("A000108", kCatalanBfile);
  const oeis::FetchOptions options{server.url(), cache.path, 2};

  const auto fetched = oeis::fetch_bfile("A000108", 10, options);
  CHECK(fetched.source == oeis::Source::fetched);
  CHECK(fetched.values.size() == 10);
  CHECK(server.hits() == 1);
  REQUIRE(fs::exists(cache.path / "b000108.txt"));
  std::ifstream in(cache.path / "b000108.txt", std::ios::binary);
  CHECK(std::string(std::istreambuf_iterator<char>(in), {}) == kCatalanBfile);

  // Bundled values are a prefix of the full b-file.
  const auto all = oeis::fetch_bfile("A000108", 1000, options);
  const auto snapshot = oeis::bundled("A000108");
  REQUIRE(all.values.size() >= snapshot.values.size());
  CHECK(std::equal(snapshot.values.begin(), snapshot.values.end(), all.values.begin()));

  CHECK(code_of([&] { oeis::fetch_bfile("A999999", 10, options); }) == ErrorCode::UnknownId);

  server.serve("A000110", "<html>oops</html>");
  CHECK(code_of([&] { oeis::fetch_bfile("A000110", 10, options); }) == ErrorCode::ParseError);
  CHECK_FALSE(fs::exists(cache.path / "b000110.txt"));

  server.stop();
  const auto offline = oeis::fetch_bfile("A000108", 5, options);
  CHECK(offline.source == oeis::Source::cached);
  CHECK(offline.values == S({"1", "1", "2", "5", "14"}));
  CHECK(code_of([&] { oeis::fetch_bfile("A001006", 5, options); }) == ErrorCode::NetworkError);
}

TEST_CASE("fetch argument errors") {
  CHECK(code_of([] { oeis::fetch_bfile("bogus", 5); }) == ErrorCode::UnknownId);
  CHECK(code_of([] { oeis::fetch_bfile("A000108", 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("default cache dir honours CROSSMAP_CACHE_DIR") {
  const char* previous = std::getenv("CROSSMAP_CACHE_DIR");
  const std::string saved = previous ? previous : "";
  const char* previous_xdg = std::getenv("XDG_CACHE_HOME");
  const std::string saved_xdg = previous_xdg ? previous_xdg : "";
  ::setenv("CROSSMAP_CACHE_DIR", "/tmp/crossmap-explicit", 1);
  CHECK(oeis::default_cache_dir() == fs::path("/tmp/crossmap-explicit"));
  ::unsetenv("CROSSMAP_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(oeis::default_cache_dir() == fs::path("/tmp/xdg/crossmap"));
  ::unsetenv("XDG_CACHE_HOME");
  if (previous) ::setenv("CROSSMAP_CACHE_DIR", saved.c_str(), 1);
  if (previous_xdg) ::setenv("XDG_CACHE_HOME", saved_xdg.c_str(), 1);
}
