#include <doctest.h>

#include "crossmap/error.hpp"
#include "crossmap/serialize.hpp"

using namespace crossmap;
using nlohmann::json;

TEST_CASE("witness JSON shape") {
  const CrossingWitness w{Pattern::crossing, ArcMode::enhanced, {{1, 4}, {2, 5}, {4, 7}}};
  CHECK(json(w).dump() == R"({"arcs":[[1,4],[2,5],[4,7]],"kind":"crossing","mode":"enhanced"})");
  CHECK(json(w).get<CrossingWitness>() == w);

  const auto nesting = json::parse(R"({"kind":"nesting","mode":"classical","arcs":[[1,4],[2,3]]})").get<CrossingWitness>();
  CHECK(nesting.kind == Pattern::nesting);
  CHECK(nesting.arcs == std::vector<Arc>{{1, 4}, {2, 3}});

  CHECK_THROWS_AS(json::parse(R"({"kind":"nesting","mode":"classical","arcs":[[1,4,5]]})").get<CrossingWitness>(), Error);
  CHECK_THROWS_AS(json::parse(R"({"kind":"braid","mode":"classical","arcs":[]})").get<CrossingWitness>(), Error);
}

TEST_CASE("identity report roundtrip") {
  const auto r = verify_identity(3, 5);
  const json j = r;
  CHECK(j["lhs"] == 202);
  CHECK(j["holds"] == true);
  REQUIRE(j["terms"].size() == 6);
  CHECK(j["terms"][2] == json{{"i", 2}, {"binomial", 10}, {"E", 2}, {"term", 20}});
  CHECK(j.get<IdentityReport>() == r);
  CHECK(json::parse(j.dump()).get<IdentityReport>() == r);
}

TEST_CASE("eigen and distribution reports") {
  const json eigen = verify_eigensequence(3);
  CHECK(eigen["lhs"] == 15);
  CHECK(eigen["terms"] == json::array({1, 3, 6, 5}));
  CHECK(eigen["holds"] == true);

  const json dist = distribution_table(3, 2, Pattern::nesting);
  CHECK(dist["kind"] == "nesting");
  CHECK(dist["matches"] == true);
  CHECK(dist["partial_enhanced"] == dist["full_classical"]);
}

TEST_CASE("sequence table CSV and JSON roundtrip") {
  const auto t = sequence_table(2, 5);
  const auto csv = to_csv(t);
  CHECK(csv.rfind("family,k,n,value\nC,2,0,1\n", 0) == 0);
  CHECK(csv.find("\nBell,,5,52\n") != std::string::npos);
  CHECK(csv.find("\npartial-E,2,4,42\n") != std::string::npos);
  CHECK(sequence_table_from_csv(csv) == t);

  const json j = t;
  CHECK(j[0] == json{{"family", "C"}, {"k", 2}, {"n", 0}, {"value", 1}});
  CHECK(j.back()["k"].is_null());
  CHECK(j.get<SequenceTable>() == t);

  CHECK_THROWS_AS(sequence_table_from_csv("C,2,0,1\n"), Error);
  CHECK_THROWS_AS(sequence_table_from_csv("family,k,n,value\nC,2,0\n"), Error);
  CHECK_THROWS_AS(sequence_table_from_csv("family,k,n,value\nC,x,0,1\n"), Error);
  CHECK_THROWS_AS(sequence_table_from_csv("family,k,n,value\nC,2,0,1\nC,2,0,1\n"), Error);
  CHECK(sequence_table_from_csv("family,k,n,value\n").rows.empty());
}

TEST_CASE("sequence diff JSON") {
  oeis::SequenceDiff d{"A000108", Family::C, 2, 7, {{5, 42, "43"}}};
  const json j = d;
  CHECK(j["ok"] == false);
  CHECK(j["mismatches"][0] == json{{"n", 5}, {"computed", 42}, {"expected", "43"}});
  CHECK(j["family"] == "C");
}
