#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mvkit/io.hpp"
#include "test_util.hpp"

using namespace mvkit;

TEST_CASE("bundled fixtures") {
  auto a2 = load_fixture(fixture_path("a2.json"));
  CHECK(a2.kind == "datum");
  CHECK(a2.datum->rank() == 2);
  auto fig2 = load_fixture(fixture_path("fig2.json"));
  REQUIRE(fig2.polytope);
  CHECK(fig2.polytope->weight == RootVector{9, 9, 8});
}

TEST_CASE("fixtures round-trip through JSON") {
  for (const auto& e : std::filesystem::directory_iterator(fixture_dir())) {
    if (e.path().extension() != ".json") continue;
    CAPTURE(e.path().string());
    auto once = fixture_to_json(load_fixture(e.path().string()));
    auto twice = fixture_to_json(fixture_from_json(once));
    CHECK(once.dump() == twice.dump());
  }
}

TEST_CASE("schema errors carry JSON pointers") {
  auto v = schema_violations(json::parse(R"({"kind": "module", "datum": "~A1"})"));
  REQUIRE(!v.empty());
  CHECK(v[0].rfind("/dims", 0) == 0);
  CHECK_THROWS_AS(fixture_from_json(json::parse(R"({"kind": "polytope"})")), Error);
  try {
    fixture_from_json(json::parse(R"({"kind": "lusztig", "datum": "A2", "order": {"word": ["1", "7"]}})"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/order/word/1") != std::string::npos);
  }
  auto path = std::filesystem::temp_directory_path() / "mvkit_malformed.json";
  std::ofstream(path) << "{\"kind\": \"datum\", ";
  CHECK_THROWS_AS(load_fixture(path.string()), Error);
  std::filesystem::remove(path);
}

TEST_CASE("datum graph input") {
  auto d = datum_from_json(json::parse(R"({"nodes": [0, 1], "edges": [[0, 1], [0, 1]], "kind_hint": "affine"})"));
  CHECK(d->kind == Kind::affine);
  CHECK_THROWS(datum_from_json(json::parse(R"({"nodes": [0, 1], "edges": [[0, 1]], "kind_hint": "affine"})")));
}

TEST_CASE("Lusztig data in dense and sparse form") {
  auto ctx = context("A2");
  auto dense = lusztig_from_json(*ctx, json::parse(R"({"order": {"word": ["1", "2", "1"]}, "real": [1, 0, 1]})"));
  auto sparse =
      lusztig_from_json(*ctx, json::parse(R"({"order": {"word": ["1", "2", "1"]}, "real": [[[0, 1], 1], [[1, 0], 1]]})"));
  CHECK(dense.real == sparse.real);
  auto bare = slice_from_json(*ctx, json::parse("[[1, 0], [1, 1], [0, 1]]"), "/order");
  CHECK(bare.roots == dense.order.roots);
}
