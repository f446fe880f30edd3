#include <doctest.h>

#include <algorithm>
#include <set>

#include "mvkit/rootsys.hpp"

using namespace mvkit;

TEST_CASE("bilinear form") {
  auto a2 = datum_from_type("A2");
  auto a1 = datum_from_type("~A1");
  CHECK(bilinear_form(*a2, {1, 0}, {0, 1}) == -1);
  CHECK(bilinear_form(*a1, {1, 1}, {1, 1}) == 0);
  CHECK(bilinear_form(*a1, {1, 0}, {0, 1}) == -2);
  CHECK(a1->a(0, 1) == -2);
}

TEST_CASE("kinds from the signature") {
  CHECK(datum_from_type("E8")->kind == Kind::finite);
  CHECK(datum_from_type("~E8")->kind == Kind::affine);
  CHECK(datum_from_type("A1xA1")->kind == Kind::finite);
  // triple edge: indefinite
  auto h = make_datum({"0", "1"}, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(h->kind == Kind::other);
  CHECK_THROWS(make_datum({"0"}, {{0, 0}}));
  CHECK_THROWS(make_datum({"0", "1"}, {{0, 1}}, true, Kind::affine));
}

TEST_CASE("classify_root") {
  auto a1 = datum_from_type("~A1");
  auto a2 = datum_from_type("A2");
  CHECK(classify_root(*a1, {2, 1}) == RootClass::real);
  CHECK(classify_root(*a1, {3, 3}) == RootClass::imaginary);
  CHECK(classify_root(*a2, {2, 0}) == RootClass::not_a_root);
  CHECK(classify_root(*a2, {1, 1}) == RootClass::real);
  CHECK(classify_root(*a1, {3, 1}) == RootClass::not_a_root);
}

TEST_CASE("affine data") {
  CHECK(default_affine_data(datum_from_type("~A1")).delta == RootVector{1, 1});
  CHECK(default_affine_data(datum_from_type("~A2")).delta == RootVector{1, 1, 1});
  auto d4 = datum_from_type("~D4");
  auto a = default_affine_data(d4);
  int center = -1;
  for (int i = 0; i < d4->rank(); ++i) {
    int deg = 0;
    for (auto [u, v] : d4->edges) deg += (u == i) + (v == i);
    if (deg == 4) center = i;
  }
  REQUIRE(center >= 0);
  for (int i = 0; i < d4->rank(); ++i) CHECK(a.delta[i] == (i == center ? 2 : 1));
  CHECK(a.r == 4);
}

TEST_CASE("spherical chamber coweights") {
  auto g1 = spherical_coweights(default_affine_data(datum_from_type("~A1")));
  REQUIRE(g1.size() == 2);
  CHECK(g1[0] == negate(g1[1]));
  for (std::string t : {"~A2", "~A3", "~D4"}) {
    auto a = default_affine_data(datum_from_type(t));
    for (auto& g : spherical_coweights(a)) CHECK(pair(g, a.delta) == 0);
  }
  CHECK(spherical_coweights(default_affine_data(datum_from_type("~A2"))).size() == 6);
}

TEST_CASE("orientation coweights") {
  auto d = datum_from_type("~A1");
  auto a = default_affine_data(d);
  auto fwd = orientation_coweight(a, {{0, 1}, {0, 1}});
  auto bwd = orientation_coweight(a, {{1, 0}, {1, 0}});
  CHECK(fwd == coweight_from_ints({1, -1}));
  CHECK(bwd == negate(fwd));
  auto d3 = datum_from_type("~A3");
  auto a3 = default_affine_data(d3);
  std::set<Coweight> seen;
  auto orients = acyclic_orientations(*d3);
  for (auto& o : orients) seen.insert(orientation_coweight(a3, o));
  CHECK(seen.size() == orients.size());
  CHECK_THROWS(orientation_coweight(a, {{0, 1}, {1, 0}}));
}
