#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "mvkit/export.hpp"
#include "mvkit/io.hpp"
#include "test_util.hpp"

using namespace mvkit;

namespace {

GGMSPolytope a2_triangle() {
  auto ctx = context("A2");
  LusztigDatum d = zero_datum(*ctx, order_from_word(*ctx, {0, 1, 0}));
  d.real = {1, 0, 1};
  return polytope_from_datum(ctx, d);
}

GGMSPolytope fixture_polytope(const std::string& name) { return *load_fixture(fixture_path(name)).polytope; }

}  // namespace

TEST_CASE("polytopes from Lusztig data") {
  auto ctx = context("A2");
  auto zero = polytope_from_datum(ctx, zero_datum(*ctx, order_from_word(*ctx, {0, 1, 0})));
  CHECK(zero.vertices == std::vector<RootVector>{{0, 0}});
  // the path from 0 adds the largest root of the order first
  CHECK(a2_triangle().vertices == std::vector<RootVector>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("the Fig. 2 datum reproduces the caption path") {
  auto f = load_fixture(fixture_path("fig2_datum.json"));
  auto P = polytope_from_datum(f.ctx, *f.lusztig);
  std::vector<RootVector> path{{0, 0, 0}, {1, 2, 2}, {1, 4, 2}, {6, 9, 7}, {7, 9, 8}, {9, 9, 8}};
  auto got = P.path;
  got.erase(std::unique(got.begin(), got.end()), got.end());
  CHECK(got == path);
  CHECK(P.partial);
  CHECK(weight_of(*f.ctx, *f.lusztig) == RootVector{9, 9, 8});
}

TEST_CASE("vertex_mu") {
  auto P = a2_triangle();
  auto d = P.ctx->datum;
  CHECK(is_zero(vertex_mu(P, BiconvexSet::finite_of(WeylElt(d)))));
  CHECK(vertex_mu(P, BiconvexSet::cofinite_of(WeylElt(d))) == P.weight);
  CHECK(is_zero(vertex_mu(P, BiconvexSet::finite_of(WeylElt::simple(d, 0)))));
  CHECK(vertex_mu(P, BiconvexSet::finite_of(WeylElt::simple(d, 1))) == RootVector{0, 1});
}

TEST_CASE("support function") {
  auto P = a2_triangle();
  CHECK(support_function(P, {Rational(0), Rational(0)}) == 0);
  CHECK(support_function(P, {Rational(1), Rational(0)}) == 1);
  Coweight dom{Rational(2), Rational(5)};
  CHECK(support_function(P, dom) == pair(dom, P.weight));

  auto F = fixture_polytope("fig2.json");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-20, 20);
  auto rnd = [&]() { return Coweight{Rational(c(rng), 3), Rational(c(rng), 5), Rational(c(rng), 7)}; };
  for (int t = 0; t < 100; ++t) {
    auto a = rnd(), b = rnd();
    CHECK(support_function(F, add(a, b)) <= support_function(F, a) + support_function(F, b));
    CHECK(support_function(F, scale(a, Rational(3))) == 3 * support_function(F, a));
    // the theta-min vertex is a maximizer
    auto v = vertex_mu(F, BiconvexSet::min_of(a));
    CHECK(pair(a, v) == support_function(F, a));
  }
}

TEST_CASE("2-faces") {
  auto F = fixture_polytope("fig2.json");
  CHECK(extract_2face(F, coweight_from_ints({1, 0, 0})).classification == "A2");
  CHECK(extract_2face(F, coweight_from_ints({-1, 1, 0})).classification == "affineA1");
  // no real root is orthogonal to this one, at any height
  CHECK_THROWS(extract_2face(F, {Rational(1, 2), Rational(1, 3), Rational(1, 5)}));
  auto hex = extract_2face(fixture_polytope("fig1_a2.json"), coweight_from_ints({0, 0}));
  CHECK(hex.cycle.size() == 6);
  auto sides = hexagon_sides(hex);
  REQUIRE(sides);
  CHECK(transition_braid(sides->a2, sides->a12, sides->a1) == Triple{sides->b1, sides->b12, sides->b2});
}

TEST_CASE("validate_mv") {
  auto F = fixture_polytope("fig2.json");
  auto rep = validate_mv(F);
  CHECK(rep.ok);
  CHECK(rep.count("affineA1", "unchecked-open") > 0);
  CHECK(rep.count("A2", "fail") == 0);
  CHECK_FALSE(validate_mv(F, MVOptions{true}).ok);
  CHECK(validate_mv(fixture_polytope("fig1_a2.json")).ok);

  // sides (1,1,1) on one side force (1,1,1) on the other; (2,0,2) is rejected
  auto ctx = context("A2");
  auto bad = polytope_from_vertices(ctx, {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {0, 2}});
  CHECK_FALSE(validate_mv(bad).ok);

  // the imaginary edge has length 4 but the partition has size 3
  auto j = json::parse(std::ifstream(fixture_path("fig1_a1.json")));
  REQUIRE(validate_mv(*fixture_from_json(j).polytope).ok);
  for (auto& p : j["partitions"])
    if (p[1].size() == 2) p[1] = json::array({2, 1});
  CHECK_FALSE(validate_mv(*fixture_from_json(j).polytope).ok);
}

TEST_CASE("Minkowski sums") {
  auto a1 = context("~A1");
  auto seg0 = polytope_from_vertices(a1, {{0, 0}, {1, 0}});
  auto seg1 = polytope_from_vertices(a1, {{0, 0}, {0, 1}});
  auto sq = minkowski_sum(seg0, seg1);
  CHECK(sq.vertices == std::vector<RootVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto pt = polytope_from_vertices(a1, {{0, 0}});
  CHECK(same_vertex_maps(minkowski_sum(sq, pt), sq));

  auto a2 = context("A2");
  auto par = minkowski_sum(polytope_from_vertices(a2, {{0, 0}, {1, 0}}), polytope_from_vertices(a2, {{0, 0}, {0, 1}}));
  CHECK(par.vertices == std::vector<RootVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("dual reflection") {
  auto a2 = context("A2");
  auto pt = polytope_from_vertices(a2, {{0, 0}});
  CHECK(dual_reflect(pt).vertices == pt.vertices);
  auto T = a2_triangle();
  CHECK(dual_reflect(T).vertices == std::vector<RootVector>{{0, 0}, {1, 0}, {1, 1}});
  for (std::string name : {"fig2.json", "fig1_a1.json", "fig1_a2.json"}) {
    auto P = fixture_polytope(name);
    auto D = dual_reflect(P);
    CHECK(validate_mv(D).ok == validate_mv(P).ok);
    CHECK(same_vertex_maps(dual_reflect(D), P));
  }
}

TEST_CASE("face export") {
  auto hex = extract_2face(fixture_polytope("fig1_a2.json"), coweight_from_ints({0, 0}));
  auto svg = face_to_svg(hex);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(std::count(svg.begin(), svg.end(), '\n') == 10);
  CHECK(face_to_tikz(hex).find("tikzpicture") != std::string::npos);
  CHECK(face_to_svg(hex) == svg);
}
