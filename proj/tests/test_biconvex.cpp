#include <doctest.h>

#include <set>

#include "mvkit/biconvex.hpp"
#include "test_util.hpp"

using namespace mvkit;

TEST_CASE("membership") {
  auto a2 = context("A2");
  auto a1 = context("~A1");
  auto id = BiconvexSet::finite_of(WeylElt(a2->datum));
  for (auto& r : a2->E(2)) CHECK_FALSE(id.contains(*a2, r));
  auto g = BiconvexSet::min_of(coweight_from_ints({1, -1}));
  CHECK(g.truncate(*a1, 3) == std::vector<RootVector>{{1, 0}, {2, 1}});
}

TEST_CASE("cofinite sets agree with theta_max of a dominant coweight") {
  auto ctx = context("~A2");
  Coweight theta{Rational(2), Rational(3), Rational(5)};  // strictly dominant
  for (const auto& w : elements_up_to(ctx->datum, 3)) {
    auto cof = BiconvexSet::cofinite_of(w);
    auto mx = BiconvexSet::max_of(w.act(theta));
    for (auto& r : ctx->E_full(10)) CHECK(cof.contains(*ctx, r) == mx.contains(*ctx, r));
  }
}

TEST_CASE("validate_biconvex_truncated") {
  auto a2 = context("A2");
  auto a1 = context("~A1");
  CHECK(validate_biconvex_truncated(*a2, {}, 2));
  auto full = a1->E_full(4);
  CHECK(validate_biconvex_truncated(*a1, RootSet(full.begin(), full.end()), 4));
  CHECK_FALSE(validate_biconvex_truncated(*a2, {{1, 0}, {0, 1}}, 2));
  auto tr = BiconvexSet::finite_of(WeylElt::from_word(a1->datum, {0, 1, 0})).truncate(*a1, 4);
  CHECK(validate_biconvex_truncated(*a1, RootSet(tr.begin(), tr.end()), 4));
}

TEST_CASE("orders from coweights") {
  auto a1 = context("~A1");
  auto o = order_from_coweight(*a1, coweight_from_ints({1, -1}), 5);
  std::vector<RootVector> expect{{0, 1}, {1, 2}, {2, 3}, {1, 1}, {3, 2}, {2, 1}, {1, 0}};
  CHECK(o.roots == expect);
  CHECK(validate_convex_order(*a1, o));

  std::set<std::vector<RootVector>> seen;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) {
      try {
        seen.insert(order_from_coweight(*a1, {Rational(a), Rational(b, 3)}, 5).roots);
      } catch (const Error&) {
      }
    }
  REQUIRE(seen.size() == 2);
  auto first = *seen.begin();
  std::reverse(first.begin(), first.end());
  CHECK(first == *seen.rbegin());

  auto a2 = context("A2");
  std::set<std::vector<RootVector>> fin;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      try {
        fin.insert(order_from_coweight(*a2, {Rational(a), Rational(b)}, 2).roots);
      } catch (const Error&) {
      }
    }
  std::set<std::vector<RootVector>> words{order_from_word(*a2, {0, 1, 0}).roots, order_from_word(*a2, {1, 0, 1}).roots};
  CHECK(fin == words);
  CHECK_THROWS(order_from_coweight(*a1, coweight_from_ints({1, 1}), 5));
}

TEST_CASE("validate_convex_order") {
  auto a2 = context("A2");
  ConvexOrderSlice bad{2, {{1, 0}, {0, 1}, {1, 1}}, std::nullopt};
  CHECK_FALSE(validate_convex_order(*a2, bad));
  auto a1 = context("A1");
  ConvexOrderSlice one{1, {{1}}, std::nullopt};
  CHECK(validate_convex_order(*a1, one));
}

TEST_CASE("order moves") {
  auto a2 = context("A2");
  auto m = order_move(*a2, order_from_word(*a2, {0, 1, 0}), 0);
  CHECK(m.label == "braidA2");
  CHECK(m.slice.roots == std::vector<RootVector>{{0, 1}, {1, 1}, {1, 0}});

  auto a11 = context("A1xA1");
  auto c = order_move(*a11, order_from_word(*a11, {0, 1}), 0);
  CHECK(c.label == "commutation");
  CHECK(c.slice.roots == std::vector<RootVector>{{0, 1}, {1, 0}});

  auto a1 = context("~A1");
  auto o = order_from_coweight(*a1, coweight_from_ints({1, -1}), 5);
  CHECK_THROWS(order_move(*a1, o, 2));
  CHECK_THROWS(order_move(*a1, o, 3));
}

TEST_CASE("positive system above delta") {
  auto a1 = context("~A1");
  auto o = order_from_coweight(*a1, coweight_from_ints({1, -1}), 5);
  CHECK(positive_system_above_delta(*a1, o) == std::vector<std::vector<std::int64_t>>{{-1}});
  auto r = order_from_coweight(*a1, coweight_from_ints({-1, 1}), 5);
  CHECK(positive_system_above_delta(*a1, r) == std::vector<std::vector<std::int64_t>>{{1}});

  // in A~2 the roots above delta are those positive for the spherical part of theta
  auto a2 = context("~A2");
  Coweight theta{Rational(-7), Rational(1), Rational(601, 100)};
  auto X = positive_system_above_delta(*a2, order_from_coweight(*a2, theta, 26));
  const auto& aff = *a2->affine;
  for (auto& x : X) CHECK(pair(theta, aff.embed(x)) > 0);
  CHECK(X.size() == 3);
}
