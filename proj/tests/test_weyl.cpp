#include <doctest.h>

#include <random>

#include "mvkit/weyl.hpp"

using namespace mvkit;

TEST_CASE("reflections act on roots") {
  auto a2 = datum_from_type("A2");
  auto a1 = datum_from_type("~A1");
  CHECK(WeylElt::simple(a2, 0).act(RootVector{0, 1}) == RootVector{1, 1});
  CHECK(WeylElt::simple(a1, 1).act(RootVector{1, 0}) == RootVector{1, 2});
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Word w;
    for (int k = 0; k < 6; ++k) w.push_back(static_cast<int>(rng() % 2));
    CHECK(WeylElt::from_word(a1, w).act(RootVector{1, 1}) == RootVector{1, 1});
  }
}

TEST_CASE("multiplication") {
  auto a2 = datum_from_type("A2");
  auto s1 = WeylElt::simple(a2, 0), s2 = WeylElt::simple(a2, 1);
  CHECK((s1 * s1).is_identity());
  auto w = s1 * s2 * s1;
  CHECK(w.length() == 3);
  CHECK(w == longest_element(a2));
  CHECK(w.word() == Word{0, 1, 0});
}

TEST_CASE("length additivity matches disjoint inversion sets") {
  auto d = datum_from_type("~A2");
  auto elems = elements_up_to(d, 3);
  for (const auto& u : elems)
    for (const auto& v : elems) {
      auto nu = inversion_set(u.inverse());
      auto nv = inversion_set(v);
      bool disjoint = true;
      for (auto& x : nu)
        for (auto& y : nv) disjoint = disjoint && x != y;
      CHECK(((u * v).length() == u.length() + v.length()) == disjoint);
    }
}

TEST_CASE("inversion sets") {
  auto a2 = datum_from_type("A2");
  auto a1 = datum_from_type("~A1");
  CHECK(inversion_set(WeylElt(a2)).empty());
  CHECK(inversion_set(WeylElt::from_word(a2, {0, 1})) == std::vector<RootVector>{{1, 0}, {1, 1}});
  CHECK(inversion_set(WeylElt::from_word(a1, {0, 1, 0})) == std::vector<RootVector>{{1, 0}, {2, 1}, {3, 2}});
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(WeylElt::simple(datum_from_type("A3"), 1)).words.size() == 1);
  CHECK(reduced_words(longest_element(datum_from_type("A2"))).words.size() == 2);
  auto g = reduced_words(longest_element(datum_from_type("A3")));
  CHECK(g.words.size() == 16);
  for (auto& w : g.words) CHECK(is_reduced_word(*datum_from_type("A3"), w));
  CHECK_FALSE(is_reduced_word(*datum_from_type("A2"), {0, 0}));
}

TEST_CASE("J-reduced elements") {
  auto a2 = datum_from_type("A2");
  CHECK(is_J_reduced(WeylElt(a2), {0, 1}));
  CHECK_FALSE(is_J_reduced(WeylElt::simple(a2, 1), {1}));
  CHECK(is_J_reduced(WeylElt::simple(a2, 0), {1}));
}

TEST_CASE("canonical words are lexicographically least") {
  auto d = datum_from_type("A3");
  auto w = longest_element(d);
  CHECK(w.word() == reduced_words(w).words.front());
  CHECK(WeylElt::from_word(d, {2, 0}) == WeylElt::from_word(d, {0, 2}));
  CHECK(WeylElt::from_word(d, {2, 0}).word() == Word{0, 2});
}
