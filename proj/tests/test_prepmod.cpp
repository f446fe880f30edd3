#include <doctest.h>

#include <random>

#include "mvkit/io.hpp"
#include "mvkit/oracle.hpp"
#include "test_util.hpp"

using namespace mvkit;

namespace {

using Mod = PrepModule<Rational>;
using Mat = Matrix<Rational>;

const std::vector<std::pair<int, int>> kA1{{0, 1}, {0, 1}};

Mod simple(const DatumPtr& d, int i) { return simple_module<Rational>(d, default_orientation(*d), i); }

// dims (1,1): T_alpha = 1, T_beta = 2, the two reverse arrows zero
Mod general_i1(const DatumPtr& d) {
  auto m = zero_module<Rational>(d, kA1);
  m.dims = {1, 1};
  reshape_arrows(m);
  m.arrows[0](0, 0) = 1;
  m.arrows[2](0, 0) = 2;
  return m;
}

Mod core(const DatumPtr& d, int n, const Rational& c) {
  auto m = zero_module<Rational>(d, kA1);
  m.dims = {n, n};
  reshape_arrows(m);
  Mat J(n, n);
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = 1;
  m.arrows[0] = Mat::identity(n);
  m.arrows[1] = J.scaled(-c);
  m.arrows[2] = Mat::identity(n).scaled(c);
  m.arrows[3] = J;
  return m;
}

std::vector<RootVector> hn_vertices(const std::shared_ptr<const RootContext>& ctx, const Mod& m) {
  return hn_polytope(ctx, m).polytope.vertices;
}

}  // namespace

TEST_CASE("module validation") {
  auto d = datum_from_type("~A1");
  CHECK(validate_module(simple(d, 0)).ok);
  auto bad = general_i1(d);
  bad.arrows[1](0, 0) = 1;  // a0* a0 + a1* a1 = 1
  CHECK_FALSE(validate_module(bad).ok);
  auto fig = load_fixture(fixture_path("fig_i3.json"));
  CHECK(validate_module(*fig.module).ok);
}

TEST_CASE("reflection functors") {
  auto d = datum_from_type("~A1");
  CHECK(sigma(simple(d, 1), 1).total_dim() == 0);
  CHECK(sigma_star(simple(d, 1), 1).total_dim() == 0);
  CHECK(sigma(simple(d, 0), 1).dimvec() == RootVector{1, 2});
  CHECK(sigma_star(simple(d, 0), 1).dimvec() == RootVector{1, 2});
  CHECK(validate_module(sigma(simple(d, 0), 1)).ok);

  std::mt19937_64 rng(5);
  int roundtrips = 0;
  for (int t = 0; t < 60; ++t) {
    auto m = random_module<Rational>(d, kA1, 2 + t % 5, rng);
    for (int i = 0; i < 2; ++i) {
      bool soc_zero = m_out(m, i).rank() == static_cast<std::size_t>(m.dims[i]);
      if (soc_zero) CHECK(sigma_star(m, i).dimvec() == reflect_root(*d, i, m.dimvec()));
      bool head_zero = m_in(m, i).rank() == static_cast<std::size_t>(m.dims[i]);
      if (!soc_zero || !head_zero) continue;
      auto back = sigma_star(sigma(m, i), i);
      REQUIRE(back.dims == m.dims);
      CHECK(find_isomorphism(m, back, rng));
      ++roundtrips;
    }
  }
  CHECK(roundtrips > 0);
}

TEST_CASE("torsion dimension vectors") {
  auto d = datum_from_type("~A1");
  auto m = direct_sum(simple(d, 0), simple(d, 1));
  CHECK(torsion_dimvecs(m, {}) == std::make_pair(RootVector{1, 1}, RootVector{0, 0}));
  CHECK(torsion_dimvecs(m, {1}).first == RootVector{1, 0});

  std::mt19937_64 rng(9);
  auto d2 = datum_from_type("~A2");
  for (int t = 0; t < 30; ++t) {
    auto x = random_module<Rational>(d2, default_orientation(*d2), 1 + t % 6, rng);
    for (int i = 0; i < 3; ++i) {
      std::int64_t soc = x.dims[i] - static_cast<std::int64_t>(m_out(x, i).rank());
      CHECK(torsion_dimvecs(x, {i}).second == scale(unit_vector(3, i), soc));
    }
    // T^w shrinks along reduced words
    Word w;
    RootVector prev = x.dimvec();
    for (int k = 0; k < 5; ++k) {
      int i = static_cast<int>(rng() % 3);
      if (!w.empty() && w.back() == i) continue;
      w.push_back(i);
      if (!is_reduced_word(*d2, w)) {
        w.pop_back();
        continue;
      }
      auto top = torsion_dimvecs(x, w).first;
      for (int j = 0; j < 3; ++j) CHECK(top[j] <= prev[j]);
      prev = top;
    }
  }
}

TEST_CASE("HN polytopes") {
  auto ctx = context("~A1");
  auto d = ctx->datum;
  CHECK(hn_vertices(ctx, simple(d, 1)) == std::vector<RootVector>{{0, 0}, {0, 1}});
  CHECK(hn_vertices(ctx, direct_sum(simple(d, 0), simple(d, 1))) ==
        std::vector<RootVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto i1 = general_i1(d);
  CHECK(hn_vertices(ctx, i1) == std::vector<RootVector>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(hn_vertices(ctx, dualize(i1)) == std::vector<RootVector>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(same_vertex_maps(hn_polytope(ctx, dualize(i1)).polytope, dual_reflect(hn_polytope(ctx, i1).polytope)));
}

TEST_CASE("HN vertices agree with brute-force submodules over F_3") {
  auto ctx = context("~A2");
  std::mt19937_64 rng(13);
  for (int t = 0; t < 12; ++t) {
    auto m = random_module<Zp<3>>(ctx->datum, default_orientation(*ctx->datum), 1 + t % 5, rng);
    auto subs = oracle::submodule_dimvecs(m);
    CHECK(hn_polytope(ctx, m).polytope.vertices ==
          oracle::hull_vertices(std::vector<RootVector>(subs.begin(), subs.end())));
  }
}

TEST_CASE("Hom and Ext") {
  auto d = datum_from_type("~A1");
  auto s0 = simple(d, 0), s1 = simple(d, 1);
  CHECK(hom_ext_dims(s0, s0) == std::make_pair<std::int64_t, std::int64_t>(1, 0));
  CHECK(hom_ext_dims(s0, s1) == std::make_pair<std::int64_t, std::int64_t>(0, 2));
  CHECK(hom_ext_dims(s1, s0).first == 0);

  std::mt19937_64 rng(17);
  for (std::string t : {"~A1", "~A2", "A3"}) {
    auto dt = datum_from_type(t);
    for (int k = 0; k < 15; ++k) {
      auto m = random_module<Rational>(dt, default_orientation(*dt), 1 + k % 4, rng);
      auto n = random_module<Rational>(dt, default_orientation(*dt), 1 + (k * 3) % 4, rng);
      auto mn = hom_ext_dims(m, n);
      CHECK(mn.first + hom_ext_dims(n, m).first - mn.second == bilinear_form(*dt, m.dimvec(), n.dimvec()));
    }
  }
}

TEST_CASE("duality") {
  auto d = datum_from_type("~A1");
  std::mt19937_64 rng(19);
  CHECK(find_isomorphism(dualize(simple(d, 0)), simple(d, 0), rng));
  auto m = random_module<Rational>(d, kA1, 5, rng);
  CHECK(dualize(m).dimvec() == m.dimvec());
  CHECK(validate_module(dualize(m)).ok);
  CHECK(find_isomorphism(dualize(dualize(m)), m, rng));
}

TEST_CASE("Jordan types of cores") {
  auto d = datum_from_type("~A1");
  auto fig = load_fixture(fixture_path("fig_i3.json"));
  CHECK(jordan_core_type(*fig.module) == Partition{3});
  CHECK(jordan_core_type(general_i1(d)) == Partition{1});
  auto c2 = core(d, 2, Rational(3, 2)), c1 = core(d, 1, Rational(-2));
  REQUIRE(validate_module(c2).ok);
  CHECK(jordan_core_type(direct_sum(c2, c1)) == Partition{2, 1});
  CHECK_THROWS(jordan_core_type(simple(d, 0)));
  CHECK_THROWS(jordan_core_type(simple(datum_from_type("A2"), 0)));
}
