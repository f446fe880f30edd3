#include "mvkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mvkit/io.hpp"
#include "mvkit/oracle.hpp"

namespace mvkit {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Fail {
  std::string msg;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Fail{msg};
}

ContextPtr context(const std::string& type) { return std::make_shared<RootContext>(datum_from_type(type)); }

// All nonnegative vectors of the given rank with height <= H.
std::vector<RootVector> weights_up_to(int rank, std::int64_t H) {
  std::vector<RootVector> out;
  RootVector v(rank, 0);
  std::function<void(int, std::int64_t)> go = [&](int k, std::int64_t left) {
    if (k == rank) {
      out.push_back(v);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      v[k] = x;
      go(k + 1, left - x);
    }
    v[k] = 0;
  };
  go(0, H);
  return out;
}

bool same_datum(const LusztigDatum& a, const LusztigDatum& b) {
  return a.order.roots == b.order.roots && a.real == b.real && a.imaginary == b.imaginary;
}

std::string plural(std::size_t n, const std::string& what) { return std::to_string(n) + " " + what; }

// Distinct convex order slices of height H: reduced words of w0 in finite type, random
// generic coweights in affine type.
std::vector<ConvexOrderSlice> distinct_slices(const RootContext& ctx, std::int64_t H, std::size_t want,
                                              std::mt19937_64& rng, std::size_t* available) {
  std::vector<ConvexOrderSlice> out;
  if (!ctx.affine) {
    auto words = reduced_words(longest_element(ctx.datum)).words;
    *available = words.size();
    for (std::size_t k = 0; k < words.size() && out.size() < want; ++k)
      out.push_back(order_from_word(ctx, words[k * (words.size() / std::min(want, words.size()))]));
    return out;
  }
  std::set<std::vector<RootVector>> seen;
  std::uniform_int_distribution<int> big(-40, 40), small(1, 996);
  for (int draw = 0; draw < 400; ++draw) {
    Coweight th;
    for (int i = 0; i < ctx.datum->rank(); ++i) th.push_back(Rational(big(rng)) + Rational(small(rng), 997));
    for (auto& x : th) x.canonicalize();
    try {
      auto o = order_from_coweight(ctx, th, H);
      if (seen.insert(o.roots).second && out.size() < want) out.push_back(o);
    } catch (const Error&) {
    }
  }
  *available = seen.size();
  return out;
}

std::string criterion1(const AcceptanceOptions& opts) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(opts.seed);
  std::ostringstream detail;
  std::vector<std::string> short_types;
  for (std::string type : {"A2", "A3", "~A1", "~A2"}) {
    auto ctx = context(type);
    std::size_t available = 0;
    auto slices = distinct_slices(*ctx, 8, 3, rng, &available);
    if (slices.size() < 3) short_types.push_back(type + " has only " + plural(available, "convex orders"));
    std::size_t checked = 0;
    for (const auto& nu : weights_up_to(ctx->datum->rank(), 8)) {
      mpz_class k = kostant_count(*ctx, nu);
      require(k == oracle::kostant_brute(*ctx, nu), type + ": kostant_count disagrees with the brute-force count at " +
                                                        to_string(nu));
      for (const auto& o : slices) {
        auto data = enumerate_by_weight(*ctx, nu, o);
        require(mpz_class(data.size()) == k, type + ": " + plural(data.size(), "data") + " of weight " + to_string(nu) +
                                                 " but Kostant count " + k.get_str());
        for (const auto& d : data) require(weight_of(*ctx, d) == nu, type + ": datum of wrong weight");
        ++checked;
      }
    }
    detail << type << " " << slices.size() << (slices.size() == available ? " (all)" : "") << " slices x "
           << checked / slices.size() << " weights; ";
  }
  double s = since(t0);
  require(s < 60, "runtime " + std::to_string(s) + " s exceeds 60 s");
  // every count agrees, but three distinct slices cannot be supplied where fewer exist
  std::string why;
  for (const auto& t : short_types) why += t + "; ";
  require(short_types.empty(), detail.str() + "counts agree on every slice, but " + why + "3 slices required");
  return detail.str();
}

std::string criterion2(const AcceptanceOptions&) {
  auto t0 = Clock::now();
  auto ctx = context("A3");
  auto words = reduced_words(longest_element(ctx->datum)).words;
  require(words.size() == 16, "A3 has " + std::to_string(words.size()) + " reduced words of w0");
  // slice graph: nodes are the 16 orders, edges are the legal moves
  std::vector<ConvexOrderSlice> nodes{order_from_word(*ctx, words.front())};
  std::map<std::vector<RootVector>, std::size_t> index{{nodes[0].roots, 0}};
  std::vector<std::vector<OrderMove>> moves;
  std::vector<std::pair<std::size_t, std::size_t>> tree;  // (parent, move index) per node
  tree.emplace_back(0, 0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    moves.push_back(order_moves(*ctx, nodes[k]));
    for (std::size_t m = 0; m < moves[k].size(); ++m) {
      const auto& target = moves[k][m].slice;
      if (index.emplace(target.roots, nodes.size()).second) {
        nodes.push_back(target);
        tree.emplace_back(k, m);
      }
    }
  }
  require(nodes.size() == 16, "move graph reaches " + std::to_string(nodes.size()) + " orders");
  for (const auto& w : words) require(index.count(order_from_word(*ctx, w).roots), "word order missing from the graph");

  std::size_t data_count = 0, edges = 0;
  for (const auto& nu : weights_up_to(ctx->datum->rank(), 6)) {
    for (const auto& d0 : enumerate_by_weight(*ctx, nu, nodes[0])) {
      ++data_count;
      std::vector<LusztigDatum> at{d0};
      for (std::size_t k = 1; k < nodes.size(); ++k) at.push_back(apply_move(*ctx, at[tree[k].first], moves[tree[k].first][tree[k].second]));
      std::vector<RootVector> verts;
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        require(weight_of(*ctx, at[k]) == nu, "reordering changed the weight of a datum of weight " + to_string(nu));
        for (const auto& m : moves[k]) {
          ++edges;
          require(same_datum(apply_move(*ctx, at[k], m), at[index.at(m.slice.roots)]),
                  "two move paths disagree at weight " + to_string(nu));
        }
        auto P = polytope_from_datum(ctx, at[k]);
        if (k == 0) verts = P.vertices;
        require(P.vertices == verts, "vertex sets differ across reduced words at weight " + to_string(nu));
      }
      require(same_datum(reorder(*ctx, d0, nodes.back()), at.back()), "reorder disagrees with the move tree");
    }
  }
  double s = since(t0);
  require(s < 120, "runtime " + std::to_string(s) + " s exceeds 120 s");
  return "16 words, " + plural(data_count, "data") + ", " + plural(edges, "move checks");
}

std::string criterion3(const AcceptanceOptions&) {
  auto hex = load_fixture(fixture_path("fig1_a2.json"));
  const auto& P = *hex.polytope;
  auto face = extract_2face(P, Coweight(2, Rational(0)));
  std::string why;
  auto h = hexagon_sides(face, &why);
  require(h.has_value(), "Fig. 1 A2 hexagon: " + why);
  Triple a{h->a2, h->a12, h->a1}, b{h->b1, h->b12, h->b2};
  require(a == Triple{4, 3, 6} && b == Triple{5, 4, 3}, "hexagon side lengths are not (4,3,6) and (5,4,3)");
  require(b.q == std::min(a.p, a.r), "q' != min(p,r)");
  require(b.p + b.q == a.q + a.r, "p'+q' != q+r");
  require(b.q + b.r == a.p + a.q, "q'+r' != p+q");
  require(transition_braid(4, 3, 6) == Triple{5, 4, 3}, "transition_braid(4,3,6) != (5,4,3)");
  auto rh = validate_mv(P);
  require(rh.ok, "validate_mv rejects the Fig. 1 hexagon");

  auto fig2 = load_fixture(fixture_path("fig2.json"));
  auto r = validate_mv(*fig2.polytope);
  require(r.ok, "validate_mv rejects Fig. 2: " + (r.violations.empty() ? std::string() : r.violations.front()));
  int open = r.count("affineA1", "unchecked-open");
  require(open > 0, "no affine A1 face was marked unchecked-open");
  require(r.count("affineA1", "pass") == 0 && r.count("affineA1", "fail") == 0,
          "an affine A1 face was given a verdict");
  return "(4,3,6) -> (5,4,3); Fig. 2 accepted with " + std::to_string(r.count("A2", "pass")) + " A2 faces, " +
         std::to_string(r.count("A1xA1", "pass")) + " A1xA1 faces and " + std::to_string(open) +
         " affine A1 faces unchecked-open";
}

std::int64_t partition_sum(const std::vector<std::pair<Coweight, Partition>>& parts, const std::vector<Coweight>& keys) {
  std::int64_t s = 0;
  for (auto& [g, p] : parts)
    if (std::find(keys.begin(), keys.end(), g) != keys.end()) s += partition_size(p);
  return s;
}

// Length n of a face {x, x + n delta}; -1 if the face is not such a segment.
std::int64_t imaginary_length(const RootContext& ctx, const std::vector<RootVector>& face) {
  if (face.size() != 2) return -1;
  RootVector diff = sub(face[1], face[0]);
  const RootVector& delta = ctx.affine->delta;
  std::int64_t n = diff[0] / delta[0];
  if (n < 0) n = -n;
  if (diff != scale(delta, n) && diff != scale(delta, -n)) return -1;
  return n;
}

std::string criterion4(const AcceptanceOptions&) {
  auto fig2 = load_fixture(fixture_path("fig2.json"));
  auto dat = load_fixture(fixture_path("fig2_datum.json"));
  const auto& ctx = *dat.ctx;
  const auto& L = *dat.lusztig;
  auto keys = imaginary_keys(ctx, L.order);
  std::int64_t lam = partition_sum(L.imaginary, keys);
  require(lam == 5, "Fig. 2 datum: partition sizes sum to " + std::to_string(lam));
  auto path = path_vertices(ctx, L);
  std::int64_t step = -1;
  for (std::size_t k = 1; k < path.size(); ++k)
    if (auto n = imaginary_length(ctx, {path[k - 1], path[k]}); n > 0) step = n;
  require(step == 5, "Fig. 2 datum: imaginary step of the path is not 5 delta");
  const auto& P = *fig2.polytope;
  for (auto& v : path) require(std::binary_search(P.vertices.begin(), P.vertices.end(), v), "path vertex " + to_string(v) + " is not a vertex of Fig. 2");
  Coweight theta(ctx.datum->rank(), Rational(0));
  for (auto& g : keys) theta = add(theta, g);
  std::int64_t edge = imaginary_length(ctx, maximizers(P, theta));
  require(edge == 5, "Fig. 2 imaginary edge has length " + std::to_string(edge));
  require(partition_sum(P.partitions, keys) == 5, "Fig. 2 fixture partitions do not sum to 5");

  auto fig1 = load_fixture(fixture_path("fig1_a1.json"));
  const auto& Q = *fig1.polytope;
  std::vector<std::string> seen;
  for (auto& [g, p] : Q.partitions) {
    std::int64_t n = imaginary_length(*fig1.ctx, maximizers(Q, g));
    require(n == partition_size(p), "Fig. 1 affine A1 edge at " + to_string(g) + " has length " + std::to_string(n) +
                                        " but |lambda| = " + std::to_string(partition_size(p)));
    seen.push_back(std::to_string(n) + "delta = |" + partition_to_string(p) + "|");
  }
  require(seen.size() == 2, "Fig. 1 affine A1 fixture needs two partitions");
  return "Fig. 2: 5delta = 2+3; Fig. 1: " + seen[0] + ", " + seen[1];
}

std::string criterion5(const AcceptanceOptions& opts) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(opts.seed + 5);
  std::size_t modules = 0, cb = 0, words = 0, mink = 0, duals = 0;
  for (std::string type : {"~A1", "~A2"}) {
    auto ctx = context(type);
    const DatumPtr& d = ctx->datum;
    // elements with several reduced words
    std::vector<WeylElt> multi;
    for (const auto& w : elements_up_to(d, 4))
      if (reduced_words(w).words.size() > 1) multi.push_back(w);
    // in ~A1 every element has a unique reduced word, so the check is vacuous there
    if (multi.empty()) require(d->rank() == 2, type + ": no element with two reduced words");
    for (int k = 0; k < 110; ++k) {
      const int dim = 1 + k % 8;
      auto m = random_module<Rational>(d, d->edges, dim, rng);
      auto n = random_module<Rational>(d, d->edges, 1 + (k * 5 + 3) % 8, rng);
      require(validate_module(m).ok && validate_module(n).ok, type + ": random module is not valid");
      ++modules;

      auto [hmn, emn] = hom_ext_dims(m, n);
      auto [hnm, enm] = hom_ext_dims(n, m);
      (void)enm;
      require(hmn + hnm - emn == bilinear_form(*d, m.dimvec(), n.dimvec()),
              type + ": Crawley-Boevey formula fails for dimension-vectors " + to_string(m.dimvec()) + ", " +
                  to_string(n.dimvec()));
      ++cb;

      if (!multi.empty()) {
        const WeylElt& w = multi[rng() % multi.size()];
        auto rw = reduced_words(w).words;
        auto ref = torsion_dimvecs(m, rw.front());
        for (const auto& word : rw)
          require(torsion_dimvecs(m, word) == ref, type + ": torsion dimension-vectors depend on the reduced word");
        ++words;
      }

      auto Hm = hn_polytope(ctx, m).polytope;
      if (dim < 8) {
        auto small = random_module<Rational>(d, d->edges, 1 + static_cast<int>(rng() % (8 - dim)), rng);
        auto Hs = hn_polytope(ctx, small).polytope;
        auto Hsum = hn_polytope(ctx, direct_sum(m, small)).polytope;
        require(same_vertex_maps(minkowski_sum(Hm, Hs), Hsum), type + ": Pol(m + n) is not the Minkowski sum");
        ++mink;
      }
      auto Hd = hn_polytope(ctx, dualize(m)).polytope;
      require(same_vertex_maps(Hd, dual_reflect(Hm)), type + ": Pol(m*) is not the point reflection");
      ++duals;
    }
  }
  double s = since(t0);
  require(modules >= 200, "only " + std::to_string(modules) + " modules");
  require(s < 180, "runtime " + std::to_string(s) + " s exceeds 180 s");
  return plural(modules, "modules") + ": " + std::to_string(cb) + " CB, " + std::to_string(words) + " word, " +
         std::to_string(mink) + " Minkowski, " + std::to_string(duals) + " dual checks";
}

template <int P>
std::size_t hn_oracle_run(const std::string& type, int per_dim, std::mt19937_64& rng) {
  auto ctx = context(type);
  const DatumPtr& d = ctx->datum;
  std::size_t n = 0;
  for (int dim = 1; dim <= 6; ++dim)
    for (int k = 0; k < per_dim; ++k) {
      auto m = random_module<Zp<P>>(d, d->edges, dim, rng);
      require(validate_module(m).ok, type + ": random module over F_p is not valid");
      auto sub = oracle::submodule_dimvecs(m);
      auto hull = oracle::hull_vertices(std::vector<RootVector>(sub.begin(), sub.end()));
      auto H = hn_polytope(ctx, m).polytope;
      require(H.vertices == hull, type + ": HN polytope differs from the submodule hull for dimension-vector " +
                                      to_string(m.dimvec()));
      ++n;
    }
  return n;
}

std::string criterion6(const AcceptanceOptions& opts) {
  std::mt19937_64 rng(opts.seed + 6);
  std::size_t n = 0;
  for (std::string type : {"A2", "A3", "~A1", "~A2"}) {
    n += hn_oracle_run<2>(type, 4, rng);
    n += hn_oracle_run<3>(type, 4, rng);
  }
  return plural(n, "modules") + " over F_2 and F_3";
}

// Core of type (n) in affine A1: T_alpha = 1, T_beta = p(J), T_alphabar = -J p(J), T_betabar = J.
RatModule core_module(const DatumPtr& d, int n, const std::vector<Rational>& coef) {
  auto m = zero_module<Rational>(d, {{0, 1}, {0, 1}});
  m.dims = {n, n};
  reshape_arrows(m);
  Matrix<Rational> J(n, n), pJ(n, n), power = Matrix<Rational>::identity(n);
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = 1;
  for (const auto& c : coef) {
    pJ = pJ + power.scaled(c);
    power = power * J;
  }
  m.arrows[0] = Matrix<Rational>::identity(n);
  m.arrows[1] = (J * pJ).scaled(Rational(-1));
  m.arrows[2] = pJ;
  m.arrows[3] = J;
  return m;
}

std::string criterion7(const AcceptanceOptions& opts) {
  std::mt19937_64 rng(opts.seed + 7);
  auto fig = load_fixture(fixture_path("fig_i3.json"));
  const RatModule& i3 = *fig.module;
  require(validate_module(i3).ok, "Fig. I(3) module is not a valid module");
  require(jordan_core_type(i3) == Partition{3}, "Fig. I(3) has Jordan type " + partition_to_string(jordan_core_type(i3)));
  const DatumPtr& d = i3.datum;
  auto i1 = core_module(d, 1, {Rational(5, 3)});
  auto i2 = core_module(d, 2, {Rational(-1), Rational(4)});
  std::vector<std::pair<std::string, RatModule>> cases{{"I(3)", i3}, {"I(1)", i1}, {"I(2)", i2}};
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 0}, {1, 2}, {0, 2}}) {
    auto s = direct_sum(cases[a].second, cases[b].second);
    Partition want = jordan_core_type(cases[a].second);
    for (auto x : jordan_core_type(cases[b].second)) want.push_back(x);
    std::sort(want.rbegin(), want.rend());
    require(jordan_core_type(s) == want, cases[a].first + " + " + cases[b].first + " has Jordan type " +
                                             partition_to_string(jordan_core_type(s)));
    cases.emplace_back(cases[a].first + "+" + cases[b].first, s);
  }
  std::size_t conj = 0;
  for (const auto& [name, m] : cases) {
    require(validate_module(m).ok, name + " is not a valid module");
    Partition p = jordan_core_type(m);
    for (int t = 0; t < 10; ++t) {
      std::vector<Matrix<Rational>> g;
      for (int dim : m.dims) g.push_back(random_invertible<Rational>(dim, rng));
      require(jordan_core_type(change_basis(m, g)) == p, name + ": Jordan type changed under a change of basis");
      ++conj;
    }
  }
  return "I(3) -> (3); " + plural(cases.size(), "modules") + ", " + plural(conj, "conjugations");
}

std::string criterion8(const AcceptanceOptions&) {
  std::ostringstream detail;
  for (std::string type : {"~A1", "~A2", "~A3"}) {
    auto d = datum_from_type(type);
    auto a = default_affine_data(d);
    auto gamma = spherical_coweights(a);
    std::set<std::string> G, image;
    for (auto& g : gamma) G.insert(to_string(g));
    auto orients = acyclic_orientations(*d);
    for (const auto& o : orients) {
      auto g = to_string(orientation_coweight(a, o));
      require(G.count(g), type + ": orientation coweight " + g + " is not in Gamma");
      require(image.insert(g).second, type + ": two orientations share the coweight " + g);
    }
    require(image.size() == G.size(), type + ": image misses " + std::to_string(G.size() - image.size()) + " of Gamma");
    detail << type << " " << orients.size() << "/" << G.size() << "; ";
  }
  return "bijective: " + detail.str();
}

const std::vector<std::pair<std::string, std::function<std::string(const AcceptanceOptions&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<std::string(const AcceptanceOptions&)>>> c{
      {"Kostant coherence", criterion1},
      {"Braid coherence", criterion2},
      {"Tropical Plucker fixture", criterion3},
      {"Decoration consistency", criterion4},
      {"Preprojective identities", criterion5},
      {"HN oracle equivalence", criterion6},
      {"Affine A1 core classification", criterion7},
      {"Orientation map", criterion8},
  };
  return c;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw Error("no acceptance criterion " + std::to_string(id), ErrorKind::usage);
  const auto& [title, fn] = criteria()[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = title;
  auto t0 = Clock::now();
  if (opts.log) *opts.log << "running " << id << " " << title << "\n" << std::flush;
  try {
    r.detail = fn(opts);
    r.pass = true;
  } catch (const Fail& f) {
    r.detail = f.msg;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::string detail = r.detail;
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
  std::ostringstream s;
  s << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << ": " << detail << " (" << std::fixed
    << std::setprecision(1) << r.seconds << " s)";
  return s.str();
}

}  // namespace mvkit
