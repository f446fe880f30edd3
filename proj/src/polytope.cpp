#include "mvkit/polytope.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace mvkit {

namespace {

std::vector<Coweight> coordinate_coweights(const CartanDatum& d) {
  std::vector<Coweight> out;
  for (int i = 0; i < d.rank(); ++i) out.push_back(fundamental_coweight(d, i));
  return out;
}

Word inverse_word(const DatumPtr& d, const Word& w) { return WeylElt::from_word(d, w).inverse().word(); }

// Exact solution of a square rational system; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Unique point of `pts` maximizing every functional in `rays` simultaneously.
std::optional<RootVector> chamber_vertex(const std::vector<RootVector>& pts, const std::vector<Coweight>& rays) {
  std::vector<Rational> best(rays.size());
  for (std::size_t k = 0; k < rays.size(); ++k) {
    bool first = true;
    for (const auto& p : pts) {
      Rational v = pair(rays[k], p);
      if (first || v > best[k]) best[k] = v;
      first = false;
    }
  }
  std::optional<RootVector> found;
  for (const auto& p : pts) {
    bool all = true;
    for (std::size_t k = 0; k < rays.size() && all; ++k) all = pair(rays[k], p) == best[k];
    if (!all) continue;
    if (found) return std::nullopt;
    found = p;
  }
  return found;
}

std::vector<RootVector> sorted_unique(std::vector<RootVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::optional<std::pair<Rational, Rational>> plane_coords(const RootVector& x, const RootVector& b1,
                                                          const RootVector& b2) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t det = b1[i] * b2[j] - b1[j] * b2[i];
      if (det == 0) continue;
      Rational c1 = Rational(static_cast<long>(x[i] * b2[j] - x[j] * b2[i]), static_cast<long>(det));
      Rational c2 = Rational(static_cast<long>(b1[i] * x[j] - b1[j] * x[i]), static_cast<long>(det));
      c1.canonicalize();
      c2.canonicalize();
      for (std::size_t k = 0; k < n; ++k)
        if (c1 * static_cast<long>(b1[k]) + c2 * static_cast<long>(b2[k]) != static_cast<long>(x[k]))
          return std::nullopt;
      return std::make_pair(c1, c2);
    }
  return std::nullopt;
}

namespace {

std::string pts_to_string(const std::vector<RootVector>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + to_string(v[k]);
  return s;
}

}  // namespace

int stabilization_length(const RootContext& ctx, std::int64_t D) {
  if (!ctx.affine) return static_cast<int>(finite_positive_roots(*ctx.datum).size());
  const AffineData& a = *ctx.affine;
  const int r = a.r;
  const std::int64_t Dp = std::max<std::int64_t>(D, height(a.delta));
  // hyperplanes <x, c> + b0 = 0 in the slice <theta, delta> = 1
  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> planes;
  for (const auto& beta : positive_real_roots(a, Dp)) {
    auto c = a.pi(beta);
    std::int64_t b0 = beta[a.extending];
    bool neg = false;
    for (auto x : c)
      if (x != 0) {
        neg = x < 0;
        break;
      }
    if (neg) {
      for (auto& x : c) x = -x;
      b0 = -b0;
    }
    planes.insert({c, b0});
  }
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> hp(planes.begin(), planes.end());
  auto count_at = [&](const std::vector<Rational>& x) {
    std::int64_t total = 0;
    for (const auto& c : a.spherical) {
      RootVector lift = a.iota(c);
      Rational g = lift[a.extending];
      for (int k = 0; k < r; ++k) g += x[k] * static_cast<long>(c[k]);
      if (g > 0) continue;
      Rational neg = -g;
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
      total += fl.get_si() + 1;
    }
    return total;
  };
  std::int64_t best = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == r) {
      std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r));
      std::vector<Rational> rhs(r);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) m[i][j] = static_cast<long>(hp[pick[i]].first[j]);
        rhs[i] = -static_cast<long>(hp[pick[i]].second);
      }
      auto x = solve_square(m, rhs);
      if (x) best = std::max(best, count_at(*x));
      return;
    }
    for (std::size_t k = start; k < hp.size(); ++k) {
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return static_cast<int>(best);
}

void collect_vertices(GGMSPolytope& P) {
  std::vector<RootVector> v;
  for (auto& [w, x] : P.tits) v.push_back(x);
  for (auto& [w, x] : P.anti) v.push_back(x);
  P.vertices = sorted_unique(v);
}

GGMSPolytope polytope_from_vertices(ContextPtr ctx, const std::vector<RootVector>& points,
                                    std::vector<std::pair<Coweight, Partition>> partitions,
                                    std::optional<int> L) {
  if (points.empty()) throw Error("polytope needs at least one point", ErrorKind::validation);
  GGMSPolytope P;
  P.ctx = ctx;
  P.partitions = std::move(partitions);
  auto pts = sorted_unique(points);
  std::int64_t lo = height(pts.front()), hi = lo;
  for (auto& p : pts) {
    lo = std::min(lo, height(p));
    hi = std::max(hi, height(p));
  }
  P.L = L ? *L : stabilization_length(*ctx, hi - lo);
  const DatumPtr& d = ctx->datum;
  auto om = coordinate_coweights(*d);
  for (const auto& w : elements_up_to(d, P.L)) {
    std::vector<Coweight> rays, arays;
    WeylElt wi = w.inverse();
    for (auto& o : om) {
      rays.push_back(w.act(o));
      arays.push_back(negate(wi.act(o)));
    }
    auto t = chamber_vertex(pts, rays);
    if (t) P.tits[w.word()] = *t;
    else P.issues.push_back("no single point maximizes the chamber w C0 for w = " + word_to_string(*d, w.word()));
    auto an = chamber_vertex(pts, arays);
    if (an) P.anti[w.word()] = *an;
    else
      P.issues.push_back("no single point maximizes the chamber -w^-1 C0 for w = " +
                         word_to_string(*d, w.word()));
  }
  collect_vertices(P);
  for (const auto& p : pts)
    if (!std::binary_search(P.vertices.begin(), P.vertices.end(), p))
      P.issues.push_back("point " + to_string(p) + " is not selected by any chamber of length <= " +
                         std::to_string(P.L));
  if (P.tits.count(Word{})) P.weight = P.tits[Word{}];
  return P;
}

Word word_from_order(const RootContext& ctx, const ConvexOrderSlice& o) {
  const CartanDatum& d = *ctx.datum;
  Word word;
  for (const auto& beta : o.roots) {
    RootVector r = beta;
    for (int i : word) r = reflect_root(d, i, r);
    int simple = -1;
    for (int i = 0; i < d.rank(); ++i)
      if (r == unit_vector(d.rank(), i)) simple = i;
    if (simple < 0) throw Error("slice is not the inversion order of a reduced word", ErrorKind::validation);
    word.push_back(simple);
  }
  return word;
}

std::vector<RootVector> path_vertices(const RootContext& ctx, const LusztigDatum& d) {
  std::vector<RootVector> out{RootVector(ctx.datum->rank(), 0)};
  std::int64_t im = 0;
  for (auto& [g, p] : d.imaginary) im += partition_size(p);
  for (std::size_t k = d.order.roots.size(); k-- > 0;) {
    RootVector step = ctx.is_delta(d.order.roots[k]) ? scale(ctx.affine->delta, im)
                                                     : scale(d.order.roots[k], d.real[k]);
    out.push_back(add(out.back(), step));
  }
  return out;
}

namespace {

// Reduces a Tits-cone coweight to the dominant chamber; returns w with theta = w theta_dom.
WeylElt reduce_to_dominant(const DatumPtr& d, Coweight theta) {
  Word applied;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 100000) throw Error("coweight is not in the Tits cone");
    int i = -1;
    for (int k = 0; k < d->rank(); ++k)
      if (theta[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    theta = reflect_coweight(*d, i, theta);
    applied.push_back(i);
  }
  return WeylElt::from_word(d, applied);
}

}  // namespace

GGMSPolytope polytope_from_datum(ContextPtr ctx, const LusztigDatum& dat) {
  check_datum(*ctx, dat);
  GGMSPolytope P;
  P.ctx = ctx;
  P.weight = weight_of(*ctx, dat);
  P.partitions = dat.imaginary;
  P.path = path_vertices(*ctx, dat);
  const DatumPtr& d = ctx->datum;
  const std::size_t N = dat.order.roots.size();
  if (!ctx->affine) {
    Word start = word_from_order(*ctx, dat.order);
    WeylElt w0 = longest_element(d);
    auto graph = reduced_words(WeylElt::from_word(d, start));
    std::size_t s0 = std::lower_bound(graph.words.begin(), graph.words.end(), start) - graph.words.begin();
    std::vector<std::optional<LusztigDatum>> per(graph.words.size());
    per[s0] = dat;
    std::vector<std::vector<std::size_t>> adj(graph.words.size());
    for (std::size_t e = 0; e < graph.moves.size(); ++e) adj[graph.moves[e].from].push_back(e);
    std::deque<std::size_t> queue{s0};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto e : adj[u]) {
        const auto& mv = graph.moves[e];
        if (per[mv.to]) continue;
        OrderMove m;
        m.position = mv.position;
        m.label = mv.label == "braid" ? "braidA2" : "commutation";
        m.slice = order_from_word(*ctx, graph.words[mv.to]);
        per[mv.to] = apply_move(*ctx, *per[u], m);
        queue.push_back(mv.to);
      }
    }
    for (std::size_t k = 0; k < graph.words.size(); ++k) {
      auto pv = path_vertices(*ctx, *per[k]);
      const Word& word = graph.words[k];
      for (std::size_t pre = 0; pre <= N; ++pre) {
        Word prefix(word.begin(), word.begin() + pre);
        Word key = WeylElt::from_word(d, prefix).word();
        const RootVector& mu = pv[N - pre];
        auto it = P.tits.find(key);
        if (it == P.tits.end()) P.tits[key] = mu;
        else if (it->second != mu)
          P.issues.push_back("words disagree on the vertex of " + word_to_string(*d, key));
      }
    }
    // mu_u = mu^{u^{-1} w0}
    std::map<Word, RootVector> anti;
    for (const auto& [key, mu] : P.tits) {
      (void)mu;
      WeylElt u = WeylElt::from_word(d, key);
      anti[u.word()] = P.tits[(u.inverse() * w0).word()];
    }
    P.anti = anti;
    P.L = static_cast<int>(N);
    collect_vertices(P);
    return P;
  }
  // affine: only the path is determined without crossing the imaginary wall
  P.partial = true;
  if (!dat.order.theta) {
    P.issues.push_back("slice has no defining coweight; path vertices are unlabeled");
    P.vertices = sorted_unique(P.path);
    return P;
  }
  const Coweight& theta = *dat.order.theta;
  std::vector<Rational> slopes;
  for (const auto& b : dat.order.roots) slopes.push_back(pair(theta, b) / Rational(static_cast<long>(height(b))));
  auto rho = rho_check(*d);
  for (std::size_t j = 0; j <= N; ++j) {
    // terminal section of size j starts at position N - j
    std::size_t p = N - j;
    Rational s;
    if (N == 0) s = 0;
    else if (p == 0) s = slopes.front() - 1;
    else if (p == N) s = slopes.back() + 1;
    else s = (slopes[p - 1] + slopes[p]) / 2;
    Coweight tp = theta;
    for (std::size_t i = 0; i < tp.size(); ++i) tp[i] -= s * rho[i];
    Rational onDelta = pair(tp, ctx->affine->delta);
    if (onDelta > 0) {
      WeylElt w = reduce_to_dominant(d, tp);
      P.tits[w.word()] = P.path[j];
    } else {
      WeylElt v = reduce_to_dominant(d, negate(tp));
      P.anti[v.inverse().word()] = P.path[j];
    }
  }
  P.vertices = sorted_unique(P.path);
  P.issues.push_back("affine polytope from a Lusztig datum: only the vertices along the order are known");
  return P;
}

std::vector<RootVector> maximizers(const GGMSPolytope& P, const Coweight& theta) {
  if (P.vertices.empty()) throw Error("polytope has no vertices");
  Rational best = pair(theta, P.vertices.front());
  for (const auto& v : P.vertices) best = std::max(best, Rational(pair(theta, v)));
  std::vector<RootVector> out;
  for (const auto& v : P.vertices)
    if (pair(theta, v) == best) out.push_back(v);
  return out;
}

Rational support_function(const GGMSPolytope& P, const Coweight& theta) {
  return pair(theta, maximizers(P, theta).front());
}

RootVector vertex_mu(const GGMSPolytope& P, const BiconvexSet& A) {
  const auto& d = P.ctx->datum;
  switch (A.kind) {
    case BiconvexSet::Kind::finite: {
      auto it = P.anti.find(A.w->word());
      if (it == P.anti.end())
        throw Error("vertex_mu: A_w for w = " + word_to_string(*d, A.w->word()) + " is not resolved");
      return it->second;
    }
    case BiconvexSet::Kind::cofinite: {
      auto it = P.tits.find(A.w->word());
      if (it == P.tits.end())
        throw Error("vertex_mu: A^w for w = " + word_to_string(*d, A.w->word()) + " is not resolved");
      return it->second;
    }
    default: break;
  }
  if (P.partial) throw Error("vertex_mu: polytope is partial");
  auto m = maximizers(P, A.theta);
  bool lowest = A.kind == BiconvexSet::Kind::theta_min;
  RootVector best = m.front();
  int ties = 0;
  for (const auto& v : m) {
    if (height(v) == height(best)) continue;
    if (lowest ? height(v) < height(best) : height(v) > height(best)) best = v;
  }
  for (const auto& v : m) ties += height(v) == height(best);
  if (ties != 1) throw Error("vertex_mu: the face of the coweight has no unique extreme vertex");
  return best;
}

std::string classify_codim2(const RootContext& ctx, const Coweight& theta, RootVector* beta1, RootVector* beta2) {
  const CartanDatum& d = *ctx.datum;
  auto fail = [&]() {
    return Error("coweight " + to_string(theta) + " does not cut out a codimension-2 face", ErrorKind::validation);
  };
  std::vector<RootVector> pos;
  if (ctx.affine) {
    const AffineData& a = *ctx.affine;
    Rational onDelta = pair(theta, a.delta);
    if (onDelta == 0) {
      std::vector<std::vector<std::int64_t>> ker;
      for (const auto& c : a.spherical_positive())
        if (pair(theta, a.embed(c)) == 0) ker.push_back(c);
      if (ker.size() != 1) throw fail();
      if (beta1) *beta1 = a.iota(ker.front());
      if (beta2) *beta2 = a.delta;
      return "affineA1";
    }
    for (const auto& c : a.spherical) {
      Rational k = -pair(theta, a.embed(c)) / onDelta;
      if (k.get_den() != 1) continue;
      RootVector b = add(a.embed(c), scale(a.delta, k.get_num().get_si()));
      bool positive = false;
      for (auto x : b)
        if (x != 0) {
          positive = x > 0;
          break;
        }
      if (positive) pos.push_back(b);
    }
  } else {
    for (const auto& b : finite_positive_roots(d))
      if (pair(theta, b) == 0) pos.push_back(b);
  }
  std::sort(pos.begin(), pos.end(), [](const RootVector& x, const RootVector& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return x > y;
  });
  if (pos.size() == 2 && bilinear_form(d, pos[0], pos[1]) == 0) {
    if (beta1) *beta1 = pos[0];
    if (beta2) *beta2 = pos[1];
    return "A1xA1";
  }
  if (pos.size() == 3 && add(pos[0], pos[1]) == pos[2]) {
    if (beta1) *beta1 = pos[0];
    if (beta2) *beta2 = pos[1];
    return "A2";
  }
  throw fail();
}

namespace {

std::vector<RootVector> order_cycle(std::vector<RootVector> pts, const RootVector& b1, const RootVector& b2) {
  if (pts.size() <= 2) return pts;
  struct P2 {
    Rational x, y;
    RootVector v;
  };
  std::vector<P2> q;
  Rational cx = 0, cy = 0;
  for (auto& p : pts) {
    auto c = plane_coords(sub(p, pts.front()), b1, b2);
    if (!c) return pts;
    q.push_back({c->first, c->second, p});
    cx += c->first;
    cy += c->second;
  }
  cx /= static_cast<long>(q.size());
  cy /= static_cast<long>(q.size());
  auto half = [&](const P2& p) {
    Rational dx = p.x - cx, dy = p.y - cy;
    return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
  };
  std::sort(q.begin(), q.end(), [&](const P2& a, const P2& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a.x - cx) * (b.y - cy) - (a.y - cy) * (b.x - cx);
    return cross > 0;
  });
  std::vector<RootVector> out;
  for (auto& p : q) out.push_back(p.v);
  return out;
}

}  // namespace

Face2 extract_2face(const GGMSPolytope& P, const Coweight& theta) {
  Face2 f;
  f.theta = theta;
  f.classification = classify_codim2(*P.ctx, theta, &f.beta1, &f.beta2);
  f.cycle = order_cycle(maximizers(P, theta), f.beta1, f.beta2);
  return f;
}

std::optional<HexagonSides> hexagon_sides(const Face2& f, std::string* why) {
  auto fail = [&](const std::string& m) -> std::optional<HexagonSides> {
    if (why) *why = m;
    return std::nullopt;
  };
  if (f.cycle.empty()) return fail("empty face");
  RootVector bottom = f.cycle.front();
  for (auto& v : f.cycle)
    if (height(v) < height(bottom)) bottom = v;
  std::vector<std::pair<std::int64_t, std::int64_t>> c;
  for (auto& v : f.cycle) {
    auto pc = plane_coords(sub(v, bottom), f.beta1, f.beta2);
    if (!pc || pc->first.get_den() != 1 || pc->second.get_den() != 1) return fail("face is not in the root plane");
    c.emplace_back(pc->first.get_num().get_si(), pc->second.get_num().get_si());
  }
  std::pair<std::int64_t, std::int64_t> top = c.front();
  std::int64_t X = 0, Y = 0, a1 = 0, b2 = 0;
  for (auto& p : c) {
    if (p.first + p.second > top.first + top.second) top = p;
    X = std::max(X, p.first);
    Y = std::max(Y, p.second);
    if (p.second == 0) a1 = std::max(a1, p.first);
    if (p.first == 0) b2 = std::max(b2, p.second);
  }
  HexagonSides h{};
  h.a1 = a1;
  h.a12 = X - a1;
  h.a2 = top.second - h.a12;
  h.b2 = b2;
  h.b12 = Y - b2;
  h.b1 = top.first - h.b12;
  std::set<std::pair<std::int64_t, std::int64_t>> expect{
      {0, 0}, {h.a1, 0}, {h.a1 + h.a12, h.a12}, top, {0, h.b2}, {h.b12, h.b2 + h.b12}};
  std::set<std::pair<std::int64_t, std::int64_t>> got(c.begin(), c.end());
  if (h.a1 < 0 || h.a12 < 0 || h.a2 < 0 || h.b1 < 0 || h.b12 < 0 || h.b2 < 0 || expect != got ||
      top != std::make_pair(h.a1 + h.a12, h.a12 + h.a2) || top != std::make_pair(h.b12 + h.b1, h.b2 + h.b12))
    return fail("face is not a hexagon with edges along beta1, beta1+beta2, beta2");
  return h;
}

int MVReport::count(const std::string& classification, const std::string& status) const {
  int n = 0;
  for (auto& f : faces) n += f.classification == classification && f.status == status;
  return n;
}

namespace {

Partition partition_for(const GGMSPolytope& P, const Coweight& g, bool* known) {
  for (auto& [h, p] : P.partitions)
    if (h == g) {
      *known = true;
      return p;
    }
  *known = false;
  return {};
}

// Checks the imaginary edge of the spherical chamber with the given rays.
void check_imaginary_edge(const GGMSPolytope& P, const std::vector<Coweight>& rays, const std::vector<RootVector>& within,
                          MVReport& rep, std::int64_t* length) {
  const AffineData& a = *P.ctx->affine;
  Coweight th(P.ctx->datum->rank(), Rational(0));
  std::int64_t want = 0;
  bool all_known = true;
  std::string names;
  for (auto& g : rays) {
    th = add(th, g);
    bool known = false;
    want += partition_size(partition_for(P, g, &known));
    all_known = all_known && known;
    names += to_string(g);
  }
  std::vector<RootVector> m;
  {
    Rational best;
    bool first = true;
    for (auto& v : within) {
      Rational x = pair(th, v);
      if (first || x > best) best = x;
      first = false;
    }
    for (auto& v : within)
      if (pair(th, v) == best) m.push_back(v);
  }
  std::sort(m.begin(), m.end(), [](const RootVector& x, const RootVector& y) { return height(x) < height(y); });
  std::int64_t k = 0;
  if (m.size() == 2) {
    RootVector diff = sub(m[1], m[0]);
    std::int64_t q = diff[0] / a.delta[0];
    if (q <= 0 || diff != scale(a.delta, q)) {
      rep.ok = false;
      rep.violations.push_back("imaginary edge of chamber " + names + " is not parallel to delta: " + pts_to_string(m));
      return;
    }
    k = q;
  } else if (m.size() != 1) {
    rep.ok = false;
    rep.violations.push_back("chamber " + names + " selects more than an edge: " + pts_to_string(m));
    return;
  }
  if (length) *length = k;
  if (!P.partitions.empty() && all_known && k != want) {
    rep.ok = false;
    rep.violations.push_back("imaginary edge of chamber " + names + " has length " + std::to_string(k) +
                             " delta but the partitions have total size " + std::to_string(want));
  }
}

}  // namespace

MVReport validate_mv(const GGMSPolytope& P, const MVOptions& opts) {
  MVReport rep;
  const RootContext& ctx = *P.ctx;
  const DatumPtr& d = ctx.datum;
  if (P.partial) {
    rep.ok = false;
    rep.violations.push_back("polytope is partial: the vertex maps are incomplete");
    return rep;
  }
  for (auto& s : P.issues) {
    rep.ok = false;
    rep.violations.push_back(s);
  }
  auto e = P.anti.find(Word{});
  if (e == P.anti.end() || !is_zero(e->second)) {
    rep.ok = false;
    rep.violations.push_back("lowest vertex is not 0");
  }
  // edges between adjacent chambers
  for (const auto& [word, mu] : P.tits) {
    WeylElt w = WeylElt::from_word(d, word);
    for (int j = 0; j < d->rank(); ++j) {
      if (w.right_descent(j)) continue;
      WeylElt ws = w.right_mul(j);
      auto it = P.tits.find(ws.word());
      if (it == P.tits.end()) continue;
      RootVector diff = sub(mu, it->second), root = w.act(unit_vector(d->rank(), j));
      bool ok = false;
      for (std::size_t i = 0; i < root.size(); ++i)
        if (root[i] != 0) {
          std::int64_t n = diff[i] / root[i];
          ok = n >= 0 && diff == scale(root, n);
          break;
        }
      if (!ok) {
        rep.ok = false;
        rep.violations.push_back("edge from chamber " + word_to_string(*d, word) + " across wall " + d->labels[j] +
                                 " is not a nonnegative multiple of " + to_string(root));
      }
    }
  }
  for (const auto& [word, mu] : P.anti) {
    WeylElt x = WeylElt::from_word(d, word);
    for (int j = 0; j < d->rank(); ++j) {
      if (x.left_descent(j)) continue;
      auto it = P.anti.find(x.left_mul(j).word());
      if (it == P.anti.end()) continue;
      RootVector diff = sub(it->second, mu), root = x.inverse().act(unit_vector(d->rank(), j));
      bool ok = false;
      for (std::size_t i = 0; i < root.size(); ++i)
        if (root[i] != 0) {
          std::int64_t n = diff[i] / root[i];
          ok = n >= 0 && diff == scale(root, n);
          break;
        }
      if (!ok) {
        rep.ok = false;
        rep.violations.push_back("anti-side edge at " + word_to_string(*d, word) + " is not a nonnegative multiple of " +
                                 to_string(root));
      }
    }
  }
  // imaginary edges
  if (ctx.affine) {
    const AffineData& a = *ctx.affine;
    for (const auto& u : parabolic_elements(d, a.I0)) {
      std::vector<Coweight> rays;
      for (auto& v : a.varpi) rays.push_back(u.act(v));
      check_imaginary_edge(P, rays, P.vertices, rep, nullptr);
    }
  }
  // 2-faces
  std::set<std::pair<std::string, std::vector<RootVector>>> seen;
  auto om = coordinate_coweights(*d);
  auto check_finite_face = [&](const Coweight& theta, const RootVector& b1, const RootVector& b2, bool a2) {
    Face2 f;
    f.theta = theta;
    f.beta1 = b1;
    f.beta2 = b2;
    f.classification = a2 ? "A2" : "A1xA1";
    auto m = maximizers(P, theta);
    if (!seen.insert({f.classification, m}).second) return;
    f.cycle = order_cycle(m, b1, b2);
    FaceCheck fc{f.classification, "pass", theta, ""};
    if (a2) {
      std::string why;
      auto h = hexagon_sides(f, &why);
      if (!h) {
        fc.status = "fail";
        fc.detail = why;
      } else if (h->b12 != std::min(h->a1, h->a2) || h->a12 != std::min(h->b1, h->b2)) {
        fc.status = "fail";
        fc.detail = "tropical Plucker relation fails: sides (" + std::to_string(h->a1) + "," + std::to_string(h->a12) +
                    "," + std::to_string(h->a2) + ") and (" + std::to_string(h->b2) + "," + std::to_string(h->b12) +
                    "," + std::to_string(h->b1) + ")";
      }
    } else {
      RootVector bottom = m.front();
      for (auto& v : m)
        if (height(v) < height(bottom)) bottom = v;
      std::set<std::pair<Rational, Rational>> cs;
      bool inplane = true;
      Rational A = 0, B = 0;
      for (auto& v : m) {
        auto c = plane_coords(sub(v, bottom), b1, b2);
        if (!c) {
          inplane = false;
          break;
        }
        cs.insert(*c);
        A = std::max(A, c->first);
        B = std::max(B, c->second);
      }
      std::set<std::pair<Rational, Rational>> want{{0, 0}, {A, 0}, {0, B}, {A, B}};
      if (!inplane || cs != want) {
        fc.status = "fail";
        fc.detail = "A1xA1 face is not a parallelogram";
      }
    }
    if (fc.status == "fail" && !opts.strict && m.size() <= 2) {
      // a point or segment is not a 2-face; only the strict vertex-map reading constrains it
      fc.status = "degenerate";
      rep.notes.push_back("degenerate " + fc.classification + " face at " + to_string(theta) + ": " + fc.detail);
    }
    if (fc.status == "fail") {
      rep.ok = false;
      rep.violations.push_back(fc.classification + " face at " + to_string(theta) + ": " + fc.detail);
    }
    rep.faces.push_back(fc);
  };
  std::vector<WeylElt> elems;
  for (auto& [word, mu] : P.tits) elems.push_back(WeylElt::from_word(d, word));
  for (int i = 0; i < d->rank(); ++i)
    for (int j = i + 1; j < d->rank(); ++j) {
      int aij = d->cartan[i][j];
      if (aij != 0 && aij != -1) continue;
      if (ctx.affine && d->rank() == 2) continue;
      Coweight base(d->rank(), Rational(0));
      for (int l = 0; l < d->rank(); ++l)
        if (l != i && l != j) base = add(base, om[l]);
      std::set<Word> reps;
      for (const auto& w0 : elems) {
        WeylElt w = w0;
        while (w.right_descent(i) || w.right_descent(j)) w = w.right_mul(w.right_descent(i) ? i : j);
        if (!reps.insert(w.word()).second) continue;
        Coweight th = w.act(base);
        RootVector b1 = w.act(unit_vector(d->rank(), i)), b2 = w.act(unit_vector(d->rank(), j));
        check_finite_face(th, b1, b2, aij == -1);
        check_finite_face(negate(th), b1, b2, aij == -1);
      }
    }
  if (ctx.affine) {
    const AffineData& a = *ctx.affine;
    for (const auto& u : parabolic_elements(d, a.I0))
      for (std::size_t jj = 0; jj < a.I0.size(); ++jj) {
        Coweight th(d->rank(), Rational(0));
        for (std::size_t l = 0; l < a.I0.size(); ++l)
          if (l != jj) th = add(th, u.act(a.varpi[l]));
        auto m = maximizers(P, th);
        if (!seen.insert({"affineA1", m}).second) continue;
        FaceCheck fc{"affineA1", "unchecked-open", th, ""};
        std::size_t before = rep.violations.size();
        WeylElt us = u.right_mul(a.I0[jj]);
        for (const WeylElt* side : std::initializer_list<const WeylElt*>{&u, &us}) {
          std::vector<Coweight> rays;
          for (auto& v : a.varpi) rays.push_back(side->act(v));
          std::int64_t len = 0;
          check_imaginary_edge(P, rays, m, rep, &len);
          fc.detail += (fc.detail.empty() ? "" : ", ") + std::string("imaginary edge ") + std::to_string(len) + " delta";
        }
        if (rep.violations.size() != before) fc.status = "fail";
        rep.faces.push_back(fc);
      }
  }
  return rep;
}

RootVector tits_vertex(const GGMSPolytope& P, const WeylElt& w) {
  auto it = P.tits.find(w.word());
  if (it != P.tits.end()) return it->second;
  std::vector<Coweight> rays;
  for (auto& o : coordinate_coweights(*P.ctx->datum)) rays.push_back(w.act(o));
  auto v = chamber_vertex(P.vertices, rays);
  if (!v) throw Error("no vertex maximizes w C0 for w = " + word_to_string(*P.ctx->datum, w.word()));
  return *v;
}

RootVector anti_vertex(const GGMSPolytope& P, const WeylElt& w) {
  auto it = P.anti.find(w.word());
  if (it != P.anti.end()) return it->second;
  std::vector<Coweight> rays;
  WeylElt wi = w.inverse();
  for (auto& o : coordinate_coweights(*P.ctx->datum)) rays.push_back(negate(wi.act(o)));
  auto v = chamber_vertex(P.vertices, rays);
  if (!v) throw Error("no vertex maximizes -w^-1 C0 for w = " + word_to_string(*P.ctx->datum, w.word()));
  return *v;
}

GGMSPolytope minkowski_sum(const GGMSPolytope& P, const GGMSPolytope& Q) {
  if (P.ctx->datum->cartan != Q.ctx->datum->cartan) throw Error("minkowski_sum: different data");
  if (P.partial || Q.partial) throw Error("minkowski_sum: partial polytope");
  GGMSPolytope S;
  S.ctx = P.ctx;
  S.weight = add(P.weight, Q.weight);
  S.L = std::max({P.L, Q.L, stabilization_length(*S.ctx, height(S.weight))});
  for (const auto& w : elements_up_to(P.ctx->datum, S.L)) {
    S.tits[w.word()] = add(tits_vertex(P, w), tits_vertex(Q, w));
    S.anti[w.word()] = add(anti_vertex(P, w), anti_vertex(Q, w));
  }
  // partitions of a sum are known only when both summands carry them
  if (P.partitions.empty() || Q.partitions.empty()) {
    collect_vertices(S);
    return S;
  }
  std::vector<std::pair<Coweight, Partition>> parts = P.partitions;
  for (auto& [g, p] : Q.partitions) {
    bool merged = false;
    for (auto& [h, q] : parts)
      if (h == g) {
        q.insert(q.end(), p.begin(), p.end());
        std::sort(q.rbegin(), q.rend());
        merged = true;
      }
    if (!merged) parts.emplace_back(g, p);
  }
  S.partitions = parts;
  collect_vertices(S);
  return S;
}

GGMSPolytope dual_reflect(const GGMSPolytope& P) {
  if (P.partial) throw Error("dual_reflect: partial polytope");
  GGMSPolytope R;
  R.ctx = P.ctx;
  R.L = P.L;
  R.weight = P.weight;
  const DatumPtr& d = P.ctx->datum;
  for (auto& [w, x] : P.anti) R.tits[inverse_word(d, w)] = sub(P.weight, x);
  for (auto& [w, x] : P.tits) R.anti[inverse_word(d, w)] = sub(P.weight, x);
  for (auto& [g, p] : P.partitions) R.partitions.emplace_back(negate(g), p);
  for (auto it = P.path.rbegin(); it != P.path.rend(); ++it) R.path.push_back(sub(P.weight, *it));
  collect_vertices(R);
  return R;
}

bool same_vertex_maps(const GGMSPolytope& P, const GGMSPolytope& Q) {
  if (P.ctx->datum->cartan != Q.ctx->datum->cartan) return false;
  if (P.L == Q.L) {
    if (P.tits != Q.tits || P.anti != Q.anti) return false;
  } else {
    for (const auto& w : elements_up_to(P.ctx->datum, std::max(P.L, Q.L)))
      if (tits_vertex(P, w) != tits_vertex(Q, w) || anti_vertex(P, w) != anti_vertex(Q, w)) return false;
  }
  auto norm = [](std::vector<std::pair<Coweight, Partition>> v) {
    std::vector<std::pair<std::string, Partition>> out;
    for (auto& [g, p] : v)
      if (!p.empty()) out.emplace_back(to_string(g), p);
    std::sort(out.begin(), out.end());
    return out;
  };
  return norm(P.partitions) == norm(Q.partitions);
}

}  // namespace mvkit
