#include "mvkit/biconvex.hpp"

#include <algorithm>
#include <map>

namespace mvkit {

RootContext::RootContext(DatumPtr d) : datum(std::move(d)) {
  if (datum->kind == Kind::affine) affine = default_affine_data(datum);
  else if (datum->kind != Kind::finite)
    throw Error("only finite and affine data are supported");
}

RootContext::RootContext(DatumPtr d, AffineData a) : datum(std::move(d)), affine(std::move(a)) {}

bool RootContext::is_delta(const RootVector& v) const { return affine && v == affine->delta; }

bool RootContext::is_imaginary(const RootVector& v) const {
  if (!affine || is_zero(v)) return false;
  const auto& d = affine->delta;
  std::int64_t k = v[0] / d[0];
  if (k <= 0) return false;
  return v == scale(d, k);
}

bool RootContext::is_positive_root(const RootVector& v) const {
  if (is_zero(v) || !is_nonnegative(v)) return false;
  if (is_imaginary(v)) return true;
  return bilinear_form(*datum, v, v) == 2;
}

namespace {
void sort_by_height(std::vector<RootVector>& v) {
  std::stable_sort(v.begin(), v.end(), [](const RootVector& x, const RootVector& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return x > y;
  });
}
}  // namespace

std::vector<RootVector> RootContext::E(std::int64_t H) const {
  std::vector<RootVector> out;
  if (affine) {
    out = positive_real_roots(*affine, H);
    if (height(affine->delta) <= H) out.push_back(affine->delta);
  } else {
    out = positive_real_roots(*datum, H);
  }
  sort_by_height(out);
  return out;
}

std::vector<RootVector> RootContext::E_full(std::int64_t H) const {
  std::vector<RootVector> out = E(H);
  if (affine) {
    const std::int64_t hd = height(affine->delta);
    for (std::int64_t k = 2; k * hd <= H; ++k) out.push_back(scale(affine->delta, k));
    sort_by_height(out);
  }
  return out;
}

BiconvexSet BiconvexSet::finite_of(const WeylElt& w) {
  BiconvexSet s;
  s.kind = Kind::finite;
  s.w = w;
  return s;
}
BiconvexSet BiconvexSet::cofinite_of(const WeylElt& w) {
  BiconvexSet s;
  s.kind = Kind::cofinite;
  s.w = w;
  return s;
}
BiconvexSet BiconvexSet::min_of(const Coweight& theta) {
  BiconvexSet s;
  s.kind = Kind::theta_min;
  s.theta = theta;
  return s;
}
BiconvexSet BiconvexSet::max_of(const Coweight& theta) {
  BiconvexSet s;
  s.kind = Kind::theta_max;
  s.theta = theta;
  return s;
}

namespace {
bool positive_vector(const RootVector& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return false;
}
}  // namespace

bool BiconvexSet::contains(const RootContext& ctx, const RootVector& alpha) const {
  if (!ctx.is_positive_root(alpha)) throw Error("membership: not a positive root: " + to_string(alpha));
  switch (kind) {
    case Kind::finite: return !positive_vector(w->act(alpha));
    case Kind::cofinite: return positive_vector(w->inverse().act(alpha));
    case Kind::theta_min: return pair(theta, alpha) > 0;
    case Kind::theta_max: return pair(theta, alpha) >= 0;
  }
  return false;
}

std::vector<RootVector> BiconvexSet::truncate(const RootContext& ctx, std::int64_t H) const {
  std::vector<RootVector> out;
  for (const auto& r : ctx.E_full(H))
    if (contains(ctx, r)) out.push_back(r);
  return out;
}

bool validate_biconvex_truncated(const RootContext& ctx, const RootSet& S, std::int64_t H,
                                 std::string* why) {
  auto all = ctx.E_full(H);
  std::set<RootVector> universe(all.begin(), all.end());
  for (const auto& s : S)
    if (!universe.count(s)) {
      if (why) *why = "element outside E'_H: " + to_string(s);
      return false;
    }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      RootVector sum = add(all[a], all[b]);
      if (!universe.count(sum)) continue;
      bool ia = S.count(all[a]), ib = S.count(all[b]), is = S.count(sum);
      if (ia && ib && !is) {
        if (why) *why = "not closed: " + to_string(all[a]) + " + " + to_string(all[b]);
        return false;
      }
      if (!ia && !ib && is) {
        if (why) *why = "complement not closed: " + to_string(all[a]) + " + " + to_string(all[b]);
        return false;
      }
    }
  return true;
}

std::optional<std::size_t> ConvexOrderSlice::delta_position(const RootContext& ctx) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (ctx.is_delta(roots[k])) return k;
  return std::nullopt;
}

std::optional<std::size_t> ConvexOrderSlice::position(const RootVector& r) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == r) return k;
  return std::nullopt;
}

ConvexOrderSlice order_from_coweight(const RootContext& ctx, const Coweight& theta, std::int64_t H) {
  if (static_cast<int>(theta.size()) != ctx.datum->rank())
    throw Error("coweight dimension mismatch", ErrorKind::usage);
  struct Entry {
    Rational slope;
    RootVector root;
  };
  std::vector<Entry> es;
  for (const auto& r : ctx.E(H)) es.push_back({pair(theta, r) / Rational(static_cast<long>(height(r))), r});
  std::stable_sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) { return a.slope < b.slope; });
  for (std::size_t k = 1; k < es.size(); ++k)
    if (es[k].slope == es[k - 1].slope)
      throw Error("coweight is not generic on E_" + std::to_string(H) + ": " + to_string(es[k - 1].root) +
                      " and " + to_string(es[k].root) + " have equal slope " + es[k].slope.get_str(),
                  ErrorKind::validation);
  ConvexOrderSlice o;
  o.H = H;
  o.theta = theta;
  for (auto& e : es) o.roots.push_back(e.root);
  return o;
}

ConvexOrderSlice order_from_word(const RootContext& ctx, const Word& word) {
  if (ctx.is_affine()) throw Error("order_from_word: only finite type words describe a full order");
  if (!is_reduced_word(*ctx.datum, word)) throw Error("order_from_word: word is not reduced", ErrorKind::validation);
  WeylElt w = WeylElt::from_word(ctx.datum, word);
  if (w != longest_element(ctx.datum))
    throw Error("order_from_word: word is not a reduced word of the longest element", ErrorKind::validation);
  ConvexOrderSlice o;
  const CartanDatum& d = *ctx.datum;
  for (std::size_t k = 0; k < word.size(); ++k) {
    RootVector r = unit_vector(d.rank(), word[k]);
    for (std::size_t t = k; t-- > 0;) r = reflect_root(d, word[t], r);
    o.roots.push_back(r);
    o.H = std::max(o.H, height(r));
  }
  return o;
}

bool validate_convex_order(const RootContext& ctx, const ConvexOrderSlice& o, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  auto expected = ctx.E(o.H);
  std::set<RootVector> want(expected.begin(), expected.end());
  std::map<RootVector, std::size_t> pos;
  for (std::size_t k = 0; k < o.roots.size(); ++k) {
    if (!want.count(o.roots[k])) return fail("entry not in E_H: " + to_string(o.roots[k]));
    if (!pos.emplace(o.roots[k], k).second) return fail("repeated entry: " + to_string(o.roots[k]));
  }
  if (pos.size() != want.size()) return fail("slice does not cover E_H");
  auto full = ctx.E_full(o.H);
  auto position_of = [&](const RootVector& r) -> std::optional<std::size_t> {
    auto it = pos.find(r);
    if (it != pos.end()) return it->second;
    if (ctx.is_imaginary(r)) return o.delta_position(ctx);
    return std::nullopt;
  };
  for (std::size_t a = 0; a < full.size(); ++a)
    for (std::size_t b = a + 1; b < full.size(); ++b) {
      RootVector sum = add(full[a], full[b]);
      if (height(sum) > o.H || !ctx.is_positive_root(sum)) continue;
      auto pa = position_of(full[a]), pb = position_of(full[b]), ps = position_of(sum);
      if (!pa || !pb || !ps) continue;
      std::size_t lo = std::min(*pa, *pb), hi = std::max(*pa, *pb);
      if (*ps < lo || *ps > hi)
        return fail("betweenness fails for " + to_string(full[a]) + ", " + to_string(full[b]));
    }
  for (std::size_t cut = 0; cut <= o.roots.size(); ++cut) {
    RootSet S;
    for (std::size_t k = cut; k < o.roots.size(); ++k) {
      if (ctx.is_delta(o.roots[k])) {
        for (const auto& r : full)
          if (ctx.is_imaginary(r)) S.insert(r);
      } else {
        S.insert(o.roots[k]);
      }
    }
    std::string inner;
    if (!validate_biconvex_truncated(ctx, S, o.H, &inner))
      return fail("terminal section at " + std::to_string(cut) + " is not biconvex: " + inner);
  }
  return true;
}

OrderMove order_move(const RootContext& ctx, const ConvexOrderSlice& o, std::size_t p) {
  if (p + 1 >= o.roots.size()) throw Error("order_move: position out of range", ErrorKind::usage);
  const RootVector& a = o.roots[p];
  const RootVector& b = o.roots[p + 1];
  auto wall = [&]() {
    return Error("order_move: move across the imaginary wall at position " + std::to_string(p) +
                 "; the exchange rule for this 2-face is not available");
  };
  if (ctx.is_delta(a) || ctx.is_delta(b) || ctx.is_imaginary(add(a, b))) throw wall();
  OrderMove m;
  m.position = p;
  m.slice = o;
  std::int64_t ip = bilinear_form(*ctx.datum, a, b);
  if (ip == 0) {
    std::swap(m.slice.roots[p], m.slice.roots[p + 1]);
    m.label = "commutation";
    m.slice.theta.reset();
    return m;
  }
  if (p + 2 < o.roots.size()) {
    const RootVector& c = o.roots[p + 2];
    if (ctx.is_delta(c) || ctx.is_imaginary(add(a, c))) throw wall();
    if (bilinear_form(*ctx.datum, a, c) == -1 && add(a, c) == b) {
      std::swap(m.slice.roots[p], m.slice.roots[p + 2]);
      m.label = "braidA2";
      m.slice.theta.reset();
      return m;
    }
  }
  throw Error("order_move: no commutation pair or A2 triple at position " + std::to_string(p),
              ErrorKind::validation);
}

std::vector<OrderMove> order_moves(const RootContext& ctx, const ConvexOrderSlice& o) {
  std::vector<OrderMove> out;
  for (std::size_t p = 0; p + 1 < o.roots.size(); ++p) {
    try {
      out.push_back(order_move(ctx, o, p));
    } catch (const Error&) {
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> positive_system_above_delta(const RootContext& ctx,
                                                                   const ConvexOrderSlice& o) {
  if (!ctx.affine) throw Error("positive_system_above_delta: datum is not affine");
  const AffineData& a = *ctx.affine;
  for (const auto& c : a.spherical)
    if (height(a.iota(c)) > o.H)
      throw Error("positive_system_above_delta: height bound " + std::to_string(o.H) +
                  " does not contain every minimal lift");
  auto dp = o.delta_position(ctx);
  if (!dp) throw Error("positive_system_above_delta: slice has no delta entry");
  std::set<std::vector<std::int64_t>> X;
  for (std::size_t k = *dp + 1; k < o.roots.size(); ++k) X.insert(a.pi(o.roots[k]));
  std::set<std::vector<std::int64_t>> phi(a.spherical.begin(), a.spherical.end());
  for (const auto& c : X) {
    auto m = c;
    for (auto& x : m) x = -x;
    if (X.count(m)) throw Error("positive_system_above_delta: X meets -X", ErrorKind::validation);
  }
  if (X.size() * 2 != phi.size())
    throw Error("positive_system_above_delta: X and -X do not cover the spherical roots",
                ErrorKind::validation);
  for (const auto& c1 : X)
    for (const auto& c2 : X) {
      std::vector<std::int64_t> s(c1.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = c1[i] + c2[i];
      if (phi.count(s) && !X.count(s))
        throw Error("positive_system_above_delta: X is not closed", ErrorKind::validation);
    }
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& c : a.spherical)
    if (X.count(c)) out.push_back(c);
  return out;
}

std::vector<Coweight> chamber_coweights(const AffineData& a,
                                        const std::vector<std::vector<std::int64_t>>& X) {
  std::vector<Coweight> out;
  for (const auto& g : spherical_coweights(a)) {
    bool ok = true;
    for (const auto& c : X)
      if (pair(g, a.embed(c)) < 0) ok = false;
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace mvkit
