#include "mvkit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace mvkit {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::finite: return "finite";
    case Kind::affine: return "affine";
    default: return "other";
  }
}

std::string root_class_name(RootClass c) {
  switch (c) {
    case RootClass::real: return "real";
    case RootClass::imaginary: return "imaginary";
    default: return "not_a_root";
  }
}

int CartanDatum::index_of(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels[i] == label) return i;
  throw Error("unknown node: " + label, ErrorKind::usage);
}

namespace {

// Inertia of a symmetric integer matrix by exact symmetric elimination.
// Returns {psd, number of zero pivots}.
std::pair<bool, int> psd_and_nullity(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  int zeros = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int k = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) { k = i; break; }
    if (k < 0) {
      // every remaining diagonal entry vanishes; PSD forces the remaining block to vanish
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a[i][j] != 0) return {false, 0};
      for (int i = 0; i < n; ++i) zeros += done[i] ? 0 : 1;
      return {true, zeros};
    }
    if (a[k][k] < 0) return {false, 0};
    done[k] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i] || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (int j = 0; j < n; ++j)
        if (!done[j]) a[i][j] -= f * a[k][j];
    }
  }
  return {true, zeros};
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (int i = 0; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

Kind classify_matrix(const std::vector<std::vector<int>>& c,
                     const std::vector<std::pair<int, int>>& edges) {
  auto [psd, nullity] = psd_and_nullity(c);
  if (psd && nullity == 0) return Kind::finite;
  if (psd && nullity == 1 && connected(static_cast<int>(c.size()), edges)) return Kind::affine;
  return Kind::other;
}

std::vector<std::vector<int>> sub_cartan(const CartanDatum& d, const std::vector<int>& idx) {
  std::vector<std::vector<int>> c(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) c[i][j] = d.cartan[idx[i]][idx[j]];
  return c;
}

std::vector<std::pair<int, int>> sub_edges(const CartanDatum& d, const std::vector<int>& idx) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : d.edges)
    if (pos.count(u) && pos.count(v)) out.emplace_back(pos[u], pos[v]);
  return out;
}

// Positive roots of a finite-type symmetric Cartan matrix (simply laced).
std::vector<std::vector<std::int64_t>> finite_roots_of(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<std::int64_t>> roots;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    roots.push_back(b);
    for (int i = 0; i < n; ++i) {
      std::int64_t ip = 0;
      for (int j = 0; j < n; ++j) ip += b[j] * c[j][i];
      if (ip != -1) continue;
      auto nb = b;
      nb[i] += 1;
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    std::int64_t hx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    std::int64_t hy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    if (hx != hy) return hx < hy;
    return x > y;
  });
  return roots;
}

}  // namespace

DatumPtr make_datum(const std::vector<std::string>& labels,
                    const std::vector<std::pair<int, int>>& edges, bool numeric_labels,
                    std::optional<Kind> kind_hint) {
  auto d = std::make_shared<CartanDatum>();
  d->labels = labels;
  d->numeric_labels = numeric_labels;
  d->edges = edges;
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error("datum has no nodes", ErrorKind::validation);
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (static_cast<int>(uniq.size()) != n) throw Error("duplicate node ids", ErrorKind::validation);
  d->cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) d->cartan[i][i] = 2;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range", ErrorKind::validation);
    if (u == v) throw Error("loops are not allowed", ErrorKind::validation);
    d->cartan[u][v] -= 1;
    d->cartan[v][u] -= 1;
  }
  d->kind = classify_matrix(d->cartan, edges);
  if (kind_hint && *kind_hint != d->kind)
    throw Error("kind_hint " + kind_name(*kind_hint) + " contradicts computed kind " +
                    kind_name(d->kind),
                ErrorKind::validation);
  return d;
}

DatumPtr datum_from_type(const std::string& type_in) {
  std::string t = type_in;
  bool affine = false;
  auto strip = [&](const std::string& s) {
    if (t.size() >= s.size() && t.compare(0, s.size(), s) == 0) {
      t = t.substr(s.size());
      return true;
    }
    if (t.size() >= s.size() && t.compare(t.size() - s.size(), s.size(), s) == 0) {
      t = t.substr(0, t.size() - s.size());
      return true;
    }
    return false;
  };
  if (strip("~") || strip("\xC3\x83") || strip("aff")) affine = true;
  if (!affine && t.size() > 1 && t[1] == '~') {
    t.erase(1, 1);
    affine = true;
  }
  auto bad = [&]() -> DatumPtr { throw Error("unknown type: " + type_in, ErrorKind::usage); };
  if (t == "A1xA1" && !affine) return make_datum({"1", "2"}, {}, true);
  if (t.size() < 2) return bad();
  char letter = t[0];
  int n = 0;
  try {
    n = std::stoi(t.substr(1));
  } catch (...) {
    return bad();
  }
  std::vector<std::pair<int, int>> e;
  std::vector<std::string> labels;
  if (!affine) {
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    // edges use indices into labels (label k at index k-1)
    auto E = [&](int a, int b) { e.emplace_back(a - 1, b - 1); };
    if (letter == 'A' && n >= 1) {
      for (int i = 1; i < n; ++i) E(i, i + 1);
    } else if (letter == 'D' && n >= 4) {
      for (int i = 1; i < n - 1; ++i) E(i, i + 1);
      E(n - 2, n);
    } else if (letter == 'E' && n >= 6 && n <= 8) {
      E(1, 3); E(3, 4); E(4, 5); E(5, 6); E(2, 4);
      if (n >= 7) E(6, 7);
      if (n >= 8) E(7, 8);
    } else {
      return bad();
    }
  } else {
    for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
    auto E = [&](int a, int b) { e.emplace_back(a, b); };
    if (letter == 'A' && n == 1) {
      E(0, 1); E(0, 1);
    } else if (letter == 'A' && n >= 2) {
      for (int i = 0; i < n; ++i) E(i, i + 1);
      E(n, 0);
    } else if (letter == 'D' && n >= 4) {
      E(0, 2); E(1, 2);
      for (int i = 2; i < n - 1; ++i) E(i, i + 1);
      E(n - 2, n);
    } else if (letter == 'E' && n >= 6 && n <= 8) {
      E(1, 3); E(3, 4); E(4, 5); E(5, 6); E(2, 4);
      if (n >= 7) E(6, 7);
      if (n >= 8) E(7, 8);
      if (n == 6) E(0, 2);
      if (n == 7) E(0, 1);
      if (n == 8) E(0, 8);
    } else {
      return bad();
    }
  }
  return make_datum(labels, e, true);
}

std::int64_t bilinear_form(const CartanDatum& d, const RootVector& x, const RootVector& y) {
  const int n = d.rank();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw Error("bilinear_form: dimension mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += x[i] * d.cartan[i][j] * y[j];
  }
  return s;
}

RootClass classify_root(const CartanDatum& d, const RootVector& nu) {
  if (d.kind == Kind::other)
    throw Error("root classification is only implemented for finite and affine types");
  if (static_cast<int>(nu.size()) != d.rank()) throw Error("classify_root: dimension mismatch");
  if (is_zero(nu)) throw Error("classify_root: zero vector");
  std::int64_t q = bilinear_form(d, nu, nu);
  if (q == 2) return RootClass::real;
  if (d.kind == Kind::affine && q == 0) {
    // the radical of the form on the root lattice is Z delta
    auto a = default_affine_data(std::make_shared<CartanDatum>(d));
    std::int64_t k = 0;
    for (int i = 0; i < d.rank(); ++i) {
      if (nu[i] % a.delta[i] != 0) return RootClass::not_a_root;
      std::int64_t ki = nu[i] / a.delta[i];
      if (i == 0) k = ki;
      else if (ki != k) return RootClass::not_a_root;
    }
    return RootClass::imaginary;
  }
  return RootClass::not_a_root;
}

std::vector<std::int64_t> AffineData::pi(const RootVector& v) const {
  std::vector<std::int64_t> c;
  c.reserve(I0.size());
  const std::int64_t v0 = v[extending];
  for (int j : I0) c.push_back(v[j] - v0 * delta[j]);
  return c;
}

RootVector AffineData::embed(const std::vector<std::int64_t>& c) const {
  RootVector v(datum->rank(), 0);
  for (std::size_t k = 0; k < I0.size(); ++k) v[I0[k]] = c[k];
  return v;
}

RootVector AffineData::iota(const std::vector<std::int64_t>& c) const {
  RootVector v = embed(c);
  bool positive = false;
  for (auto x : c)
    if (x != 0) {
      positive = x > 0;
      break;
    }
  if (!positive) v = add(v, delta);
  return v;
}

std::vector<std::vector<std::int64_t>> AffineData::spherical_positive() const {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& c : spherical) {
    bool pos = true;
    for (auto x : c)
      if (x < 0) pos = false;
    if (pos) out.push_back(c);
  }
  return out;
}

AffineData affine_data(DatumPtr d, int extending_node) {
  if (d->kind != Kind::affine) throw Error("affine_data: datum is not of affine type");
  const int n = d->rank();
  if (extending_node < 0 || extending_node >= n) throw Error("affine_data: node out of range");
  // primitive integer kernel vector by exact elimination
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = d->cartan[i][j];
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (int j = 0; j < n; ++j) a[row][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivcol.push_back(col);
    ++row;
  }
  if (n - static_cast<int>(pivcol.size()) != 1) throw Error("affine_data: kernel dimension is not 1");
  int freecol = -1;
  for (int c = 0; c < n; ++c)
    if (std::find(pivcol.begin(), pivcol.end(), c) == pivcol.end()) freecol = c;
  std::vector<Rational> k(n, 0);
  k[freecol] = 1;
  for (std::size_t r = 0; r < pivcol.size(); ++r) k[pivcol[r]] = -a[r][freecol];
  mpz_class den = 1;
  for (auto& x : k) den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpz_class> z(n);
  mpz_class g = 0;
  for (int i = 0; i < n; ++i) {
    Rational t = k[i] * Rational(den);
    z[i] = t.get_num();
    g = gcd(g, z[i]);
  }
  AffineData out;
  out.datum = d;
  out.delta.resize(n);
  int sign = (z[0] / g) < 0 ? -1 : 1;
  for (int i = 0; i < n; ++i) {
    mpz_class v = z[i] / g * sign;
    out.delta[i] = v.get_si();
    if (out.delta[i] <= 0) throw Error("affine_data: kernel vector is not positive");
  }
  if (out.delta[extending_node] != 1) throw Error("affine_data: node is not extending");
  for (int i = 0; i < n; ++i)
    if (i != extending_node) out.I0.push_back(i);
  auto sc = sub_cartan(*d, out.I0);
  if (classify_matrix(sc, sub_edges(*d, out.I0)) != Kind::finite)
    throw Error("affine_data: removing the node does not give a finite type");
  out.extending = extending_node;
  out.r = static_cast<int>(out.I0.size());
  for (std::size_t k0 = 0; k0 < out.I0.size(); ++k0) {
    Coweight w(n, Rational(0));
    w[out.I0[k0]] = 1;
    w[extending_node] = -Rational(static_cast<long>(out.delta[out.I0[k0]]));
    out.varpi.push_back(w);
  }
  auto pos = finite_roots_of(sc);
  for (auto& c : pos) out.spherical.push_back(c);
  for (auto& c : pos) {
    auto m = c;
    for (auto& x : m) x = -x;
    out.spherical.push_back(m);
  }
  return out;
}

AffineData default_affine_data(DatumPtr d) {
  if (d->kind != Kind::affine) throw Error("datum is not of affine type");
  for (int i = 0; i < d->rank(); ++i) {
    try {
      return affine_data(d, i);
    } catch (const Error&) {
    }
  }
  throw Error("no extending node found");
}

Coweight reflect_coweight(const CartanDatum& d, int i, const Coweight& theta) {
  Coweight r(theta);
  const Rational ti = theta[i];
  if (ti == 0) return r;
  for (int j = 0; j < d.rank(); ++j)
    if (d.cartan[i][j] != 0) r[j] -= ti * d.cartan[i][j];
  return r;
}

RootVector reflect_root(const CartanDatum& d, int i, const RootVector& x) {
  std::int64_t ip = 0;
  for (int j = 0; j < d.rank(); ++j) ip += x[j] * d.cartan[j][i];
  RootVector r(x);
  r[i] -= ip;
  return r;
}

Coweight fundamental_coweight(const CartanDatum& d, int i) {
  Coweight c(d.rank(), Rational(0));
  c[i] = 1;
  return c;
}

Coweight rho_check(const CartanDatum& d) { return Coweight(d.rank(), Rational(1)); }

std::vector<Coweight> spherical_coweights(const AffineData& a) {
  const CartanDatum& d = *a.datum;
  std::vector<Coweight> out;
  std::set<std::vector<std::string>> seen;
  auto key = [](const Coweight& c) {
    std::vector<std::string> k;
    for (auto& x : c) k.push_back(x.get_str());
    return k;
  };
  for (const auto& w : a.varpi) {
    std::deque<Coweight> q{w};
    seen.insert(key(w));
    while (!q.empty()) {
      Coweight c = q.front();
      q.pop_front();
      out.push_back(c);
      for (int j : a.I0) {
        Coweight nc = reflect_coweight(d, j, c);
        if (seen.insert(key(nc)).second) q.push_back(nc);
      }
    }
  }
  return out;
}

Coweight orientation_coweight(const AffineData& a,
                              const std::vector<std::pair<int, int>>& orientation) {
  const CartanDatum& d = *a.datum;
  const int n = d.rank();
  std::multiset<std::pair<int, int>> pool;
  for (auto [u, v] : d.edges) pool.insert({std::min(u, v), std::max(u, v)});
  for (auto [s, t] : orientation) {
    auto it = pool.find({std::min(s, t), std::max(s, t)});
    if (it == pool.end()) throw Error("orientation: arrow does not match an unused edge");
    pool.erase(it);
  }
  if (!pool.empty()) throw Error("orientation: incomplete, some edges are not oriented");
  // acyclicity by repeated removal of sources
  std::vector<int> indeg(n, 0);
  for (auto [s, t] : orientation) indeg[t]++;
  std::vector<bool> removed(n, false);
  for (int round = 0; round < n; ++round) {
    int src = -1;
    for (int i = 0; i < n; ++i)
      if (!removed[i] && indeg[i] == 0) { src = i; break; }
    if (src < 0) throw Error("orientation: cyclic orientation (the coweight would vanish)");
    removed[src] = true;
    for (auto [s, t] : orientation)
      if (s == src) indeg[t]--;
  }
  Coweight g(n, Rational(0));
  for (int j = 0; j < n; ++j) g[j] = static_cast<long>(a.delta[j]);
  for (auto [s, t] : orientation) g[t] -= static_cast<long>(a.delta[s]);
  return g;
}

std::vector<std::vector<std::pair<int, int>>> acyclic_orientations(const CartanDatum& d) {
  std::vector<std::vector<std::pair<int, int>>> out;
  const std::size_t m = d.edges.size();
  if (m > 20) throw Error("acyclic_orientations: too many edges");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::pair<int, int>> o;
    for (std::size_t k = 0; k < m; ++k) {
      auto [u, v] = d.edges[k];
      if (mask >> k & 1) o.emplace_back(v, u);
      else o.emplace_back(u, v);
    }
    // acyclic test
    const int n = d.rank();
    std::vector<int> indeg(n, 0);
    for (auto [s, t] : o) indeg[t]++;
    std::vector<bool> removed(n, false);
    bool ok = true;
    for (int round = 0; round < n && ok; ++round) {
      int src = -1;
      for (int i = 0; i < n; ++i)
        if (!removed[i] && indeg[i] == 0) { src = i; break; }
      if (src < 0) { ok = false; break; }
      removed[src] = true;
      for (auto [s, t] : o)
        if (s == src) indeg[t]--;
    }
    if (ok) out.push_back(o);
  }
  return out;
}

std::vector<RootVector> finite_positive_roots(const CartanDatum& d) {
  if (d.kind != Kind::finite) throw Error("finite_positive_roots: datum is not of finite type");
  auto r = finite_roots_of(d.cartan);
  return std::vector<RootVector>(r.begin(), r.end());
}

std::vector<RootVector> positive_real_roots(const AffineData& a, std::int64_t H) {
  std::vector<RootVector> out;
  const std::int64_t hd = height(a.delta);
  for (const auto& c : a.spherical) {
    RootVector b = a.iota(c);
    while (height(b) <= H) {
      out.push_back(b);
      b = add(b, a.delta);
    }
  }
  (void)hd;
  std::stable_sort(out.begin(), out.end(), [](const RootVector& x, const RootVector& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return x > y;
  });
  return out;
}

std::vector<RootVector> positive_real_roots(const CartanDatum& d, std::int64_t H) {
  if (d.kind == Kind::finite) {
    std::vector<RootVector> out;
    for (auto& r : finite_positive_roots(d))
      if (height(r) <= H) out.push_back(r);
    return out;
  }
  if (d.kind == Kind::affine)
    return positive_real_roots(default_affine_data(std::make_shared<CartanDatum>(d)), H);
  throw Error("positive_real_roots: unsupported kind");
}

}  // namespace mvkit
