#include "mvkit/oracle.hpp"

#include <algorithm>
#include <functional>

namespace mvkit::oracle {

mpz_class kostant_brute(const RootContext& ctx, const RootVector& nu) {
  const CartanDatum& d = *ctx.datum;
  const int n = d.rank();
  for (auto x : nu)
    if (x < 0) return 0;
  // every nonzero vector 0 <= beta <= nu, classified; imaginary roots carry multiplicity rank-1
  std::vector<RootVector> parts;
  RootVector beta(n, 0);
  std::function<void(int)> walk = [&](int k) {
    if (k == n) {
      if (is_zero(beta)) return;
      RootClass c = classify_root(d, beta);
      if (c == RootClass::real) parts.push_back(beta);
      if (c == RootClass::imaginary)
        for (int j = 0; j < n - 1; ++j) parts.push_back(beta);
      return;
    }
    for (std::int64_t v = 0; v <= nu[k]; ++v) {
      beta[k] = v;
      walk(k + 1);
    }
    beta[k] = 0;
  };
  walk(0);

  std::map<std::pair<std::size_t, RootVector>, mpz_class> memo;
  std::function<mpz_class(std::size_t, const RootVector&)> count = [&](std::size_t k, const RootVector& rest) {
    if (is_zero(rest)) return mpz_class(1);
    if (k == parts.size()) return mpz_class(0);
    auto key = std::make_pair(k, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    mpz_class total = 0;
    RootVector r = rest;
    while (is_nonnegative(r)) {
      total += count(k + 1, r);
      r = sub(r, parts[k]);
    }
    memo[key] = total;
    return total;
  };
  return count(0, nu);
}

namespace {

std::int64_t det(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * a[0][c] * det(minor);
  }
  return s;
}

// Normal to the k-1 vectors in Z^k given as rows.
std::vector<std::int64_t> cross(const std::vector<std::vector<std::int64_t>>& rows, std::size_t k) {
  std::vector<std::int64_t> nrm(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (const auto& r : rows) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(r[j]);
      minor.push_back(row);
    }
    nrm[c] = (c % 2 ? -1 : 1) * det(minor);
  }
  return nrm;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<RootVector> hull_vertices(const std::vector<RootVector>& input) {
  std::vector<RootVector> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  const std::size_t n = pts[0].size();
  Matrix<Rational> diff(pts.size() - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) diff(i - 1, j) = Rational(static_cast<long>(pts[i][j] - pts[0][j]));
  auto piv = diff.rref();
  const std::size_t k = piv.size();
  // projection to the pivot coordinates is injective on the affine hull
  std::vector<std::vector<std::int64_t>> q;
  for (const auto& p : pts) {
    std::vector<std::int64_t> x;
    for (auto c : piv) x.push_back(p[c]);
    q.push_back(x);
  }
  std::vector<std::vector<std::vector<std::int64_t>>> normals_at(pts.size());
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      std::vector<std::vector<std::int64_t>> rows;
      for (std::size_t t = 1; t < k; ++t) {
        std::vector<std::int64_t> r(k);
        for (std::size_t j = 0; j < k; ++j) r[j] = q[idx[t]][j] - q[idx[0]][j];
        rows.push_back(r);
      }
      auto nrm = cross(rows, k);
      if (std::all_of(nrm.begin(), nrm.end(), [](std::int64_t x) { return x == 0; })) return;
      const std::int64_t h = dot(nrm, q[idx[0]]);
      bool le = true, ge = true;
      for (const auto& x : q) {
        std::int64_t v = dot(nrm, x);
        le = le && v <= h;
        ge = ge && v >= h;
      }
      if (!le && !ge) return;
      if (!le)
        for (auto& x : nrm) x = -x;
      for (std::size_t i = 0; i < q.size(); ++i)
        if (dot(nrm, q[i]) == dot(nrm, q[idx[0]])) normals_at[i].push_back(nrm);
      return;
    }
    for (std::size_t i = start; i < q.size(); ++i) {
      idx[pos] = i;
      choose(pos + 1, i + 1);
    }
  };
  choose(0, 0);
  std::vector<RootVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (normals_at[i].size() < k) continue;
    Matrix<Rational> m(normals_at[i].size(), k);
    for (std::size_t r = 0; r < normals_at[i].size(); ++r)
      for (std::size_t c = 0; c < k; ++c) m(r, c) = Rational(static_cast<long>(normals_at[i][r][c]));
    if (m.rank() == k) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace mvkit::oracle
