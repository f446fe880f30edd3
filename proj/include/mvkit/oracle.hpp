#pragma once

// Brute-force reference computations used by the tests and the acceptance suite.
// They are deliberately naive and share no code paths with the operations they check.

#include <map>
#include <set>
#include <vector>

#include "mvkit/biconvex.hpp"
#include "mvkit/linalg.hpp"
#include "mvkit/prepmod.hpp"

namespace mvkit::oracle {

// Number of ways to write nu as a sum of positive roots counted with multiplicity.
// Roots are found by classifying every vector below nu.
mpz_class kostant_brute(const RootContext& ctx, const RootVector& nu);

// Vertices of the convex hull of a set of lattice points, by facet enumeration over
// integer normals. Intended for small point sets.
std::vector<RootVector> hull_vertices(const std::vector<RootVector>& pts);

// Dimension vectors of all submodules of a module over F_P, found by closing every
// homogeneous vector against every submodule already found.
template <int P>
std::set<RootVector> submodule_dimvecs(const PrepModule<Zp<P>>& m) {
  using Vec = std::vector<int>;
  const int n = m.datum->rank();
  // per node: echelon basis with pivot positions
  struct Sub {
    std::vector<std::vector<Vec>> basis;
    std::vector<std::vector<int>> pivots;
  };
  auto reduce = [](const Sub& s, int i, Vec v) {
    for (std::size_t k = 0; k < s.basis[i].size(); ++k) {
      int p = s.pivots[i][k];
      int c = v[p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * s.basis[i][k][j]) % P + P) % P;
    }
    return v;
  };
  auto insert = [&](Sub& s, int i, Vec v) {
    v = reduce(s, i, v);
    int p = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) {
        p = static_cast<int>(j);
        break;
      }
    if (p < 0) return false;
    int inv = Zp<P>(v[p]).inv().value();
    for (auto& x : v) x = x * inv % P;
    for (std::size_t k = 0; k < s.basis[i].size(); ++k) {
      int c = s.basis[i][k][p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) s.basis[i][k][j] = ((s.basis[i][k][j] - c * v[j]) % P + P) % P;
    }
    s.basis[i].push_back(v);
    s.pivots[i].push_back(p);
    return true;
  };
  auto apply = [&](std::size_t a, const Vec& v) {
    const auto& M = m.arrows[a];
    Vec out(M.rows(), 0);
    for (std::size_t r = 0; r < M.rows(); ++r) {
      long acc = 0;
      for (std::size_t c = 0; c < M.cols(); ++c) acc += static_cast<long>(M(r, c).value()) * v[c];
      out[r] = static_cast<int>(acc % P);
    }
    return out;
  };
  auto key = [&](Sub s) {
    // reduced echelon form sorted by pivot is canonical
    std::vector<std::vector<Vec>> k(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, Vec>> rows;
      for (std::size_t j = 0; j < s.basis[i].size(); ++j) rows.emplace_back(s.pivots[i][j], s.basis[i][j]);
      std::sort(rows.begin(), rows.end());
      for (auto& r : rows) k[i].push_back(r.second);
    }
    return k;
  };
  auto closure = [&](Sub s, int i, const Vec& v) {
    std::vector<std::pair<int, Vec>> todo{{i, v}};
    while (!todo.empty()) {
      auto [node, x] = todo.back();
      todo.pop_back();
      if (!insert(s, node, x)) continue;
      const Vec& added = s.basis[node].back();
      for (std::size_t a = 0; a < m.arrows.size(); ++a)
        if (m.source(a) == node && m.dims[m.target(a)] > 0) todo.emplace_back(m.target(a), apply(a, added));
    }
    return s;
  };

  Sub zero{std::vector<std::vector<Vec>>(n), std::vector<std::vector<int>>(n)};
  std::set<std::vector<std::vector<Vec>>> seen{key(zero)};
  std::vector<Sub> queue{zero};
  std::set<RootVector> out;
  while (!queue.empty()) {
    Sub s = queue.back();
    queue.pop_back();
    RootVector dv(n);
    for (int i = 0; i < n; ++i) dv[i] = static_cast<std::int64_t>(s.basis[i].size());
    out.insert(dv);
    for (int i = 0; i < n; ++i) {
      const int d = m.dims[i];
      if (static_cast<int>(s.basis[i].size()) == d) continue;
      long total = 1;
      for (int k = 0; k < d; ++k) total *= P;
      Vec v(d);
      for (long code = 1; code < total; ++code) {
        long c = code;
        int lead = -1;
        for (int k = 0; k < d; ++k) {
          v[k] = static_cast<int>(c % P);
          c /= P;
          if (v[k] && lead < 0) lead = k;
        }
        if (v[lead] != 1) continue;  // one representative per line
        bool inside = true;
        for (int x : reduce(s, i, v))
          if (x) inside = false;
        if (inside) continue;
        Sub t = closure(s, i, v);
        if (seen.insert(key(t)).second) queue.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace mvkit::oracle
