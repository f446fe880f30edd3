#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mvkit/linalg.hpp"
#include "mvkit/polytope.hpp"

namespace mvkit {

// Finite-dimensional module over the preprojective algebra of a datum.
// Edge k oriented (s,t) yields arrows[2k] = a_k : s -> t with eps = +1 and
// arrows[2k+1] = a_k* : t -> s with eps = -1. Arrow ids are "a{k}" and "a{k}*".
template <typename F>
struct PrepModule {
  DatumPtr datum;
  std::vector<std::pair<int, int>> orientation;  // aligned with datum->edges
  std::vector<int> dims;
  std::vector<Matrix<F>> arrows;  // arrows[a] has shape dims[target] x dims[source]

  std::size_t arrow_count() const { return arrows.size(); }
  int source(std::size_t a) const { return a % 2 == 0 ? orientation[a / 2].first : orientation[a / 2].second; }
  int target(std::size_t a) const { return a % 2 == 0 ? orientation[a / 2].second : orientation[a / 2].first; }
  static int eps(std::size_t a) { return a % 2 == 0 ? 1 : -1; }
  static std::size_t bar(std::size_t a) { return a ^ 1u; }
  static std::string arrow_id(std::size_t a) { return "a" + std::to_string(a / 2) + (a % 2 ? "*" : ""); }

  // Arrows with source i, in index order.
  std::vector<std::size_t> outs(int i) const {
    std::vector<std::size_t> r;
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (source(a) == i) r.push_back(a);
    return r;
  }
  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  RootVector dimvec() const { return RootVector(dims.begin(), dims.end()); }
};

// Orientation with every edge pointing from its first to its second endpoint.
inline std::vector<std::pair<int, int>> default_orientation(const CartanDatum& d) { return d.edges; }

template <typename F>
PrepModule<F> zero_module(DatumPtr d, std::vector<std::pair<int, int>> orientation) {
  PrepModule<F> m;
  m.datum = d;
  m.orientation = std::move(orientation);
  if (m.orientation.size() != d->edges.size()) throw Error("orientation must list every edge once", ErrorKind::usage);
  for (std::size_t k = 0; k < d->edges.size(); ++k) {
    auto [s, t] = m.orientation[k];
    auto [u, v] = d->edges[k];
    if (!((s == u && t == v) || (s == v && t == u)))
      throw Error("orientation entry " + std::to_string(k) + " does not match the edge", ErrorKind::usage);
  }
  m.dims.assign(d->rank(), 0);
  m.arrows.assign(2 * d->edges.size(), Matrix<F>());
  return m;
}

template <typename F>
void reshape_arrows(PrepModule<F>& m) {
  for (std::size_t a = 0; a < m.arrows.size(); ++a) m.arrows[a] = Matrix<F>(m.dims[m.target(a)], m.dims[m.source(a)]);
}

template <typename F>
PrepModule<F> simple_module(DatumPtr d, std::vector<std::pair<int, int>> orientation, int i) {
  auto m = zero_module<F>(d, std::move(orientation));
  m.dims[i] = 1;
  reshape_arrows(m);
  return m;
}

template <typename F>
Matrix<F> m_in(const PrepModule<F>& m, int i) {
  Matrix<F> r(m.dims[i], 0);
  for (auto a : m.outs(i)) r = Matrix<F>::hstack(r, m.arrows[m.bar(a)]);
  return r;
}

template <typename F>
Matrix<F> m_out(const PrepModule<F>& m, int i) {
  Matrix<F> r(0, m.dims[i]);
  for (auto a : m.outs(i)) r = Matrix<F>::vstack(r, m.arrows[a].scaled(F(m.eps(a))));
  return r;
}

struct ModuleCheck {
  bool ok = true;
  std::string message;
};

// Radical layers U_{k+1} = sum_a M_a U_k; returns the number of nonzero layers or nullopt.
template <typename F>
std::optional<int> loewy_length(const PrepModule<F>& m) {
  const int n = m.datum->rank();
  std::vector<Matrix<F>> U(n);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    U[i] = Matrix<F>::identity(m.dims[i]);
    total += m.dims[i];
  }
  int layers = 0;
  while (total > 0) {
    if (layers > m.total_dim()) return std::nullopt;
    ++layers;
    std::vector<Matrix<F>> next(n);
    for (int i = 0; i < n; ++i) next[i] = Matrix<F>(m.dims[i], 0);
    for (std::size_t a = 0; a < m.arrows.size(); ++a) {
      int t = m.target(a);
      next[t] = Matrix<F>::hstack(next[t], m.arrows[a] * U[m.source(a)]);
    }
    int ntotal = 0;
    for (int i = 0; i < n; ++i) {
      U[i] = next[i].column_basis();
      ntotal += static_cast<int>(U[i].cols());
    }
    if (ntotal == total) return std::nullopt;
    total = ntotal;
  }
  return layers;
}

template <typename F>
ModuleCheck validate_module(const PrepModule<F>& m) {
  const CartanDatum& d = *m.datum;
  if (static_cast<int>(m.dims.size()) != d.rank() || m.arrows.size() != 2 * d.edges.size())
    return {false, "module shape does not match the datum"};
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    const auto& M = m.arrows[a];
    if (M.rows() != static_cast<std::size_t>(m.dims[m.target(a)]) ||
        M.cols() != static_cast<std::size_t>(m.dims[m.source(a)]))
      return {false, "arrow " + m.arrow_id(a) + " has the wrong shape"};
  }
  for (int i = 0; i < d.rank(); ++i) {
    auto rel = m_in(m, i) * m_out(m, i);
    if (!rel.is_zero()) return {false, "preprojective relation fails at node " + d.labels[i]};
  }
  if (!loewy_length(m))
    return {false, "module is not nilpotent: paths of length " + std::to_string(m.total_dim() + 1) + " act nonzero"};
  return {true, ""};
}

namespace detail {

// Row offsets of the blocks of the direct sum over outs(i).
template <typename F>
std::vector<std::size_t> block_offsets(const PrepModule<F>& m, const std::vector<std::size_t>& outs) {
  std::vector<std::size_t> off{0};
  for (auto a : outs) off.push_back(off.back() + m.dims[m.target(a)]);
  return off;
}

}  // namespace detail

// Reflection functor: the space at i becomes ker M_in(i).
template <typename F>
PrepModule<F> sigma(const PrepModule<F>& m, int i) {
  auto outs = m.outs(i);
  auto off = detail::block_offsets(m, outs);
  Matrix<F> Min = m_in(m, i), Mout = m_out(m, i);
  std::vector<std::size_t> free;
  Matrix<F> Kb = Min.kernel(&free);
  Matrix<F> newin = (Mout * Min).select_rows(free);
  PrepModule<F> r = m;
  r.dims[i] = static_cast<int>(Kb.cols());
  for (std::size_t k = 0; k < outs.size(); ++k) {
    std::size_t a = outs[k], n = off[k + 1] - off[k];
    r.arrows[a] = Kb.block(off[k], 0, n, Kb.cols()).scaled(F(m.eps(a)));
    r.arrows[m.bar(a)] = newin.block(0, off[k], newin.rows(), n);
  }
  return r;
}

// Dual reflection functor: the space at i becomes coker M_out(i).
template <typename F>
PrepModule<F> sigma_star(const PrepModule<F>& m, int i) {
  auto outs = m.outs(i);
  auto off = detail::block_offsets(m, outs);
  Matrix<F> Min = m_in(m, i), Mout = m_out(m, i);
  std::vector<std::size_t> free;
  Matrix<F> P = Mout.left_kernel(&free);
  Matrix<F> newout = (Mout * Min).select_cols(free);
  PrepModule<F> r = m;
  r.dims[i] = static_cast<int>(P.rows());
  for (std::size_t k = 0; k < outs.size(); ++k) {
    std::size_t a = outs[k], n = off[k + 1] - off[k];
    r.arrows[m.bar(a)] = P.block(0, off[k], P.rows(), n);
    r.arrows[a] = newout.block(off[k], 0, n, newout.cols()).scaled(F(m.eps(a)));
  }
  return r;
}

template <typename F>
PrepModule<F> dualize(const PrepModule<F>& m) {
  PrepModule<F> r = m;
  for (std::size_t a = 0; a < m.arrows.size(); ++a) r.arrows[a] = m.arrows[m.bar(a)].transpose();
  return r;
}

template <typename F>
PrepModule<F> direct_sum(const PrepModule<F>& m, const PrepModule<F>& n) {
  if (m.datum->cartan != n.datum->cartan || m.orientation != n.orientation)
    throw Error("direct_sum: modules live on different quivers", ErrorKind::usage);
  PrepModule<F> r = m;
  for (std::size_t i = 0; i < m.dims.size(); ++i) r.dims[i] = m.dims[i] + n.dims[i];
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    const auto &A = m.arrows[a], &B = n.arrows[a];
    Matrix<F> S(A.rows() + B.rows(), A.cols() + B.cols());
    S.set_block(0, 0, A);
    S.set_block(A.rows(), A.cols(), B);
    r.arrows[a] = S;
  }
  return r;
}

// Module with the same arrows conjugated by invertible changes of basis g_i.
template <typename F>
PrepModule<F> change_basis(const PrepModule<F>& m, const std::vector<Matrix<F>>& g) {
  PrepModule<F> r = m;
  for (std::size_t a = 0; a < m.arrows.size(); ++a)
    r.arrows[a] = g[m.target(a)] * m.arrows[a] * g[m.source(a)].left_inverse();
  return r;
}

// dimvec T^w and dimvec T_w for a reduced word of w.
template <typename F>
std::pair<RootVector, RootVector> torsion_dimvecs(const PrepModule<F>& m, const Word& word) {
  const DatumPtr& d = m.datum;
  if (!is_reduced_word(*d, word)) throw Error("torsion_dimvecs: word is not reduced", ErrorKind::usage);
  PrepModule<F> y = m;
  for (int i : word) y = sigma(y, i);
  WeylElt w = WeylElt::from_word(d, word);
  RootVector top = w.act(y.dimvec());
  PrepModule<F> z = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) z = sigma_star(z, *it);
  RootVector bottom = sub(m.dimvec(), w.inverse().act(z.dimvec()));
  return {top, bottom};
}

// Subspace bases (columns) of T^w inside m, for a reduced word of w.
template <typename F>
std::vector<Matrix<F>> torsion_top_subspace(const PrepModule<F>& m, const Word& word) {
  const int n = m.datum->rank();
  std::vector<PrepModule<F>> chain{m};
  for (int i : word) chain.push_back(sigma(chain.back(), i));
  std::vector<Matrix<F>> U(n);
  for (int j = 0; j < n; ++j) U[j] = Matrix<F>::identity(chain.back().dims[j]);
  for (std::size_t k = word.size(); k-- > 0;) {
    const int i = word[k];
    const PrepModule<F>& y = chain[k];
    auto outs = y.outs(i);
    std::size_t rows = 0, cols = 0;
    for (auto a : outs) {
      rows += y.dims[y.target(a)];
      cols += U[y.target(a)].cols();
    }
    Matrix<F> D(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (auto a : outs) {
      D.set_block(r0, c0, U[y.target(a)]);
      r0 += y.dims[y.target(a)];
      c0 += U[y.target(a)].cols();
    }
    U[i] = (m_in(y, i) * D).column_basis();
  }
  return U;
}

// Subspace bases of T_w: the annihilator of (T*)^{w^{-1}}.
template <typename F>
std::vector<Matrix<F>> torsion_bottom_subspace(const PrepModule<F>& m, const Word& word) {
  Word inv(word.rbegin(), word.rend());
  auto S = torsion_top_subspace(dualize(m), inv);
  std::vector<Matrix<F>> out;
  for (auto& s : S) out.push_back(s.transpose().kernel());
  return out;
}

// Subquotient S/Q of m for nested graded subspaces Q <= S (column bases).
template <typename F>
PrepModule<F> subquotient(const PrepModule<F>& m, const std::vector<Matrix<F>>& S, const std::vector<Matrix<F>>& Q) {
  const int n = m.datum->rank();
  std::vector<Matrix<F>> B(n), D(n);
  std::vector<std::size_t> q(n);
  PrepModule<F> r = m;
  for (int i = 0; i < n; ++i) {
    q[i] = Q[i].cols();
    B[i] = Matrix<F>::hstack(Q[i], S[i]).column_basis();
    if (B[i].cols() != S[i].cols() || Matrix<F>::hstack(Q[i], S[i]).rank() != S[i].rank())
      throw Error("subquotient: subspaces are not nested");
    D[i] = B[i].block(0, q[i], B[i].rows(), B[i].cols() - q[i]);
    r.dims[i] = static_cast<int>(D[i].cols());
  }
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    int s = m.source(a), t = m.target(a);
    Matrix<F> img = m.arrows[a] * D[s];
    Matrix<F> x = B[t].solve(img);
    r.arrows[a] = x.block(q[t], 0, x.rows() - q[t], x.cols());
  }
  return r;
}

// Hom and Ext^1 dimensions from the two-step complex.
template <typename F>
std::pair<std::int64_t, std::int64_t> hom_ext_dims(const PrepModule<F>& M, const PrepModule<F>& N) {
  if (M.datum->cartan != N.datum->cartan || M.orientation != N.orientation)
    throw Error("hom_ext_dims: modules live on different quivers", ErrorKind::usage);
  const int n = M.datum->rank();
  const std::size_t A = M.arrows.size();
  // C0 = sum_i Hom(M_i, N_i); C1 = sum_a Hom(M_s(a), N_t(a)); matrices vectorized row-major
  std::vector<std::size_t> off0{0}, off1{0};
  for (int i = 0; i < n; ++i) off0.push_back(off0.back() + N.dims[i] * M.dims[i]);
  for (std::size_t a = 0; a < A; ++a) off1.push_back(off1.back() + N.dims[M.target(a)] * M.dims[M.source(a)]);
  auto unpack = [](const Matrix<F>& v, std::size_t off, std::size_t r, std::size_t c) {
    Matrix<F> x(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) x(i, j) = v(off + i * c + j, 0);
    return x;
  };
  auto pack = [](Matrix<F>& v, std::size_t off, const Matrix<F>& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) v(off + i * x.cols() + j, 0) += x(i, j);
  };
  const std::size_t c0 = off0.back(), c1 = off1.back();
  Matrix<F> d0(c1, c0), d1(c0, c1);
  for (std::size_t col = 0; col < c0; ++col) {
    Matrix<F> e(c0, 1);
    e(col, 0) = F(1);
    Matrix<F> out(c1, 1);
    for (std::size_t a = 0; a < A; ++a) {
      int s = M.source(a), t = M.target(a);
      auto fs = unpack(e, off0[s], N.dims[s], M.dims[s]);
      auto ft = unpack(e, off0[t], N.dims[t], M.dims[t]);
      pack(out, off1[a], N.arrows[a] * fs - ft * M.arrows[a]);
    }
    for (std::size_t r = 0; r < c1; ++r) d0(r, col) = out(r, 0);
  }
  for (std::size_t col = 0; col < c1; ++col) {
    Matrix<F> e(c1, 1);
    e(col, 0) = F(1);
    Matrix<F> out(c0, 1);
    for (std::size_t a = 0; a < A; ++a) {
      int s = M.source(a), t = M.target(a);
      std::size_t b = M.bar(a);
      auto ga = unpack(e, off1[a], N.dims[t], M.dims[s]);
      auto gb = unpack(e, off1[b], N.dims[s], M.dims[t]);
      pack(out, off0[s], (N.arrows[b] * ga + gb * M.arrows[a]).scaled(F(M.eps(a))));
    }
    for (std::size_t r = 0; r < c0; ++r) d1(r, col) = out(r, 0);
  }
  auto r0 = static_cast<std::int64_t>(d0.rank()), r1 = static_cast<std::int64_t>(d1.rank());
  std::int64_t hom = static_cast<std::int64_t>(c0) - r0;
  std::int64_t ext = static_cast<std::int64_t>(c1) - r1 - r0;
  return {hom, ext};
}

// Module homomorphisms M -> N as tuples of matrices (a basis of Hom).
template <typename F>
std::vector<std::vector<Matrix<F>>> hom_basis(const PrepModule<F>& M, const PrepModule<F>& N) {
  const int n = M.datum->rank();
  std::vector<std::size_t> off{0};
  for (int i = 0; i < n; ++i) off.push_back(off.back() + N.dims[i] * M.dims[i]);
  std::size_t rows = 0;
  for (std::size_t a = 0; a < M.arrows.size(); ++a) rows += N.dims[M.target(a)] * M.dims[M.source(a)];
  Matrix<F> d0(rows, off.back());
  std::size_t r0 = 0;
  for (std::size_t a = 0; a < M.arrows.size(); ++a) {
    int s = M.source(a), t = M.target(a);
    // entry (p,q) of N_a f_s - f_t M_a
    for (int p = 0; p < N.dims[t]; ++p)
      for (int q = 0; q < M.dims[s]; ++q, ++r0) {
        for (int k = 0; k < N.dims[s]; ++k) d0(r0, off[s] + k * M.dims[s] + q) += N.arrows[a](p, k);
        for (int k = 0; k < M.dims[t]; ++k) d0(r0, off[t] + p * M.dims[t] + k) -= M.arrows[a](k, q);
      }
  }
  Matrix<F> K = d0.kernel();
  std::vector<std::vector<Matrix<F>>> out;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    std::vector<Matrix<F>> f(n);
    for (int i = 0; i < n; ++i) {
      f[i] = Matrix<F>(N.dims[i], M.dims[i]);
      for (int p = 0; p < N.dims[i]; ++p)
        for (int q = 0; q < M.dims[i]; ++q) f[i](p, q) = K(off[i] + p * M.dims[i] + q, c);
    }
    out.push_back(f);
  }
  return out;
}

// Searches random combinations of a Hom basis for an isomorphism.
template <typename F>
std::optional<std::vector<Matrix<F>>> find_isomorphism(const PrepModule<F>& M, const PrepModule<F>& N,
                                                       std::mt19937_64& rng, int attempts = 20) {
  if (M.dims != N.dims) return std::nullopt;
  auto basis = hom_basis(M, N);
  if (basis.empty()) {
    if (M.total_dim() == 0) return std::vector<Matrix<F>>(M.dims.size());
    return std::nullopt;
  }
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < attempts; ++t) {
    std::vector<Matrix<F>> f(M.dims.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = Matrix<F>(N.dims[i], M.dims[i]);
    for (auto& b : basis) {
      F c(coef(rng));
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = f[i] + b[i].scaled(c);
    }
    bool inv = true;
    for (std::size_t i = 0; i < f.size() && inv; ++i) inv = f[i].rank() == static_cast<std::size_t>(M.dims[i]);
    if (inv) return f;
  }
  return std::nullopt;
}

// Endomorphism T_pbar T_p for the two parallel arrows of an affine A1 quiver.
struct A1Arrows {
  int p = 0, q = 1;           // alpha : p -> q
  std::size_t alpha = 0, beta = 2, beta_bar = 3, alpha_bar = 1;
};

inline bool is_affine_a1(const CartanDatum& d) {
  return d.rank() == 2 && d.kind == Kind::affine && d.edges.size() == 2;
}

template <typename F>
A1Arrows a1_arrows(const PrepModule<F>& m) {
  if (!is_affine_a1(*m.datum)) throw Error("core analysis is only available in affine type A1");
  A1Arrows r;
  r.p = m.orientation[0].first;
  r.q = m.orientation[0].second;
  if (m.orientation[1].first == r.p) {
    r.beta = 2;
    r.beta_bar = 3;
  } else {
    r.beta = 3;
    r.beta_bar = 2;
  }
  return r;
}

// Jordan type of T_betabar T_alpha for a module of dimension n delta with T_alpha invertible.
template <typename F>
Partition jordan_core_type(const PrepModule<F>& m) {
  auto ar = a1_arrows(m);
  if (m.dims[0] != m.dims[1]) throw Error("jordan_core_type: dimension-vector is not a multiple of delta");
  const auto& Ta = m.arrows[ar.alpha];
  if (Ta.rank() != Ta.rows()) throw Error("jordan_core_type: T_alpha is singular");
  if (m.dims[0] == 0) return {};
  return nilpotent_jordan_type(m.arrows[ar.beta_bar] * Ta);
}

// Coweight gamma' = mu_p - mu_q of the chamber whose cores have T_alpha invertible.
inline Coweight gamma_prime(const CartanDatum& d, int p, int q) {
  Coweight g(d.rank(), Rational(0));
  g[p] = 1;
  g[q] = -1;
  return g;
}

template <typename F>
struct HNResult {
  GGMSPolytope polytope;
  std::map<Word, std::pair<RootVector, RootVector>> torsion;  // w -> (dimvec T^w, dimvec T_w)
  std::vector<std::string> notes;
};

// Alternating word starting at node a, of the given length.
inline Word alternating_word(int a, int b, int len) {
  Word w;
  for (int k = 0; k < len; ++k) w.push_back(k % 2 ? b : a);
  return w;
}

// The two slope-zero subquotients of an affine A1 module: first for gamma', then for gamma''.
template <typename F>
std::pair<PrepModule<F>, PrepModule<F>> a1_imaginary_subquotients(const PrepModule<F>& m) {
  auto ar = a1_arrows(m);
  int D = m.total_dim(), len = 0;
  while (1 + 2 * len <= D) ++len;
  auto top1 = torsion_top_subspace(m, alternating_word(ar.q, ar.p, len));
  auto reversed = [](Word w) {
    std::reverse(w.begin(), w.end());
    return w;
  };
  auto bot1 = torsion_bottom_subspace(m, reversed(alternating_word(ar.p, ar.q, len)));
  auto top2 = torsion_top_subspace(m, alternating_word(ar.p, ar.q, len));
  auto bot2 = torsion_bottom_subspace(m, reversed(alternating_word(ar.q, ar.p, len)));
  return {subquotient(m, top1, bot1), subquotient(m, top2, bot2)};
}

template <typename F>
HNResult<F> hn_polytope(ContextPtr ctx, const PrepModule<F>& m, std::optional<int> L = std::nullopt) {
  const DatumPtr& d = m.datum;
  HNResult<F> res;
  GGMSPolytope& P = res.polytope;
  P.ctx = ctx;
  const int Lauto = stabilization_length(*ctx, m.total_dim());
  P.L = L ? *L : Lauto;
  if (P.L < Lauto)
    res.notes.push_back("length bound " + std::to_string(P.L) + " is below the stabilization length " +
                        std::to_string(Lauto) + "; directions beyond it are not stabilized");
  P.weight = m.dimvec();
  // canonical words are prefix closed, so each element extends its parent by one letter
  auto elems = elements_up_to(d, P.L);
  std::map<Word, PrepModule<F>> ys, zs;
  ys.emplace(Word{}, m);
  zs.emplace(Word{}, m);
  for (const auto& w : elems) {
    const Word& word = w.word();
    if (!word.empty()) {
      Word parent(word.begin(), word.end() - 1);
      ys.emplace(word, sigma(ys.at(parent), word.back()));
      zs.emplace(word, sigma_star(zs.at(parent), word.back()));
    }
    P.tits[word] = w.act(ys.at(word).dimvec());
    P.anti[w.inverse().word()] = sub(m.dimvec(), w.act(zs.at(word).dimvec()));
  }
  for (auto& [w, top] : P.tits) {
    auto it = P.anti.find(w);
    res.torsion[w] = {top, it == P.anti.end() ? RootVector{} : it->second};
  }
  collect_vertices(P);
  if (is_affine_a1(*d) && ctx->affine) {
    auto ar = a1_arrows(m);
    try {
      auto [q1, q2] = a1_imaginary_subquotients(m);
      Partition l1 = jordan_core_type(q1);
      Partition l2 = jordan_core_type(dualize(q2));
      P.partitions.emplace_back(gamma_prime(*d, ar.p, ar.q), l1);
      P.partitions.emplace_back(gamma_prime(*d, ar.q, ar.p), l2);
    } catch (const Error& e) {
      res.notes.push_back(std::string("partitions not computed: ") + e.what());
    }
  } else if (ctx->affine) {
    res.notes.push_back("partitions not computed outside affine type A1");
  }
  return res;
}

// Random valid module built by iterated extensions by simples on top.
template <typename F>
PrepModule<F> random_module(DatumPtr d, std::vector<std::pair<int, int>> orientation, int total_dim,
                            std::mt19937_64& rng, int coef_range = 2) {
  auto m = zero_module<F>(d, std::move(orientation));
  reshape_arrows(m);
  std::uniform_int_distribution<int> node(0, d->rank() - 1);
  std::uniform_int_distribution<int> coef(-coef_range, coef_range);
  for (int step = 0; step < total_dim; ++step) {
    int i = node(rng);
    auto outs = m.outs(i);
    // new vector e at i with images v_a, subject to sum eps(a) M_abar v_a = 0
    Matrix<F> Min(m.dims[i], 0);
    for (auto a : outs) Min = Matrix<F>::hstack(Min, m.arrows[m.bar(a)].scaled(F(m.eps(a))));
    Matrix<F> K = Min.kernel();
    Matrix<F> v(K.rows(), 1);
    for (std::size_t c = 0; c < K.cols(); ++c) {
      F x(coef(rng));
      for (std::size_t r = 0; r < K.rows(); ++r) v(r, 0) += K(r, c) * x;
    }
    PrepModule<F> r = m;
    r.dims[i] += 1;
    for (std::size_t a = 0; a < m.arrows.size(); ++a) {
      int s = m.source(a), t = m.target(a);
      Matrix<F> M(r.dims[t], r.dims[s]);
      M.set_block(0, 0, m.arrows[a]);
      r.arrows[a] = M;
    }
    std::size_t off = 0;
    for (auto a : outs) {
      int t = m.target(a);
      for (int k = 0; k < m.dims[t]; ++k) r.arrows[a](k, m.dims[i]) = v(off + k, 0);
      off += m.dims[t];
    }
    m = r;
  }
  return m;
}

// Random invertible matrix with small integer entries.
template <typename F>
Matrix<F> random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    Matrix<F> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = F(coef(rng));
    if (g.rank() == n) return g;
  }
}

}  // namespace mvkit
