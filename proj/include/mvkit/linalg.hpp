#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mvkit/core.hpp"

namespace mvkit {

// Prime field F_P.
template <int P>
class Zp {
 public:
  Zp() = default;
  Zp(long v) : v_(static_cast<int>(((v % P) + P) % P)) {}
  int value() const { return v_; }
  Zp operator+(Zp o) const { return Zp(v_ + o.v_); }
  Zp operator-(Zp o) const { return Zp(v_ - o.v_); }
  Zp operator*(Zp o) const { return Zp(static_cast<long>(v_) * o.v_); }
  Zp operator-() const { return Zp(-v_); }
  Zp inv() const {
    if (v_ == 0) throw Error("division by zero in F_p");
    long r = 1, b = v_;
    for (int e = P - 2; e > 0; e >>= 1, b = b * b % P)
      if (e & 1) r = r * b % P;
    return Zp(r);
  }
  Zp operator/(Zp o) const { return *this * o.inv(); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  Zp& operator/=(Zp o) { return *this = *this / o; }
  bool operator==(const Zp& o) const = default;
  bool operator<(const Zp& o) const { return v_ < o.v_; }

 private:
  int v_ = 0;
};

template <typename F>
F field_inv(const F& x) {
  return F(1) / x;
}

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
template <int P>
bool field_is_zero(const Zp<P>& x) {
  return x.value() == 0;
}

// x -= a*b and x += a*b without temporaries.
inline void field_fms(Rational& x, const Rational& a, const Rational& b) {
  thread_local Rational t;
  mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_sub(x.get_mpq_t(), x.get_mpq_t(), t.get_mpq_t());
}
inline void field_fma(Rational& x, const Rational& a, const Rational& b) {
  thread_local Rational t;
  mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_add(x.get_mpq_t(), x.get_mpq_t(), t.get_mpq_t());
}
template <int P>
void field_fms(Zp<P>& x, const Zp<P>& a, const Zp<P>& b) {
  x -= a * b;
}
template <int P>
void field_fma(Zp<P>& x, const Zp<P>& a, const Zp<P>& b) {
  x += a * b;
}

template <typename F>
std::string field_to_string(const F& x);
template <>
inline std::string field_to_string(const Rational& x) {
  return x.get_str();
}
template <int P>
std::string field_to_string(const Zp<P>& x) {
  return std::to_string(x.value());
}

// Dense matrix over a field.
template <typename F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, F(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!field_is_zero(x)) return false;
    return true;
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw Error("matrix product: shape mismatch");
    Matrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const F& x = (*this)(i, k);
        if (field_is_zero(x)) continue;
        for (std::size_t j = 0; j < o.c_; ++j)
          if (!field_is_zero(o(k, j))) field_fma(m(i, j), x, o(k, j));
      }
    return m;
  }
  Matrix operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error("matrix sum: shape mismatch");
    Matrix m(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error("matrix difference: shape mismatch");
    Matrix m(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
    return m;
  }
  Matrix scaled(const F& s) const {
    Matrix m(*this);
    for (auto& x : m.a_) x *= s;
    return m;
  }
  Matrix transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t p = row;
      while (p < r_ && field_is_zero((*this)(p, col))) ++p;
      if (p == r_) continue;
      if (p != row)
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      F inv = field_inv((*this)(row, col));
      for (std::size_t j = col; j < c_; ++j)
        if (!field_is_zero((*this)(row, j))) (*this)(row, j) *= inv;
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row || field_is_zero((*this)(i, col))) continue;
        F f = (*this)(i, col);
        for (std::size_t j = col; j < c_; ++j)
          if (!field_is_zero((*this)(row, j))) field_fms((*this)(i, j), f, (*this)(row, j));
      }
      piv.push_back(col);
      ++row;
    }
    return piv;
  }

  std::size_t rank() const {
    Matrix m(*this);
    return m.rref().size();
  }

  // Columns form a basis of the right kernel. Row free[j] of the basis is the j-th unit row,
  // so selecting those rows is a left inverse.
  Matrix kernel(std::vector<std::size_t>* free = nullptr) const {
    Matrix m(*this);
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (auto p : piv) is_piv[p] = true;
    Matrix k(c_, c_ - piv.size());
    if (free) free->clear();
    std::size_t col = 0;
    for (std::size_t f = 0; f < c_; ++f) {
      if (is_piv[f]) continue;
      if (free) free->push_back(f);
      k(f, col) = F(1);
      for (std::size_t r = 0; r < piv.size(); ++r)
        if (!field_is_zero(m(r, f))) k(piv[r], col) = -m(r, f);
      ++col;
    }
    return k;
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), c_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
  }
  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix m(r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  // Rows form a basis of the left kernel {y : y A = 0}.
  // Column free[j] of the basis is the j-th unit column.
  Matrix left_kernel(std::vector<std::size_t>* free = nullptr) const { return transpose().kernel(free).transpose(); }

  // Basis of the column space, as a submatrix of linearly independent columns.
  Matrix column_basis() const {
    Matrix m(*this);
    auto piv = m.rref();
    Matrix b(r_, piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
      for (std::size_t i = 0; i < r_; ++i) b(i, k) = (*this)(i, piv[k]);
    return b;
  }

  // Left inverse of a matrix with independent columns.
  Matrix left_inverse() const {
    // rref of [A | I] is [EA | E] with the top rows of EA equal to the identity
    Matrix aug(r_, c_ + r_);
    aug.set_block(0, 0, *this);
    aug.set_block(0, c_, identity(r_));
    auto piv = aug.rref();
    if (c_ > 0 && (piv.size() < c_ || piv[c_ - 1] != c_ - 1))
      throw Error("left_inverse: columns are dependent");
    // the first c_ rows give a combination of rows of I mapping A to [I_c | 0]
    return aug.block(0, c_, c_, r_);
  }

  // Right inverse of a matrix with independent rows.
  Matrix right_inverse() const { return transpose().left_inverse().transpose(); }

  // Solves A X = B; throws if inconsistent.
  Matrix solve(const Matrix& b) const {
    Matrix aug(r_, c_ + b.cols());
    aug.set_block(0, 0, *this);
    aug.set_block(0, c_, b);
    auto piv = aug.rref();
    Matrix x(c_, b.cols());
    for (std::size_t k = 0; k < piv.size(); ++k) {
      if (piv[k] >= c_) throw Error("solve: inconsistent system");
      for (std::size_t j = 0; j < b.cols(); ++j) x(piv[k], j) = aug(k, c_ + j);
    }
    return x;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error("hstack: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
  }
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<F> a_;
};

// Jordan type of a nilpotent matrix from the ranks of its powers.
template <typename F>
std::vector<std::int64_t> nilpotent_jordan_type(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  std::vector<std::int64_t> r{static_cast<std::int64_t>(n)};
  Matrix<F> p = Matrix<F>::identity(n);
  while (r.back() > 0) {
    p = p * m;
    auto k = static_cast<std::int64_t>(p.rank());
    if (k == r.back()) throw Error("matrix is not nilpotent");
    r.push_back(k);
  }
  // number of blocks of size >= k is r[k-1] - r[k]
  std::vector<std::int64_t> ge;
  for (std::size_t k = 1; k < r.size(); ++k) ge.push_back(r[k - 1] - r[k]);
  std::vector<std::int64_t> parts;
  for (std::size_t k = 0; k < ge.size(); ++k) {
    std::int64_t exact = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
    for (std::int64_t t = 0; t < exact; ++t) parts.push_back(static_cast<std::int64_t>(k + 1));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace mvkit
