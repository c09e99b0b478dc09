#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "paramod/rational.hpp"

namespace paramod {

// Weights are row vectors of exact rationals in the fundamental-weight basis.
struct WeightVec {
  std::vector<Rational> c;

  WeightVec() = default;
  explicit WeightVec(size_t n) : c(n, Rational(0)) {}
  WeightVec(std::initializer_list<Rational> xs) : c(xs) {}
  explicit WeightVec(std::vector<Rational> xs) : c(std::move(xs)) {}

  size_t size() const { return c.size(); }
  Rational& operator[](size_t i) { return c[i]; }
  const Rational& operator[](size_t i) const { return c[i]; }

  WeightVec operator+(const WeightVec& o) const {
    check(o);
    WeightVec r(*this);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  WeightVec operator-(const WeightVec& o) const {
    check(o);
    WeightVec r(*this);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  WeightVec operator*(const Rational& s) const {
    WeightVec r(*this);
    for (auto& x : r.c) x *= s;
    return r;
  }
  WeightVec operator-() const { return *this * Rational(-1); }

  bool operator==(const WeightVec& o) const { return c == o.c; }
  bool operator!=(const WeightVec& o) const { return !(*this == o); }
  bool operator<(const WeightVec& o) const {  // lexicographic
    for (size_t i = 0; i < c.size() && i < o.c.size(); ++i) {
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    }
    return c.size() < o.c.size();
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& x : c)
      if (!x.is_integer()) return false;
    return true;
  }

  std::vector<long long> as_integers() const {
    std::vector<long long> v;
    v.reserve(c.size());
    for (const auto& x : c) {
      if (!x.is_integer()) throw std::invalid_argument("WeightVec: not integral: " + str());
      v.push_back(x.num());
    }
    return v;
  }

  static WeightVec from_integers(const std::vector<long long>& v) {
    WeightVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w.c[i] = Rational(v[i]);
    return w;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += c[i].str();
    }
    return s + ")";
  }

private:
  void check(const WeightVec& o) const {
    if (c.size() != o.c.size()) throw std::invalid_argument("WeightVec: size mismatch");
  }
};

// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, Rational(0)) {}

  static QMatrix identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  WeightVec row(size_t i) const {
    WeightVec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }
  void set_row(size_t i, const WeightVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("QMatrix: row size mismatch");
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  QMatrix operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Rational& x = at(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  QMatrix operator*(const Rational& s) const {
    QMatrix r(*this);
    for (auto& x : r.a_) x *= s;
    return r;
  }

  QMatrix transpose() const {
    QMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Gauss-Jordan with partial pivoting on exact rationals.
  QMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: inverse of non-square matrix");
    size_t n = rows_;
    QMatrix a(*this), inv = identity(n);
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && a.at(piv, col).is_zero()) ++piv;
      if (piv == n) throw std::runtime_error("QMatrix: singular matrix");
      if (piv != col) {
        for (size_t j = 0; j < n; ++j) {
          std::swap(a.at(piv, j), a.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      }
      Rational d = a.at(col, col);
      for (size_t j = 0; j < n; ++j) {
        a.at(col, j) /= d;
        inv.at(col, j) /= d;
      }
      for (size_t i = 0; i < n; ++i) {
        if (i == col || a.at(i, col).is_zero()) continue;
        Rational f = a.at(i, col);
        for (size_t j = 0; j < n; ++j) {
          a.at(i, j) -= f * a.at(col, j);
          inv.at(i, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  Rational determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: determinant of non-square matrix");
    QMatrix a(*this);
    size_t n = rows_;
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && a.at(piv, col).is_zero()) ++piv;
      if (piv == n) return Rational(0);
      if (piv != col) {
        for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
        det = -det;
      }
      det *= a.at(col, col);
      Rational d = a.at(col, col);
      for (size_t i = col + 1; i < n; ++i) {
        if (a.at(i, col).is_zero()) continue;
        Rational f = a.at(i, col) / d;
        for (size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
      }
    }
    return det;
  }

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// v · M for a row vector v.
inline WeightVec mul_row(const WeightVec& v, const QMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("mul_row: shape mismatch");
  WeightVec r(m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

// u · M · v^T.
inline Rational bilinear(const WeightVec& u, const QMatrix& m, const WeightVec& v) {
  WeightVec um = mul_row(u, m);
  if (um.size() != v.size()) throw std::invalid_argument("bilinear: shape mismatch");
  Rational r(0);
  for (size_t j = 0; j < v.size(); ++j) r += um[j] * v[j];
  return r;
}

// ---- integer matrices ------------------------------------------------------

using IMat = std::vector<std::vector<long long>>;

inline long long checked_addmul(long long a, long long q, long long b) {
  __int128 v = (__int128)a + (__int128)q * b;
  if (v > INT64_MAX || v < -INT64_MAX) throw std::overflow_error("integer matrix op overflow");
  return (long long)v;
}

inline QMatrix to_qmatrix(const IMat& m) {
  QMatrix q(m.size(), m.empty() ? 0 : m[0].size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) q.at(i, j) = Rational(m[i][j]);
  return q;
}

// Smith normal form: returns unimodular U, V and the diagonal d with
// U * M * V = diag(d), d_i >= 0 and d_i | d_{i+1}.
struct SmithResult {
  IMat u, v;
  std::vector<long long> diag;
};

SmithResult smith_normal_form(IMat m);

// Basis (as rows) of the integer row span of `rows`; throws unless the span
// has full column rank.
IMat integer_row_basis(const IMat& rows);

}  // namespace paramod
