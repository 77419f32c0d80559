#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilherm/errors.hpp"
#include "nilherm/exact/scalar.hpp"

namespace nilherm {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(std::size_t n) {
  return Vec<K>(n, K(0));
}

template <class K>
Vec<K> unit_vec(std::size_t n, std::size_t i) {
  Vec<K> v(n, K(0));
  v[i] = K(1);
  return v;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  for (const K& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

template <class K>
Vec<K> add(Vec<K> a, const Vec<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class K>
Vec<K> sub(Vec<K> a, const Vec<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
Vec<K> scale(const K& s, Vec<K> a) {
  for (K& x : a) x *= s;
  return a;
}

/// a += s * b
template <class K>
void axpy(Vec<K>& a, const K& s, const Vec<K>& b) {
  if (is_zero(s)) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(b[i])) a[i] += s * b[i];
  }
}

template <class K>
Vec<K> conj_vec(Vec<K> a) {
  for (auto& x : a) x = conj(x);
  return a;
}

/// Dense row-major matrix over an exact field.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix diagonal(const Vec<K>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<K>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<K>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<K> row(std::size_t i) const {
    return Vec<K>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Vec<K> column(std::size_t j) const {
    Vec<K> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  void set_column(std::size_t j, const Vec<K>& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const K& x : data_) {
      if (!nilherm::is_zero(x)) return false;
    }
    return true;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vec<K> out(rows_, K(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (nilherm::is_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const K& a = (*this)(i, j);
        if (!nilherm::is_zero(a)) out[i] += a * v[j];
      }
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  Matrix& operator*=(const K& s) {
    for (K& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const K& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (K& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (nilherm::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& bkj = b(k, j);
          if (!nilherm::is_zero(bkj)) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<K>& data() const { return data_; }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <class K>
struct RowEchelon {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination; zero entries are skipped.
template <class K>
RowEchelon<K> rref(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    if (!(m(r, c) == K(1))) {
      K inv = K(1) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!is_zero(m(r, j))) m(r, j) *= inv;
      }
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < m.cols(); ++j) {
      if (!is_zero(m(r, j))) nz.push_back(j);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
      m(i, c) = K(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

/// Linear span inside K^ambient_dim, held as a matrix of independent columns.
template <class K>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  /// Span of arbitrary (possibly dependent) vectors; keeps an independent subset.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec<K>>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    Matrix<K> m = Matrix<K>::from_columns(vectors, ambient_dim);
    auto ech = rref(m);
    std::vector<Vec<K>> chosen;
    for (std::size_t c : ech.pivots) chosen.push_back(vectors[c]);
    s.basis_ = Matrix<K>::from_columns(chosen, ambient_dim);
    return s;
  }

  static Subspace whole(std::size_t n) {
    Subspace s(n);
    s.basis_ = Matrix<K>::identity(n);
    return s;
  }

  /// Trusts that the columns are independent.
  static Subspace from_independent_columns(Matrix<K> basis) {
    Subspace s(basis.rows());
    s.basis_ = std::move(basis);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<K>& basis() const { return basis_; }
  Vec<K> vector(std::size_t i) const { return basis_.column(i); }

  std::vector<Vec<K>> vectors() const {
    std::vector<Vec<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
    return out;
  }

  bool contains(const Vec<K>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
    if (is_zero_vec(v)) return true;
    auto vs = vectors();
    vs.push_back(v);
    return rank(Matrix<K>::from_columns(vs, ambient_)) == dim();
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other.vector(i))) return false;
    }
    return true;
  }

  friend bool same_span(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.contains(b);
  }

 private:
  std::size_t ambient_;
  Matrix<K> basis_;
};

/// Exact null space {v : m v = 0}; basis vectors are the standard free-column solutions.
template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
  auto ech = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;
  std::vector<Vec<K>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(n, K(0));
    v[f] = K(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace<K>::from_independent_columns(Matrix<K>::from_columns(basis, n));
}

template <class K>
struct AffineSolution {
  Vec<K> particular;
  Subspace<K> kernel;
};

/// Solves a x = b. Returns nullopt when the system is inconsistent.
template <class K>
std::optional<AffineSolution<K>> solve_affine(const Matrix<K>& a, const Vec<K>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length must equal row count");
  const std::size_t n = a.cols();
  Matrix<K> aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto ech = rref(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == n) return std::nullopt;
  Vec<K> x(n, K(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, n);
  return AffineSolution<K>{std::move(x), kernel(a)};
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto ech = rref(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

template <class K>
K determinant(Matrix<K> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  K det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return K(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    K inv = K(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class K>
std::string to_string(const Matrix<K>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

template <class K>
std::string to_string(const Vec<K>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

/// Embeds a rational matrix into Gaussian rationals.
Matrix<Gaussian> to_gaussian(const Matrix<Rational>& m);
Vec<Gaussian> to_gaussian(const Vec<Rational>& v);

}  // namespace nilherm
