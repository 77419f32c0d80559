#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "nilherm/exact/matrix.hpp"

namespace nilherm {

enum class Field { Rational, GaussianRational };

template <class K>
constexpr Field field_of() {
  if constexpr (std::is_same_v<K, Gaussian>) {
    return Field::GaussianRational;
  } else {
    return Field::Rational;
  }
}

/// Skew-symmetric bilinear map K^n x K^n -> K^n given by structure constants.
///
/// Only the pairs i < j are stored, so [X_j, X_i] = -[X_i, X_j] holds by construction.
/// No Jacobi identity is assumed; see BasicLieAlgebra for validated brackets.
template <class K>
class BracketTensor {
 public:
  explicit BracketTensor(std::size_t dim = 0) : dim_(dim), data_(pair_count(dim) * dim, K(0)) {}

  std::size_t dim() const { return dim_; }

  /// Coefficient of X_k in [X_i, X_j] (any i, j).
  K coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return K(0);
    if (i < j) return data_[pair_index(i, j) * dim_ + k];
    return -data_[pair_index(j, i) * dim_ + k];
  }

  /// Sets [X_i, X_j] = value (so [X_j, X_i] = -value). Requires i != j.
  void set(std::size_t i, std::size_t j, const Vec<K>& value) {
    if (i == j) throw Error("bracket of a generator with itself is zero by antisymmetry");
    if (i >= dim_ || j >= dim_ || value.size() != dim_) throw DimensionMismatch("bracket index out of range");
    const bool flip = i > j;
    const std::size_t p = flip ? pair_index(j, i) : pair_index(i, j);
    for (std::size_t k = 0; k < dim_; ++k) data_[p * dim_ + k] = flip ? K(-value[k]) : value[k];
  }

  Vec<K> bracket_basis(std::size_t i, std::size_t j) const {
    Vec<K> v(dim_, K(0));
    if (i == j) return v;
    const std::size_t p = i < j ? pair_index(i, j) : pair_index(j, i);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = i < j ? data_[p * dim_ + k] : K(-data_[p * dim_ + k]);
    return v;
  }

  /// Bilinear extension to arbitrary vectors.
  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket arguments have wrong dimension");
    Vec<K> out(dim_, K(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        K w = x[i] * y[j] - x[j] * y[i];
        if (nilherm::is_zero(w)) continue;
        const std::size_t base = pair_index(i, j) * dim_;
        for (std::size_t k = 0; k < dim_; ++k) {
          if (!nilherm::is_zero(data_[base + k])) out[k] += w * data_[base + k];
        }
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const K& x : data_) {
      if (!nilherm::is_zero(x)) return false;
    }
    return true;
  }

  BracketTensor& operator+=(const BracketTensor& o) {
    check_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  BracketTensor& operator-=(const BracketTensor& o) {
    check_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  BracketTensor& operator*=(const K& s) {
    for (K& x : data_) x *= s;
    return *this;
  }
  friend BracketTensor operator+(BracketTensor a, const BracketTensor& b) { return a += b; }
  friend BracketTensor operator-(BracketTensor a, const BracketTensor& b) { return a -= b; }
  friend BracketTensor operator*(const K& s, BracketTensor a) { return a *= s; }
  friend bool operator==(const BracketTensor& a, const BracketTensor& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  /// Builds the tensor whose value on basis pairs is f(e_i, e_j) for i < j.
  template <class F>
  static BracketTensor from_basis_values(std::size_t dim, F&& f) {
    BracketTensor t(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) t.set(i, j, f(i, j));
    return t;
  }

 private:
  static std::size_t pair_count(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }
  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * (2 * dim_ - i - 1) / 2 + (j - i - 1); }
  void check_dim(const BracketTensor& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch("bracket tensors of different dimension");
  }

  std::size_t dim_;
  std::vector<K> data_;
};

/// Nonzero brackets rendered as `[X1,X2] = X3; ...`.
template <class K>
std::string describe(const BracketTensor<K>& t);

/// g.lambda with (g.lambda)(X, Y) = g [g^-1 X, g^-1 Y]. Throws SingularMatrix.
template <class K>
BracketTensor<K> act_gl(const BracketTensor<K>& t, const Matrix<K>& g);

}  // namespace nilherm
