#pragma once

#include <cstddef>

#include "nilherm/exact/matrix.hpp"

namespace nilherm {

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// Exact symmetric positive definite Gram matrix G, <x, y> = x^T G y.
class InnerProduct {
 public:
  InnerProduct() = default;

  /// Throws NotPositiveDefinite unless G is symmetric with positive leading principal minors.
  explicit InnerProduct(Matrix<Rational> g);

  static InnerProduct identity(std::size_t n) { return InnerProduct(Matrix<Rational>::identity(n)); }

  std::size_t dim() const { return g_.rows(); }
  const Matrix<Rational>& gram() const { return g_; }
  const Matrix<Rational>& inverse_gram() const { return h_; }

  Rational operator()(const Vec<Rational>& x, const Vec<Rational>& y) const;

  /// True when J^T G J = G.
  bool is_compatible(const Matrix<Rational>& j) const;

  friend bool operator==(const InnerProduct& a, const InnerProduct& b) { return a.g_ == b.g_; }

 private:
  Matrix<Rational> g_;
  Matrix<Rational> h_;
};

/// Metric of the realified complexification: g on both the real and the imaginary copy,
/// laid out in the interleaved basis (X1, iX1, X2, iX2, ...).
InnerProduct complexified_metric(const InnerProduct& ip);

}  // namespace nilherm
