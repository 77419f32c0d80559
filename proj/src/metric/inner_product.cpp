#include "nilherm/metric/inner_product.hpp"

namespace nilherm {

InnerProduct::InnerProduct(Matrix<Rational> g) : g_(std::move(g)) {
  if (!g_.is_square()) throw DimensionMismatch("metric matrix is not square");
  const std::size_t n = g_.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g_(i, j) != g_(j, i)) throw NotPositiveDefinite("metric matrix is not symmetric");
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g_(i, j);
    if (sgn(determinant(minor)) <= 0) {
      throw NotPositiveDefinite("metric is not positive definite (leading minor " + std::to_string(k) + ")");
    }
  }
  h_ = n == 0 ? g_ : inverse(g_);
}

Rational InnerProduct::operator()(const Vec<Rational>& x, const Vec<Rational>& y) const {
  const Vec<Rational> gy = g_.apply(y);
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i])) s += x[i] * gy[i];
  }
  return s;
}

bool InnerProduct::is_compatible(const Matrix<Rational>& j) const { return j.transpose() * g_ * j == g_; }

InnerProduct complexified_metric(const InnerProduct& ip) {
  const std::size_t n = ip.dim();
  Matrix<Rational> g(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      g(2 * a, 2 * b) = ip.gram()(a, b);
      g(2 * a + 1, 2 * b + 1) = ip.gram()(a, b);
    }
  }
  return InnerProduct(std::move(g));
}

}  // namespace nilherm
