#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nilherm/acs/acs.hpp"
#include "nilherm/exact/multipoly.hpp"
#include "nilherm/metric/metric.hpp"

namespace nilherm::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// p/q with |p| <= 6 and 1 <= q <= 4.
inline Rational random_rational(Rng& rng) {
  Rational q(uniform_int(rng, -6, 6), uniform_int(rng, 1, 4));
  q.canonicalize();
  return q;
}

inline Gaussian random_gaussian(Rng& rng) { return Gaussian(random_rational(rng), random_rational(rng)); }

/// Antisymmetric bilinear map with random coefficients; no Jacobi condition.
inline BracketTensor<Rational> random_bracket(Rng& rng, std::size_t n) {
  return BracketTensor<Rational>::from_basis_values(n, [&](std::size_t, std::size_t) {
    Vec<Rational> v(n);
    for (auto& x : v) x = uniform_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng);
    return v;
  });
}

/// [e_i, e_j] in span(e_p ... e_{n-1}) for i, j < p, zero otherwise: 2-step by construction.
inline BracketTensor<Rational> random_two_step_bracket(Rng& rng, std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  return BracketTensor<Rational>::from_basis_values(n, [&](std::size_t i, std::size_t j) {
    Vec<Rational> v(n);
    if (j < p)
      for (std::size_t k = p; k < n; ++k) v[k] = uniform_int(rng, 0, 1) ? random_rational(rng) : Rational(0);
    return v;
  });
}

/// Conjugation split of a V_pq bracket with W1 = g span(e_0 .. e_{p-1}) and W2 = g span(e_p ..).
inline ConjugationSplit vpq_split(const LieAlgebra& a, const AlmostComplexStructure& j, const Matrix<Rational>& g,
                                  std::size_t p) {
  const std::size_t n = a.dim();
  std::vector<Vec<Rational>> w1, w2;
  for (std::size_t k = 0; k < n; ++k) (k < p ? w1 : w2).push_back(g.apply(unit_vec<Rational>(n, k)));
  return make_conjugation_split(
      make_presentation(a, Subspace<Rational>::span(n, w1), Subspace<Rational>::span(n, w2)), j);
}

/// Unipotent integer matrices multiplied together: determinant 1.
template <class K>
Matrix<K> random_unimodular(Rng& rng, std::size_t n, int rounds = 6) {
  Matrix<K> m = Matrix<K>::identity(n);
  for (int r = 0; r < rounds; ++r) {
    Matrix<K> e = Matrix<K>::identity(n);
    const std::size_t i = uniform_int(rng, 0, n - 1);
    std::size_t j = uniform_int(rng, 0, n - 2);
    if (j >= i) ++j;
    e(i, j) = K(uniform_int(rng, -2, 2));
    m = m * e;
  }
  return m;
}

inline Matrix<Rational> random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix<Rational> m(n, n);
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j) m(i, j) = uniform_int(rng, -2, 2);
    if (!is_zero(determinant(m))) return m;
  }
}

/// M^T M + I: rational and positive definite.
inline InnerProduct random_metric(Rng& rng, std::size_t n) {
  Matrix<Rational> m(n, n);
  for (auto i = 0u; i < n; ++i)
    for (auto j = 0u; j < n; ++j) m(i, j) = Rational(uniform_int(rng, -6, 6)) / 2;
  return InnerProduct(m.transpose() * m + Matrix<Rational>::identity(n));
}

/// A + J^T A J for a random metric A, hence J-compatible.
inline InnerProduct random_hermitian_metric(Rng& rng, const AlmostComplexStructure& j) {
  const auto a = random_metric(rng, j.dim()).gram();
  return InnerProduct(a + j.matrix().transpose() * a * j.matrix());
}

/// Determinant as the signed sum over permutations.
template <class K>
K leibniz_determinant(const Matrix<K>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  K total(0);
  do {
    K term(1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? K(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Ricci operator from
///   <Ric X,Y> = -1/2 sum <[X,Xi],Xj><[Y,Xi],Xj> + 1/4 sum <[Xi,Xj],X><[Xi,Xj],Y>
/// over an orthonormal basis, evaluated in the Gram-Schmidt orthogonal basis (no square roots:
/// each summand carries 1/(|Xi|^2 |Xj|^2)).
inline Matrix<Rational> ricci_orthogonal_frame(const LieAlgebra& a, const InnerProduct& ip) {
  const std::size_t n = a.dim();
  std::vector<Vec<Rational>> f;
  std::vector<Rational> norm2;
  for (std::size_t k = 0; k < n; ++k) {
    Vec<Rational> v = unit_vec<Rational>(n, k);
    for (std::size_t m = 0; m < f.size(); ++m) axpy(v, Rational(-ip(v, f[m]) / norm2[m]), f[m]);
    norm2.push_back(ip(v, v));
    f.push_back(v);
  }
  Matrix<Rational> form(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto ex = unit_vec<Rational>(n, x);
      const auto ey = unit_vec<Rational>(n, y);
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Rational w = 1 / (norm2[i] * norm2[j]);
          s -= Rational(1, 2) * w * ip(a.bracket(ex, f[i]), f[j]) * ip(a.bracket(ey, f[i]), f[j]);
          s += Rational(1, 4) * w * ip(a.bracket(f[i], f[j]), ex) * ip(a.bracket(f[i], f[j]), ey);
        }
      form(x, y) = s;
    }
  return ip.inverse_gram() * form;
}

/// Discriminant of a x^4 + ... + e y^4 as Res(f, f') / a, with the resultant from the Sylvester matrix.
inline Gaussian quartic_discriminant(const std::vector<Gaussian>& c) {
  const std::vector<Gaussian> d = {4 * c[0], 3 * c[1], 2 * c[2], c[3]};
  Matrix<Gaussian> s(7, 7);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 5; ++k) s(r, r + k) = c[k];
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) s(3 + r, r + k) = d[k];
  return leibniz_determinant(s) / c[0];
}

/// x^4 + t x^2 y^2 + y^4.
inline MultiPoly quartic_family(const Gaussian& t) {
  MultiPoly f(2);
  f.add_term({4, 0}, 1);
  f.add_term({2, 2}, t);
  f.add_term({0, 4}, 1);
  return f;
}

/// (t^3 + 2) xyz - t (x^3 + y^3 + z^3).
inline MultiPoly cubic_family(const Gaussian& t) {
  MultiPoly f(3);
  f.add_term({1, 1, 1}, t.pow(3) + 2);
  for (std::size_t k = 0; k < 3; ++k) {
    Exponent e(3, 0);
    e[k] = 3;
    f.add_term(e, -t);
  }
  return f;
}

/// Hesse-pencil closed forms for (t^3 + 2) xyz - t (x^3 + y^3 + z^3), with b = (t^3 + 2) / 6.
inline Gaussian hesse_s(const Gaussian& t) {
  const Gaussian b = (t.pow(3) + 2) / 6;
  return -t.pow(3) * b - b.pow(4);
}

inline Gaussian hesse_t(const Gaussian& t) {
  const Gaussian b = (t.pow(3) + 2) / 6;
  return t.pow(6) + 20 * t.pow(3) * b.pow(3) - 8 * b.pow(6);
}

/// Permutation from the interleaved basis (X1, iX1, X2, ...) to block order (X1, X2, ..., iX1, iX2, ...).
inline Matrix<Rational> interleaved_to_blocks(const Matrix<Rational>& m) {
  const std::size_t n = m.rows() / 2;
  auto pos = [n](std::size_t k) { return k % 2 == 0 ? k / 2 : n + k / 2; };
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(pos(i), pos(j)) = m(i, j);
  return out;
}

}  // namespace nilherm::testing
