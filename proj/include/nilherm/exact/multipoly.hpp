#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nilherm/exact/matrix.hpp"
#include "nilherm/exact/scalar.hpp"

namespace nilherm {

using Exponent = std::vector<unsigned>;

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
/// Zero coefficients are never stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Gaussian& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(const Exponent& e, const Gaussian& c);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponent, Gaussian>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Gaussian coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Gaussian& c);

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Gaussian& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const Gaussian& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e) const;
  Gaussian evaluate(const Vec<Gaussian>& point) const;

  /// Partial derivative with respect to variable `index`.
  MultiPoly derivative(std::size_t index) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Renders with the given variable names (defaults to x1, x2, ...), highest degree first.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t num_vars_;
  std::map<Exponent, Gaussian> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

/// f o a, i.e. x -> f(a x). Satisfies substitute(substitute(f, a), b) == substitute(f, a * b).
MultiPoly substitute_linear(const MultiPoly& f, const Matrix<Gaussian>& a);
MultiPoly substitute_linear(const MultiPoly& f, const Matrix<Rational>& a);

/// Pfaffian by recursive first-row expansion; Pf([[0,1],[-1,0]]) = 1.
/// Throws DimensionMismatch for odd or non-square input, Error for a non-skew matrix.
MultiPoly pfaffian(const Matrix<MultiPoly>& m, std::size_t num_vars);

/// Scalar convenience wrapper around the polynomial Pfaffian.
Gaussian pfaffian(const Matrix<Gaussian>& m);

}  // namespace nilherm
