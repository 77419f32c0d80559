#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nilherm {

/// Arbitrary precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational conj(const Rational& q) { return q; }
inline double to_double(const Rational& q) { return q.get_d(); }

/// Complex number with rational real and imaginary parts.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// z * conj(z), a nonnegative rational.
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
  Gaussian conjugate() const { return Gaussian(re_, Rational(-im_)); }
  Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return Gaussian(Rational(-re_), Rational(-im_)); }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Gaussian pow(unsigned e) const;

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Gaussian& z) { return z.is_zero(); }
inline Gaussian conj(const Gaussian& z) { return z.conjugate(); }

/// Canonical text form: `3/2`, `-1/2i`, `3/2-1/2i`, `i` is written `1i`.
std::string to_string(const Gaussian& z);
std::ostream& operator<<(std::ostream& os, const Gaussian& z);

/// Parses `p`, `p/q`, `bi`, `a+bi`, `a-bi` (also a bare `i` / `-i`).
Gaussian parse_gaussian(std::string_view text);

}  // namespace nilherm
