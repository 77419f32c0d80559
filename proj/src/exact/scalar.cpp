#include "nilherm/exact/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "nilherm/errors.hpp"

namespace nilherm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error("malformed rational literal '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw SingularMatrix("division by zero Gaussian rational");
  Rational n = norm();
  return Gaussian(Rational(re_ / n), Rational(-im_ / n));
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) { return *this *= o.inverse(); }

Gaussian Gaussian::pow(unsigned e) const {
  Gaussian result(1);
  Gaussian base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im = to_string(z.im()) + "i";
  if (sgn(z.re()) == 0) return im;
  if (sgn(z.im()) > 0) return to_string(z.re()) + "+" + im;
  return to_string(z.re()) + im;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

Gaussian parse_gaussian(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error("empty scalar literal");
  if (s.back() != 'i') return Gaussian(parse_rational(s));
  s.remove_suffix(1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Gaussian(std::move(re), std::move(im));
}

}  // namespace nilherm
