#include "nilherm/exact/multipoly.hpp"

#include <numeric>

namespace nilherm {

MultiPoly MultiPoly::constant(std::size_t num_vars, const Gaussian& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw DimensionMismatch("variable index out of range");
  Exponent e(num_vars, 0);
  e[index] = 1;
  return monomial(e, Gaussian(1));
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Gaussian& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Gaussian MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Gaussian(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Gaussian& c) {
  if (e.size() != num_vars_) throw DimensionMismatch("exponent length differs from variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0U)));
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = degree();
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(std::accumulate(e.begin(), e.end(), 0U)) != d) return false;
  }
  return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) num_vars_ = o.num_vars_;
  if (num_vars_ != o.num_vars_) throw DimensionMismatch("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Gaussian& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly(std::max(a.num_vars_, b.num_vars_));
  if (a.num_vars_ != b.num_vars_) throw DimensionMismatch("polynomials in different variable counts");
  MultiPoly p(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(num_vars_, Gaussian(1));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Gaussian MultiPoly::evaluate(const Vec<Gaussian>& point) const {
  if (point.size() != num_vars_) throw DimensionMismatch("evaluation point has wrong dimension");
  Gaussian sum(0);
  for (const auto& [e, c] : terms_) {
    Gaussian t = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) t *= point[k].pow(e[k]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::derivative(std::size_t index) const {
  if (index >= num_vars_) throw DimensionMismatch("variable index out of range");
  MultiPoly p(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    --d[index];
    p.add_term(d, c * Gaussian(static_cast<long>(e[index])));
  }
  return p;
}

namespace {

std::string coefficient_prefix(const Gaussian& c, bool first, bool has_monomial) {
  if (c.is_real()) {
    Rational r = c.re();
    std::string sign;
    if (sgn(r) < 0) {
      sign = first ? "-" : " - ";
      r = -r;
    } else if (!first) {
      sign = " + ";
    }
    if (has_monomial && r == 1) return sign;
    return sign + to_string(r) + (has_monomial ? "*" : "");
  }
  std::string sign = first ? "" : " + ";
  return sign + "(" + to_string(c) + ")" + (has_monomial ? "*" : "");
}

}  // namespace

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k < names.size() ? names[k] : "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    out += coefficient_prefix(c, first, !mono.empty()) + mono;
    first = false;
  }
  return out;
}

MultiPoly substitute_linear(const MultiPoly& f, const Matrix<Gaussian>& a) {
  const std::size_t n = f.num_vars();
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("substitution matrix must be num_vars x num_vars");
  // Image of x_i is the linear form sum_j a(i,j) x_j; powers are cached per variable.
  std::vector<std::vector<MultiPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly form(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(i, j).is_zero()) form += a(i, j) * MultiPoly::variable(n, j);
    }
    powers[i].push_back(MultiPoly::constant(n, Gaussian(1)));
    powers[i].push_back(form);
  }
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };
  MultiPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

MultiPoly substitute_linear(const MultiPoly& f, const Matrix<Rational>& a) {
  return substitute_linear(f, to_gaussian(a));
}

namespace {

MultiPoly pfaffian_rec(const Matrix<MultiPoly>& m, std::vector<std::size_t>& idx, std::size_t num_vars) {
  if (idx.empty()) return MultiPoly::constant(num_vars, Gaussian(1));
  const std::size_t first = idx.front();
  MultiPoly sum(num_vars);
  for (std::size_t pos = 1; pos < idx.size(); ++pos) {
    const MultiPoly& entry = m(first, idx[pos]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != pos) rest.push_back(idx[k]);
    }
    MultiPoly minor = pfaffian_rec(m, rest, num_vars);
    MultiPoly term = entry * minor;
    // Column offset pos is 1-based column pos+1, sign (-1)^(pos+1).
    if (pos % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

MultiPoly pfaffian(const Matrix<MultiPoly>& m, std::size_t num_vars) {
  if (!m.is_square()) throw DimensionMismatch("Pfaffian of a non-square matrix");
  if (m.rows() % 2 != 0) throw DimensionMismatch("Pfaffian of an odd-dimensional matrix");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) throw Error("Pfaffian input is not skew-symmetric (nonzero diagonal)");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) + m(j, i)).is_zero()) throw Error("Pfaffian input is not skew-symmetric");
    }
  }
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return pfaffian_rec(m, idx, num_vars);
}

Gaussian pfaffian(const Matrix<Gaussian>& m) {
  Matrix<MultiPoly> pm(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) pm(i, j) = MultiPoly::constant(0, m(i, j));
  MultiPoly p = pfaffian(pm, 0);
  return p.coefficient(Exponent{});
}

Matrix<Gaussian> to_gaussian(const Matrix<Rational>& m) {
  Matrix<Gaussian> g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = Gaussian(m(i, j));
  return g;
}

Vec<Gaussian> to_gaussian(const Vec<Rational>& v) {
  Vec<Gaussian> g;
  g.reserve(v.size());
  for (const auto& x : v) g.emplace_back(x);
  return g;
}

}  // namespace nilherm
