#include "nilherm/invariants/invariants.hpp"

#include <array>

namespace nilherm {

namespace {

Gaussian as_gaussian(const Gaussian& z) { return z; }
Gaussian as_gaussian(const Rational& q) { return Gaussian(q); }

template <class K>
PfaffianForm pfaffian_form_impl(const TwoStepPresentation<K>& pres) {
  const std::size_t p = pres.p();
  const std::size_t q = pres.q();
  if (q == 0) throw DimensionMismatch("Pfaffian form needs q >= 1");
  if (p % 2 != 0) throw DimensionMismatch("Pfaffian form needs even p");
  Matrix<MultiPoly> b(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) b(i, j) = MultiPoly(q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const Vec<K> coords = coordinates_in(pres.w2, pres.algebra.bracket(pres.w1.vector(i), pres.w1.vector(j)));
      MultiPoly entry(q);
      for (std::size_t k = 0; k < q; ++k) {
        if (!is_zero(coords[k])) entry += as_gaussian(coords[k]) * MultiPoly::variable(q, k);
      }
      b(j, i) = -entry;
      b(i, j) = std::move(entry);
    }
  }
  return PfaffianForm{pfaffian(b, q), p, q};
}

Exponent exponent(std::initializer_list<unsigned> e) { return Exponent(e); }

}  // namespace

PfaffianForm pfaffian_form(const TwoStepPresentation<Gaussian>& pres) { return pfaffian_form_impl(pres); }
PfaffianForm pfaffian_form(const TwoStepPresentation<Rational>& pres) { return pfaffian_form_impl(pres); }

std::string to_string(Convention c) { return c == Convention::Plain ? "plain" : "binomial"; }
std::string to_string(FormFamily f) { return f == FormFamily::BinaryQuartic ? "binary-quartic" : "ternary-cubic"; }

InvariantPair binary_quartic_st(const MultiPoly& f, Convention convention) {
  if (f.num_vars() != 2 || f.degree() != 4 || !f.is_homogeneous()) {
    throw Error("binary quartic invariants need a homogeneous quartic in 2 variables");
  }
  Gaussian a = f.coefficient(exponent({4, 0}));
  Gaussian b = f.coefficient(exponent({3, 1}));
  Gaussian c = f.coefficient(exponent({2, 2}));
  Gaussian d = f.coefficient(exponent({1, 3}));
  Gaussian e = f.coefficient(exponent({0, 4}));
  if (convention == Convention::Binomial) {
    b /= Gaussian(4);
    c /= Gaussian(6);
    d /= Gaussian(4);
  }
  InvariantPair out;
  out.s = a * e - Gaussian(4) * b * d + Gaussian(3) * c * c;
  out.t = a * c * e + Gaussian(2) * b * c * d - a * d * d - b * b * e - c * c * c;
  out.convention = convention;
  out.family = FormFamily::BinaryQuartic;
  return out;
}

namespace {

constexpr std::size_t kCubicTerms = 10;

/// Exponents of the ten cubic monomials; coefficient variable k multiplies x^m[k].
const std::array<Exponent, kCubicTerms>& cubic_monomials() {
  static const std::array<Exponent, kCubicTerms> m = [] {
    std::array<Exponent, kCubicTerms> out;
    std::size_t k = 0;
    for (unsigned i = 4; i-- > 0;)
      for (unsigned j = 4 - i; j-- > 0;) out[k++] = Exponent{i, j, 3 - i - j};
    return out;
  }();
  return m;
}

std::size_t cubic_index(const Exponent& e) {
  const auto& m = cubic_monomials();
  for (std::size_t k = 0; k < kCubicTerms; ++k)
    if (m[k] == e) return k;
  return kCubicTerms;
}

/// Monomials of the given degree in the coefficient ring whose x, y, z weights are all equal.
void balanced_monomials(std::size_t var, unsigned left, Exponent& cur, std::array<unsigned, 3> weight,
                        unsigned target, std::vector<Exponent>& out) {
  if (var == kCubicTerms) {
    if (left == 0 && weight[0] == target && weight[1] == target && weight[2] == target) out.push_back(cur);
    return;
  }
  const Exponent& m = cubic_monomials()[var];
  for (unsigned e = 0; e <= left; ++e) {
    std::array<unsigned, 3> w = weight;
    bool ok = true;
    for (std::size_t c = 0; c < 3; ++c) {
      w[c] += e * m[c];
      if (w[c] > target) ok = false;
    }
    if (!ok) break;
    cur[var] = e;
    balanced_monomials(var + 1, left - e, cur, w, target, out);
  }
  cur[var] = 0;
}

/// Derivation of the coefficient ring induced by x_a d/dx_b acting on the cubic.
MultiPoly raise(const MultiPoly& p, std::size_t a, std::size_t b) {
  const auto& mons = cubic_monomials();
  MultiPoly out(kCubicTerms);
  for (std::size_t k = 0; k < kCubicTerms; ++k) {
    const Exponent& m = mons[k];
    if (m[b] == 0) continue;
    Exponent target = m;
    --target[b];
    ++target[a];
    const std::size_t t = cubic_index(target);
    MultiPoly d = p.derivative(t);
    if (d.is_zero()) continue;
    out += Gaussian(static_cast<long>(m[b])) * (MultiPoly::variable(kCubicTerms, k) * d);
  }
  return out;
}

/// The unique (up to scale) sl3-invariant of the given degree in the cubic's coefficients.
MultiPoly cubic_invariant(unsigned degree) {
  std::vector<Exponent> basis;
  Exponent cur(kCubicTerms, 0);
  balanced_monomials(0, degree, cur, {0, 0, 0}, degree, basis);
  std::vector<MultiPoly> images[2];
  std::map<Exponent, std::size_t> rows;
  for (const auto& e : basis) {
    const MultiPoly mono = MultiPoly::monomial(e, Gaussian(1));
    for (int op = 0; op < 2; ++op) {
      MultiPoly img = op == 0 ? raise(mono, 0, 1) : raise(mono, 1, 2);
      for (const auto& [te, c] : img.terms()) rows.try_emplace(te, 0);
      images[op].push_back(std::move(img));
    }
  }
  std::size_t r = 0;
  for (auto& [e, idx] : rows) idx = r++;
  Matrix<Rational> m(2 * rows.size(), basis.size());
  for (int op = 0; op < 2; ++op)
    for (std::size_t col = 0; col < basis.size(); ++col)
      for (const auto& [te, c] : images[op][col].terms()) m(op * rows.size() + rows.at(te), col) = c.re();
  const Subspace<Rational> ker = kernel(m);
  if (ker.dim() != 1) throw Error("ternary cubic invariant space has unexpected dimension");
  MultiPoly inv(kCubicTerms);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Rational& c = ker.basis()(col, 0);
    if (!is_zero(c)) inv.add_term(basis[col], Gaussian(c));
  }
  return inv;
}

Vec<Gaussian> cubic_coefficients(const MultiPoly& f) {
  Vec<Gaussian> c;
  for (const auto& m : cubic_monomials()) c.push_back(f.coefficient(m));
  return c;
}

MultiPoly hesse_member(const Gaussian& a, const Gaussian& b) {
  MultiPoly f(3);
  f.add_term(Exponent{3, 0, 0}, a);
  f.add_term(Exponent{0, 3, 0}, a);
  f.add_term(Exponent{0, 0, 3}, a);
  f.add_term(Exponent{1, 1, 1}, Gaussian(6) * b);
  return f;
}

struct TernaryInvariants {
  MultiPoly s;
  MultiPoly t;
};

const TernaryInvariants& ternary_invariants() {
  static const TernaryInvariants inv = [] {
    TernaryInvariants out{cubic_invariant(4), cubic_invariant(6)};
    // S(6xyz) = -1 and T(x^3+y^3+z^3) = 1.
    const Gaussian s_raw = out.s.evaluate(cubic_coefficients(hesse_member(Gaussian(0), Gaussian(1))));
    const Gaussian t_raw = out.t.evaluate(cubic_coefficients(hesse_member(Gaussian(1), Gaussian(0))));
    out.s *= Gaussian(-1) / s_raw;
    out.t *= Gaussian(1) / t_raw;
    return out;
  }();
  return inv;
}

}  // namespace

InvariantPair ternary_cubic_st(const MultiPoly& f) {
  if (f.num_vars() != 3 || f.degree() != 3 || !f.is_homogeneous()) {
    throw Error("ternary cubic invariants need a homogeneous cubic in 3 variables");
  }
  const auto& inv = ternary_invariants();
  const Vec<Gaussian> c = cubic_coefficients(f);
  InvariantPair out;
  out.s = inv.s.evaluate(c);
  out.t = inv.t.evaluate(c);
  out.convention = Convention::Plain;
  out.family = FormFamily::TernaryCubic;
  return out;
}

InvariantPair form_invariants(const MultiPoly& f, Convention convention) {
  if (f.num_vars() == 2 && f.degree() == 4) return binary_quartic_st(f, convention);
  if (f.num_vars() == 3 && f.degree() == 3) return ternary_cubic_st(f);
  throw Error("invariants are available for binary quartics and ternary cubics only");
}

std::string to_string(const AbsoluteInvariant& a) {
  switch (a.kind) {
    case AbsoluteInvariant::Kind::Finite:
      return to_string(a.value);
    case AbsoluteInvariant::Kind::Infinite:
      return "infinite";
    case AbsoluteInvariant::Kind::Indeterminate:
      break;
  }
  return "indeterminate";
}

AbsoluteInvariant absolute_invariant(const InvariantPair& pair) {
  AbsoluteInvariant out;
  if (pair.t.is_zero()) {
    out.kind = pair.s.is_zero() ? AbsoluteInvariant::Kind::Indeterminate : AbsoluteInvariant::Kind::Infinite;
    return out;
  }
  out.kind = AbsoluteInvariant::Kind::Finite;
  out.value = pair.s.pow(3) / pair.t.pow(2);
  return out;
}

std::string to_string(ObstructionVerdict v) {
  return v == ObstructionVerdict::NoRealForm ? "no-real-form" : "inconclusive";
}

ObstructionVerdict real_form_obstruction(const InvariantPair& pair) {
  const auto a = absolute_invariant(pair);
  if (a.kind == AbsoluteInvariant::Kind::Finite && !a.value.is_real()) return ObstructionVerdict::NoRealForm;
  return ObstructionVerdict::Inconclusive;
}

std::string to_string(DistinctVerdict v) { return v == DistinctVerdict::Distinct ? "distinct" : "inconclusive"; }

DistinctVerdict distinguish_algebras(const PfaffianForm& f, const PfaffianForm& g, Convention convention) {
  const InvariantPair a = form_invariants(f.poly, convention);
  const InvariantPair b = form_invariants(g.poly, convention);
  if (a.family != b.family) throw Error("Pfaffian forms belong to different families");
  return absolute_invariant(a) == absolute_invariant(b) ? DistinctVerdict::Inconclusive : DistinctVerdict::Distinct;
}

bool proportional(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) return false;
  const auto& [e, c] = *g.terms().begin();
  const Gaussian ratio = f.coefficient(e) / c;
  if (ratio.is_zero()) return false;
  return f == ratio * g;
}

}  // namespace nilherm
