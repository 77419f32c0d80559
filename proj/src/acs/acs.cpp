#include "nilherm/acs/acs.hpp"

namespace nilherm {

AlmostComplexStructure::AlmostComplexStructure(Matrix<Rational> j) : j_(std::move(j)) {
  if (!j_.is_square()) throw DimensionMismatch("almost complex structure must be square");
  if (!(j_ * j_ == -Matrix<Rational>::identity(j_.rows()))) {
    throw PreconditionFailed("J^2 != -I");
  }
}

AlmostComplexStructure AlmostComplexStructure::standard(std::size_t dim) {
  if (dim % 2 != 0) throw DimensionMismatch("almost complex structure needs even dimension");
  Matrix<Rational> j(dim, dim);
  for (std::size_t k = 0; k < dim; k += 2) {
    j(k + 1, k) = 1;
    j(k, k + 1) = -1;
  }
  return AlmostComplexStructure(std::move(j));
}

namespace {

void check_size(std::size_t n, const AlmostComplexStructure& j) {
  if (j.dim() != n) throw DimensionMismatch("almost complex structure and algebra differ in dimension");
}

}  // namespace

ClassificationFlags classify(const BracketTensor<Rational>& t, const AlmostComplexStructure& j) {
  const std::size_t n = t.dim();
  check_size(n, j);
  std::vector<Vec<Rational>> je;
  for (std::size_t a = 0; a < n; ++a) je.push_back(j.matrix().column(a));
  ClassificationFlags f{true, true, true, true, true};
  for (std::size_t a = 0; a < n; ++a) {
    const Vec<Rational> ea = unit_vec<Rational>(n, a);
    for (std::size_t b = 0; b < n; ++b) {
      const Vec<Rational> eb = unit_vec<Rational>(n, b);
      const Vec<Rational> xy = t.bracket_basis(a, b);
      const Vec<Rational> jx_y = t.bracket(je[a], eb);
      const Vec<Rational> x_jy = t.bracket(ea, je[b]);
      const Vec<Rational> jx_jy = t.bracket(je[a], je[b]);
      const Vec<Rational> j_xy = j.apply(xy);
      if (f.in_int && !(jx_jy == add(add(xy, j.apply(jx_y)), j.apply(x_jy)))) f.in_int = false;
      if (f.in_ab && !(jx_jy == xy)) f.in_ab = false;
      if (f.in_C && !(jx_y == j_xy)) f.in_C = false;
      if (f.in_Ch && !(jx_y == x_jy)) f.in_Ch = false;
      if (f.in_Cbar && !(jx_y == scale(Rational(-1), j_xy))) f.in_Cbar = false;
    }
  }
  return f;
}

ClassificationFlags classify(const LieAlgebra& a, const AlmostComplexStructure& j) { return classify(a.constants(), j); }

BracketDecomposition decompose_bracket(const BracketTensor<Rational>& t, const AlmostComplexStructure& j) {
  const std::size_t n = t.dim();
  check_size(n, j);
  const Rational half(1, 2);
  std::vector<Vec<Rational>> je;
  for (std::size_t a = 0; a < n; ++a) je.push_back(j.matrix().column(a));
  BracketDecomposition d;
  d.ab = BracketTensor<Rational>::from_basis_values(n, [&](std::size_t a, std::size_t b) {
    return scale(half, add(t.bracket_basis(a, b), t.bracket(je[a], je[b])));
  });
  const auto rest = BracketTensor<Rational>::from_basis_values(n, [&](std::size_t a, std::size_t b) {
    return scale(half, sub(t.bracket_basis(a, b), t.bracket(je[a], je[b])));
  });
  d.c = BracketTensor<Rational>::from_basis_values(n, [&](std::size_t a, std::size_t b) {
    return scale(half, sub(rest.bracket_basis(a, b), j.apply(rest.bracket(je[a], unit_vec<Rational>(n, b)))));
  });
  d.cbar = BracketTensor<Rational>::from_basis_values(n, [&](std::size_t a, std::size_t b) {
    return scale(half, add(rest.bracket_basis(a, b), j.apply(rest.bracket(je[a], unit_vec<Rational>(n, b)))));
  });
  return d;
}

bool is_invariant(const Subspace<Rational>& s, const AlmostComplexStructure& j) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!s.contains(j.apply(s.vector(i)))) return false;
  }
  return true;
}

ConjugationSplit make_conjugation_split(const TwoStepPresentation<Rational>& pres, const AlmostComplexStructure& j) {
  const std::size_t n = pres.algebra.dim();
  check_size(n, j);
  if (!is_invariant(pres.w1, j)) throw InvalidPresentation("W1 is not J-invariant");
  if (!is_invariant(pres.w2, j)) throw InvalidPresentation("W2 is not J-invariant");
  std::vector<Vec<Rational>> us;
  std::vector<Vec<Rational>> taken;
  for (std::size_t i = 0; i < pres.w1.dim(); ++i) {
    Vec<Rational> w = pres.w1.vector(i);
    if (!taken.empty() && Subspace<Rational>::span(n, taken).contains(w)) continue;
    taken.push_back(w);
    taken.push_back(j.apply(w));
    us.push_back(std::move(w));
  }
  std::vector<Vec<Rational>> cols;
  Vec<Rational> signs;
  for (const auto& u : us) {
    cols.push_back(u);
    signs.emplace_back(1);
  }
  for (const auto& u : us) {
    cols.push_back(j.apply(u));
    signs.emplace_back(-1);
  }
  for (std::size_t i = 0; i < pres.w2.dim(); ++i) {
    cols.push_back(pres.w2.vector(i));
    signs.emplace_back(1);
  }
  const Matrix<Rational> p = Matrix<Rational>::from_columns(cols, n);
  Matrix<Rational> phi = n == 0 ? p : p * Matrix<Rational>::diagonal(signs) * inverse(p);
  return ConjugationSplit{pres, j, std::move(phi)};
}

ConjugationSplit default_conjugation_split(const LieAlgebra& a, const AlmostComplexStructure& j) {
  const std::size_t n = a.dim();
  check_size(n, j);
  const auto info = nilpotency(a);
  if (!info.nilpotent || info.step > 2) throw NotTwoStep("conjugation needs an algebra of step at most 2");
  const Subspace<Rational> w2 = derived_subalgebra(a);
  if (!is_invariant(w2, j)) throw InvalidPresentation("derived algebra is not J-invariant");
  std::vector<Vec<Rational>> current = w2.vectors();
  std::vector<Vec<Rational>> w1;
  for (std::size_t m = 0; m < n && current.size() < n; ++m) {
    Vec<Rational> e = unit_vec<Rational>(n, m);
    if (!current.empty() && Subspace<Rational>::span(n, current).contains(e)) continue;
    Vec<Rational> je = j.apply(e);
    current.push_back(e);
    current.push_back(je);
    w1.push_back(std::move(e));
    w1.push_back(std::move(je));
  }
  const auto w1_space = Subspace<Rational>::from_independent_columns(Matrix<Rational>::from_columns(w1, n));
  return make_conjugation_split(make_presentation(a, w1_space, w2), j);
}

LieAlgebra conjugate_bracket(const ConjugationSplit& split) {
  return act_gl(split.presentation.algebra, split.phi);
}

namespace {

/// Interleaved realification of the bracket with coefficient twist(i^(s+t) c).
template <class Twist>
BracketTensor<Rational> realified_constants(const BracketTensor<Gaussian>& c, Twist twist) {
  const std::size_t n = c.dim();
  const Gaussian powers[3] = {Gaussian(1), Gaussian::i(), Gaussian(-1)};
  return BracketTensor<Rational>::from_basis_values(2 * n, [&](std::size_t x, std::size_t y) {
    Vec<Rational> out(2 * n, Rational(0));
    const std::size_t a = x / 2;
    const std::size_t b = y / 2;
    const Gaussian w = powers[x % 2 + y % 2];
    for (std::size_t k = 0; k < n; ++k) {
      const Gaussian& ck = c.coefficient(a, b, k);
      if (ck.is_zero()) continue;
      const Gaussian v = twist(w * ck);
      out[2 * k] = v.re();
      out[2 * k + 1] = v.im();
    }
    return out;
  });
}

BracketTensor<Gaussian> as_gaussian(const BracketTensor<Rational>& t) {
  return BracketTensor<Gaussian>::from_basis_values(
      t.dim(), [&](std::size_t a, std::size_t b) { return to_gaussian(t.bracket_basis(a, b)); });
}

}  // namespace

RealifiedAlgebra realify(const ComplexLieAlgebra& a) {
  auto t = realified_constants(a.constants(), [](const Gaussian& z) { return z; });
  return {LieAlgebra::trusted(std::move(t)), AlmostComplexStructure::standard(2 * a.dim())};
}

RealifiedAlgebra complexify(const LieAlgebra& h) {
  return realify(ComplexLieAlgebra::trusted(as_gaussian(h.constants())));
}

RealifiedAlgebra anticomplexify(const LieAlgebra& h) {
  const auto info = nilpotency(h);
  if (!info.nilpotent || info.step > 2) {
    throw NotTwoStep("anti-complexification satisfies Jacobi only for algebras of step at most 2");
  }
  auto t = realified_constants(as_gaussian(h.constants()), [](const Gaussian& z) { return z.conjugate(); });
  return {LieAlgebra::validate(std::move(t)), AlmostComplexStructure::standard(2 * h.dim())};
}

AlmostComplexStructure j_flip(const LieAlgebra& a, const AlmostComplexStructure& j, const InnerProduct& ip) {
  const std::size_t n = a.dim();
  check_size(n, j);
  if (ip.dim() != n) throw DimensionMismatch("metric and algebra differ in dimension");
  const Subspace<Rational> z = center(a);
  if (!is_invariant(z, j)) throw PreconditionFailed("center is not J-invariant");
  Subspace<Rational> zperp = Subspace<Rational>::whole(n);
  if (z.dim() > 0) zperp = kernel(z.basis().transpose() * ip.gram());
  if (!is_invariant(zperp, j)) throw PreconditionFailed("orthogonal complement of the center is not J-invariant");
  auto cols = z.vectors();
  Vec<Rational> signs(z.dim(), Rational(1));
  for (auto& v : zperp.vectors()) {
    cols.push_back(std::move(v));
    signs.emplace_back(-1);
  }
  const Matrix<Rational> p = Matrix<Rational>::from_columns(cols, n);
  return AlmostComplexStructure(j.matrix() * p * Matrix<Rational>::diagonal(signs) * inverse(p));
}

}  // namespace nilherm
