#include "nilherm/lie/lie_algebra.hpp"

#include "nilherm/io/document.hpp"

namespace nilherm {

template <class K>
std::string describe(const BracketTensor<K>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      Vec<K> v = t.bracket_basis(i, j);
      if (is_zero_vec(v)) continue;
      if (!out.empty()) out += "; ";
      out += "[X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) + "] = ";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k])) continue;
        if (!first) out += " + ";
        out += "(" + to_string(v[k]) + ")X" + std::to_string(k + 1);
        first = false;
      }
    }
  }
  return out.empty() ? "abelian" : out;
}

template <class K>
BracketTensor<K> act_gl(const BracketTensor<K>& t, const Matrix<K>& g) {
  if (g.rows() != t.dim() || g.cols() != t.dim()) throw DimensionMismatch("act_gl: matrix size differs from dimension");
  const Matrix<K> ginv = inverse(g);
  std::vector<Vec<K>> cols;
  for (std::size_t i = 0; i < t.dim(); ++i) cols.push_back(ginv.column(i));
  return BracketTensor<K>::from_basis_values(
      t.dim(), [&](std::size_t i, std::size_t j) { return g.apply(t.bracket(cols[i], cols[j])); });
}

template <class K>
Vec<K> jacobi_sum(const BracketTensor<K>& t, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = t.dim();
  Vec<K> s = t.bracket(t.bracket_basis(i, j), unit_vec<K>(n, k));
  s = add(std::move(s), t.bracket(t.bracket_basis(j, k), unit_vec<K>(n, i)));
  s = add(std::move(s), t.bracket(t.bracket_basis(k, i), unit_vec<K>(n, j)));
  return s;
}

template <class K>
BasicLieAlgebra<K> BasicLieAlgebra<K>::validate(BracketTensor<K> constants) {
  const std::size_t n = constants.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec<K> s = jacobi_sum(constants, i, j, k);
        if (!is_zero_vec(s)) throw JacobiViolation({i, j, k}, format_combo(s, default_basis_names(n)));
      }
    }
  }
  return BasicLieAlgebra(std::move(constants));
}

template <class K>
BasicLieAlgebra<K> BasicLieAlgebra<K>::trusted(BracketTensor<K> constants) {
#ifndef NDEBUG
  return validate(std::move(constants));
#else
  return BasicLieAlgebra(std::move(constants));
#endif
}

namespace {

/// Span of all [x, y] for x in xs, y in ys.
template <class K>
Subspace<K> bracket_span(const BracketTensor<K>& t, const std::vector<Vec<K>>& xs, const std::vector<Vec<K>>& ys) {
  std::vector<Vec<K>> out;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      Vec<K> b = t.bracket(x, y);
      if (!is_zero_vec(b)) out.push_back(std::move(b));
    }
  }
  return Subspace<K>::span(t.dim(), out);
}

template <class K>
std::vector<Vec<K>> standard_basis(std::size_t n) {
  std::vector<Vec<K>> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vec<K>(n, i));
  return b;
}

}  // namespace

template <class K>
std::vector<Subspace<K>> lower_central_series(const BasicLieAlgebra<K>& a) {
  const std::size_t n = a.dim();
  std::vector<Subspace<K>> series{Subspace<K>::whole(n)};
  const auto basis = standard_basis<K>(n);
  while (series.back().dim() > 0) {
    Subspace<K> next = bracket_span(a.constants(), basis, series.back().vectors());
    const bool stable = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

template <class K>
NilpotencyInfo nilpotency(const BasicLieAlgebra<K>& a) {
  NilpotencyInfo info;
  for (const auto& s : lower_central_series(a)) info.series_dims.push_back(s.dim());
  info.nilpotent = info.series_dims.back() == 0;
  if (info.nilpotent) info.step = info.series_dims.size() - 1;
  return info;
}

template <class K>
Subspace<K> center(const BasicLieAlgebra<K>& a) {
  const std::size_t n = a.dim();
  // Row (j, k), column i: coefficient of X_k in [X_i, X_j].
  Matrix<K> m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = a.constants().coefficient(i, j, k);
  return kernel(m);
}

template <class K>
Subspace<K> derived_subalgebra(const BasicLieAlgebra<K>& a) {
  const auto basis = standard_basis<K>(a.dim());
  return bracket_span(a.constants(), basis, basis);
}

template <class K>
Subspace<K> derivation_space(const BasicLieAlgebra<K>& a) {
  const std::size_t n = a.dim();
  const auto& c = a.constants();
  // Unknown D(r, s) sits at column r*n + s. One row per (i<j, k):
  //   sum_m D(k,m) c_ij^m - sum_m D(m,i) c_mj^k - sum_m D(m,j) c_im^k = 0.
  std::vector<Vec<K>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec<K> row(n * n, K(0));
        for (std::size_t m = 0; m < n; ++m) {
          row[k * n + m] += c.coefficient(i, j, m);
          row[m * n + i] -= c.coefficient(m, j, k);
          row[m * n + j] -= c.coefficient(i, m, k);
        }
        if (!is_zero_vec(row)) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return Subspace<K>::whole(n * n);
  return kernel(Matrix<K>::from_rows(rows));
}

template <class K>
std::vector<Matrix<K>> derivation_basis(const BasicLieAlgebra<K>& a) {
  const std::size_t n = a.dim();
  const auto space = derivation_space(a);
  std::vector<Matrix<K>> out;
  for (std::size_t b = 0; b < space.dim(); ++b) {
    Matrix<K> d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) d(r, s) = space.basis()(r * n + s, b);
    out.push_back(std::move(d));
  }
  return out;
}

template <class K>
bool is_derivation(const BasicLieAlgebra<K>& a, const Matrix<K>& d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation candidate has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<K> lhs = d.apply(a.bracket_basis(i, j));
      Vec<K> rhs = add(a.bracket(d.column(i), unit_vec<K>(n, j)), a.bracket(unit_vec<K>(n, i), d.column(j)));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

template <class K>
BasicLieAlgebra<K> act_gl(const BasicLieAlgebra<K>& a, const Matrix<K>& g) {
  return BasicLieAlgebra<K>::trusted(act_gl(a.constants(), g));
}

template <class K>
Vec<K> coordinates_in(const Subspace<K>& s, const Vec<K>& v) {
  auto sol = solve_affine(s.basis(), v);
  if (!sol) throw Error("vector does not lie in the subspace");
  return sol->particular;
}

template <class K>
TwoStepPresentation<K> make_presentation(const BasicLieAlgebra<K>& a, const Subspace<K>& w1, const Subspace<K>& w2) {
  const std::size_t n = a.dim();
  if (w1.ambient_dim() != n || w2.ambient_dim() != n) throw InvalidPresentation("subspaces live in the wrong space");
  auto all = w1.vectors();
  for (auto& v : w2.vectors()) all.push_back(std::move(v));
  if (w1.dim() + w2.dim() != n || (n > 0 && rank(Matrix<K>::from_columns(all, n)) != n)) {
    throw InvalidPresentation("W1 is not a complement of W2");
  }
  const auto basis = standard_basis<K>(n);
  if (bracket_span(a.constants(), basis, w2.vectors()).dim() != 0) {
    throw InvalidPresentation("[W, W2] != 0");
  }
  const auto w1v = w1.vectors();
  if (!w2.contains(bracket_span(a.constants(), w1v, w1v))) {
    throw InvalidPresentation("[W1, W1] is not contained in W2");
  }
  return TwoStepPresentation<K>{a, w1, w2};
}

template <class K>
TwoStepPresentation<K> two_step_presentation(const BasicLieAlgebra<K>& a, const std::optional<Subspace<K>>& w1_choice) {
  const std::size_t n = a.dim();
  const auto info = nilpotency(a);
  if (!info.two_step()) {
    throw NotTwoStep(info.nilpotent ? (info.step <= 1 ? "algebra is abelian (q = 0)" : "algebra is not 2-step nilpotent")
                                    : "algebra is not nilpotent");
  }
  const Subspace<K> derived = derived_subalgebra(a);
  Matrix<K> rows = derived.basis().transpose();
  auto ech = rref(rows);
  std::vector<Vec<K>> w2_vectors;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) w2_vectors.push_back(ech.reduced.row(r));
  Subspace<K> w2 = Subspace<K>::from_independent_columns(Matrix<K>::from_columns(w2_vectors, n));
  Subspace<K> w1(n);
  if (w1_choice) {
    w1 = *w1_choice;
  } else {
    std::vector<bool> pivot(n, false);
    for (std::size_t c : ech.pivots) pivot[c] = true;
    std::vector<Vec<K>> w1_vectors;
    for (std::size_t i = 0; i < n; ++i) {
      if (!pivot[i]) w1_vectors.push_back(unit_vec<K>(n, i));
    }
    w1 = Subspace<K>::from_independent_columns(Matrix<K>::from_columns(w1_vectors, n));
  }
  return make_presentation(a, w1, w2);
}

#define NILHERM_INSTANTIATE_LIE(K)                                                                        \
  template std::string describe<K>(const BracketTensor<K>&);                                              \
  template BracketTensor<K> act_gl<K>(const BracketTensor<K>&, const Matrix<K>&);                         \
  template Vec<K> jacobi_sum<K>(const BracketTensor<K>&, std::size_t, std::size_t, std::size_t);          \
  template class BasicLieAlgebra<K>;                                                                      \
  template std::vector<Subspace<K>> lower_central_series<K>(const BasicLieAlgebra<K>&);                   \
  template NilpotencyInfo nilpotency<K>(const BasicLieAlgebra<K>&);                                       \
  template Subspace<K> center<K>(const BasicLieAlgebra<K>&);                                              \
  template Subspace<K> derived_subalgebra<K>(const BasicLieAlgebra<K>&);                                  \
  template Subspace<K> derivation_space<K>(const BasicLieAlgebra<K>&);                                    \
  template std::vector<Matrix<K>> derivation_basis<K>(const BasicLieAlgebra<K>&);                         \
  template bool is_derivation<K>(const BasicLieAlgebra<K>&, const Matrix<K>&);                            \
  template BasicLieAlgebra<K> act_gl<K>(const BasicLieAlgebra<K>&, const Matrix<K>&);                     \
  template Vec<K> coordinates_in<K>(const Subspace<K>&, const Vec<K>&);                                   \
  template TwoStepPresentation<K> make_presentation<K>(const BasicLieAlgebra<K>&, const Subspace<K>&,     \
                                                       const Subspace<K>&);                               \
  template TwoStepPresentation<K> two_step_presentation<K>(const BasicLieAlgebra<K>&,                     \
                                                           const std::optional<Subspace<K>>&);

NILHERM_INSTANTIATE_LIE(Rational)
NILHERM_INSTANTIATE_LIE(Gaussian)

#undef NILHERM_INSTANTIATE_LIE

}  // namespace nilherm
