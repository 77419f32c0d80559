#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilherm/lie/bracket.hpp"

namespace nilherm {

/// A bracket that has passed the Jacobi check. Values are immutable once built.
template <class K>
class BasicLieAlgebra {
 public:
  BasicLieAlgebra() = default;

  /// Throws JacobiViolation naming the first failing basis triple (lexicographic).
  static BasicLieAlgebra validate(BracketTensor<K> constants);

  /// For brackets whose Jacobi identity is already known (e.g. 2-step by construction);
  /// still checked in debug builds.
  static BasicLieAlgebra trusted(BracketTensor<K> constants);

  static BasicLieAlgebra abelian(std::size_t dim) { return BasicLieAlgebra(BracketTensor<K>(dim)); }

  std::size_t dim() const { return constants_.dim(); }
  static constexpr Field field() { return field_of<K>(); }
  const BracketTensor<K>& constants() const { return constants_; }

  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const { return constants_.bracket(x, y); }
  Vec<K> bracket_basis(std::size_t i, std::size_t j) const { return constants_.bracket_basis(i, j); }
  bool is_abelian() const { return constants_.is_zero(); }

  friend bool operator==(const BasicLieAlgebra& a, const BasicLieAlgebra& b) {
    return a.constants_ == b.constants_;
  }

 private:
  explicit BasicLieAlgebra(BracketTensor<K> c) : constants_(std::move(c)) {}
  BracketTensor<K> constants_;
};

using LieAlgebra = BasicLieAlgebra<Rational>;
using ComplexLieAlgebra = BasicLieAlgebra<Gaussian>;

/// Cyclic sum [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj].
template <class K>
Vec<K> jacobi_sum(const BracketTensor<K>& t, std::size_t i, std::size_t j, std::size_t k);

/// n = C0 ⊇ C1 = [n,n] ⊇ C2 = [n,C1] ⊇ ... until zero or stabilization.
template <class K>
std::vector<Subspace<K>> lower_central_series(const BasicLieAlgebra<K>& a);

struct NilpotencyInfo {
  std::vector<std::size_t> series_dims;
  bool nilpotent = false;
  std::size_t step = 0;  // nilpotency step when nilpotent (0 for the zero algebra)

  bool abelian() const { return nilpotent && step <= 1; }
  bool two_step() const { return nilpotent && step == 2; }
};

template <class K>
NilpotencyInfo nilpotency(const BasicLieAlgebra<K>& a);

template <class K>
Subspace<K> center(const BasicLieAlgebra<K>& a);

template <class K>
Subspace<K> derived_subalgebra(const BasicLieAlgebra<K>& a);

/// Derivations as a subspace of End(n) ≅ K^(n*n) in row-major flattening.
template <class K>
Subspace<K> derivation_space(const BasicLieAlgebra<K>& a);

template <class K>
std::vector<Matrix<K>> derivation_basis(const BasicLieAlgebra<K>& a);

template <class K>
bool is_derivation(const BasicLieAlgebra<K>& a, const Matrix<K>& d);

template <class K>
BasicLieAlgebra<K> act_gl(const BasicLieAlgebra<K>& a, const Matrix<K>& g);

/// W = W1 ⊕ W2 with [W1,W1] ⊆ W2 and [W,W2] = 0.
template <class K>
struct TwoStepPresentation {
  BasicLieAlgebra<K> algebra;
  Subspace<K> w1;
  Subspace<K> w2;

  std::size_t p() const { return w1.dim(); }
  std::size_t q() const { return w2.dim(); }
};

/// Checks the presentation invariants; q = 0 (abelian) is allowed here.
template <class K>
TwoStepPresentation<K> make_presentation(const BasicLieAlgebra<K>& a, const Subspace<K>& w1, const Subspace<K>& w2);

/// Canonical presentation with W2 = [n,n]. The default W1 is spanned by the standard basis
/// vectors at the non-pivot columns of the row-reduced basis of [n,n].
/// Throws NotTwoStep, InvalidPresentation.
template <class K>
TwoStepPresentation<K> two_step_presentation(const BasicLieAlgebra<K>& a,
                                             const std::optional<Subspace<K>>& w1_choice = std::nullopt);

/// Coordinates of v in the given basis (v must lie in the span).
template <class K>
Vec<K> coordinates_in(const Subspace<K>& s, const Vec<K>& v);

}  // namespace nilherm
