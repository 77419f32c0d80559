#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "nilherm/lie/lie_algebra.hpp"
#include "nilherm/metric/inner_product.hpp"

namespace nilherm {

/// Rational J with J^2 = -I.
class AlmostComplexStructure {
 public:
  AlmostComplexStructure() = default;

  /// Throws PreconditionFailed when J^2 != -I.
  explicit AlmostComplexStructure(Matrix<Rational> j);

  /// J e_{2k} = e_{2k+1}, J e_{2k+1} = -e_{2k}: multiplication by i in the interleaved basis.
  static AlmostComplexStructure standard(std::size_t dim);

  std::size_t dim() const { return j_.rows(); }
  const Matrix<Rational>& matrix() const { return j_; }
  Vec<Rational> apply(const Vec<Rational>& v) const { return j_.apply(v); }

  friend bool operator==(const AlmostComplexStructure& a, const AlmostComplexStructure& b) {
    return a.j_ == b.j_;
  }

 private:
  Matrix<Rational> j_;
};

struct ClassificationFlags {
  bool in_int = false;
  bool in_ab = false;
  bool in_C = false;
  bool in_Ch = false;
  bool in_Cbar = false;
};

/// Each flag is the truth value of its identity over all basis pairs (X, Y):
///   int:  [JX,JY] = [X,Y] + J[JX,Y] + J[X,JY]
///   ab:   [JX,JY] = [X,Y]
///   C:    [JX,Y] = J[X,Y]
///   Ch:   [JX,Y] = [X,JY]
///   Cbar: [JX,Y] = -J[X,Y]
ClassificationFlags classify(const BracketTensor<Rational>& bracket, const AlmostComplexStructure& j);
ClassificationFlags classify(const LieAlgebra& a, const AlmostComplexStructure& j);

struct BracketDecomposition {
  BracketTensor<Rational> ab;
  BracketTensor<Rational> c;
  BracketTensor<Rational> cbar;
};

/// V = V(ab) + V(C) + V(Cbar). Accepts brackets that do not satisfy Jacobi.
BracketDecomposition decompose_bracket(const BracketTensor<Rational>& bracket, const AlmostComplexStructure& j);

/// Presentation with J-invariant W1, W2 and the map phi (+1 on the chosen real vectors u_k of W1
/// and on W2, -1 on the J u_k).
struct ConjugationSplit {
  TwoStepPresentation<Rational> presentation;
  AlmostComplexStructure j;
  Matrix<Rational> phi;
};

/// Builds phi from a presentation whose W1 and W2 are J-invariant. The u_k are picked greedily
/// from the W1 basis. Throws InvalidPresentation.
ConjugationSplit make_conjugation_split(const TwoStepPresentation<Rational>& pres, const AlmostComplexStructure& j);

/// W2 = [n,n]; W1 is spanned by pairs (e_m, J e_m) taken greedily over the standard basis.
/// Abelian algebras are accepted (W2 = 0). Throws NotTwoStep, InvalidPresentation.
ConjugationSplit default_conjugation_split(const LieAlgebra& a, const AlmostComplexStructure& j);

/// phi.lambda = phi[phi ., phi .].
LieAlgebra conjugate_bracket(const ConjugationSplit& split);

struct RealifiedAlgebra {
  LieAlgebra algebra;
  AlmostComplexStructure j;
};

/// Real form of a complex algebra in the interleaved basis (X1, iX1, X2, iX2, ...), J = i.
RealifiedAlgebra realify(const ComplexLieAlgebra& a);

/// h (x) C with the bilinear bracket.
RealifiedAlgebra complexify(const LieAlgebra& h);

/// h (x) C with [X a, Y b] = conj(ab)[X,Y]. Throws NotTwoStep unless h is at most 2-step.
RealifiedAlgebra anticomplexify(const LieAlgebra& h);

/// J on the center, -J on its orthogonal complement. Applying it twice returns J.
/// Throws PreconditionFailed when either subspace is not J-invariant.
AlmostComplexStructure j_flip(const LieAlgebra& a, const AlmostComplexStructure& j, const InnerProduct& ip);

/// Subspace is mapped into itself by J.
bool is_invariant(const Subspace<Rational>& s, const AlmostComplexStructure& j);

}  // namespace nilherm
