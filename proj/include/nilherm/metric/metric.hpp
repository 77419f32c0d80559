#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "nilherm/acs/acs.hpp"
#include "nilherm/metric/inner_product.hpp"

namespace nilherm {

/// Levi-Civita connection of a left-invariant metric: coefficient vectors of nabla_{e_a} e_b.
class Connection {
 public:
  Connection() = default;
  Connection(std::size_t dim, std::vector<Vec<Rational>> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {}

  std::size_t dim() const { return dim_; }
  const Vec<Rational>& basis(std::size_t a, std::size_t b) const { return coeffs_[a * dim_ + b]; }

  /// nabla_x y, bilinear in (x, y).
  Vec<Rational> apply(const Vec<Rational>& x, const Vec<Rational>& y) const;

  /// Complex-bilinear extension to the complexified algebra.
  Vec<Gaussian> apply(const Vec<Gaussian>& x, const Vec<Gaussian>& y) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vec<Rational>> coeffs_;
};

/// Koszul formula 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
Connection levi_civita(const LieAlgebra& a, const InnerProduct& ip);

/// R(a,b,c,d) = <R(e_a,e_b)e_c, e_d> with R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y].
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return data_[index(a, b, c, d)]; }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return data_[index(a, b, c, d)];
  }

  /// Tensor with J inserted in the given slot: R'(..., e_k, ...) = R(..., J e_k, ...).
  CurvatureTensor with_j(const Matrix<Rational>& j, std::size_t slot) const;

  friend bool operator==(const CurvatureTensor& x, const CurvatureTensor& y) {
    return x.dim_ == y.dim_ && x.data_ == y.data_;
  }

 private:
  std::size_t index(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return ((a * dim_ + b) * dim_ + c) * dim_ + d;
  }
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

CurvatureTensor curvature(const LieAlgebra& a, const InnerProduct& ip);

/// R(X,Y)Z on the complexified algebra (complex-trilinear extension).
Vec<Gaussian> complex_curvature(const LieAlgebra& a, const Connection& nabla, const Vec<Gaussian>& x,
                                const Vec<Gaussian>& y, const Vec<Gaussian>& z);

/// Complex-bilinear extension of the bracket.
Vec<Gaussian> complex_bracket(const LieAlgebra& a, const Vec<Gaussian>& x, const Vec<Gaussian>& y);

/// Z_k = e_k - i J e_k.
Vec<Gaussian> holomorphic_vector(const AlmostComplexStructure& j, std::size_t k);

/// Complex-independent (1,0) vectors Z_k picked greedily over k = 0, 1, ...
std::vector<Vec<Gaussian>> holomorphic_frame(const AlmostComplexStructure& j);

enum class GrayIdentity { G1, G2, G3 };

/// G1: R(JX,JY,Z,W) = R(X,Y,Z,W)
/// G2: R(X,Y,Z,W) - R(JX,JY,Z,W) = R(JX,Y,JZ,W) + R(JX,Y,Z,JW)
/// G3: R(JX,JY,JZ,JW) = R(X,Y,Z,W)
struct GrayResult {
  bool holds = true;
  std::optional<std::array<std::size_t, 4>> witness;  // lexicographically first failure
};

GrayResult gray_check(const CurvatureTensor& r, const AlmostComplexStructure& j, GrayIdentity which);

/// Ricci operator. Uses the Gram form of
///   <Ric X, Y> = -1/2 sum <[X,X_i],X_j><[Y,X_i],X_j> + 1/4 sum <[X_i,X_j],X><[X_i,X_j],Y>,
/// which needs no orthonormal basis. Throws NotNilpotent.
Matrix<Rational> ricci(const LieAlgebra& a, const InnerProduct& ip);

/// Ricci operator as the contraction Ric(Y,Z) = tr(X -> R(X,Y)Z), raised with the metric.
Matrix<Rational> ricci_from_curvature(const CurvatureTensor& r, const InnerProduct& ip);

/// (Ric - J Ric J) / 2.
Matrix<Rational> ricci_one_one(const LieAlgebra& a, const InnerProduct& ip, const AlmostComplexStructure& j);

struct SolitonCertificate {
  Rational c;
  Matrix<Rational> d;
};

/// Exact test of Ric = cI + D with D a derivation, for this metric. Throws NotNilpotent.
std::optional<SolitonCertificate> nilsoliton_check(const LieAlgebra& a, const InnerProduct& ip);

/// Same test applied to Ric^J.
std::optional<SolitonCertificate> minimal_check(const LieAlgebra& a, const InnerProduct& ip,
                                                const AlmostComplexStructure& j);

/// op = cI + D solved over the derivations of a, if possible.
std::optional<SolitonCertificate> soliton_decomposition(const LieAlgebra& a, const Matrix<Rational>& op);

struct PairResult {
  bool holds = true;
  std::optional<std::array<std::size_t, 2>> witness;
};

/// The (0,1) part of nabla_{Zbar_a} Z_b vanishes for all basis indices a, b,
/// with Z_b = e_b - iJe_b and Zbar_a = e_a + iJe_a.
PairResult quasi_kahler_check(const LieAlgebra& a, const InnerProduct& ip, const AlmostComplexStructure& j);

/// [JX,Y] = [X,JY] for all X, Y.
bool chern_flat_check(const LieAlgebra& a, const AlmostComplexStructure& j);

/// Strong Kaehler with torsion test for Chern-flat Hermitian structures with integrable J.
/// Throws PreconditionFailed outside these hypotheses.
bool skt_check(const LieAlgebra& a, const InnerProduct& ip, const AlmostComplexStructure& j);

struct HermitianReport {
  ClassificationFlags classification;
  bool compatible = false;  // J^T G J = G
  bool chern_flat = false;
  bool quasi_kahler = false;
  std::optional<bool> skt;  // only evaluated under the hypotheses of skt_check
  bool g1 = false;
  bool g2 = false;
  bool g3 = false;
  bool in_CP2 = false;
  bool in_QK0 = false;
  std::optional<std::array<std::size_t, 2>> quasi_kahler_witness;
  std::optional<std::array<std::size_t, 4>> g1_witness;
  std::optional<std::array<std::size_t, 4>> g2_witness;
  std::optional<std::array<std::size_t, 4>> g3_witness;
};

HermitianReport hermitian_report(const LieAlgebra& a, const InnerProduct& ip, const AlmostComplexStructure& j);

}  // namespace nilherm
