#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilherm/metric/metric.hpp"

namespace nilherm {

enum class Normalization { UnitDeterminant, FixedScalarCurvature };

struct FlowConfig {
  std::size_t max_iters = 5000;
  double tol = 1e-8;
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  double step = 0.1;
  Normalization normalization = Normalization::UnitDeterminant;

  /// Throws Error when tol <= 0, restarts == 0 or step <= 0.
  void validate() const;
};

enum class SearchVerdict { CertificateFound, NoCertificateFound };
std::string to_string(SearchVerdict v);

struct RestartResult {
  std::vector<double> residuals;  // one per accepted iterate, non-increasing
  Eigen::MatrixXd metric;
  double final_residual = 0;
  double condition = 1;
  std::optional<Matrix<Rational>> rational_metric;
  std::optional<SolitonCertificate> certificate;  // exact, on rational_metric
};

struct FlowTrace {
  std::vector<RestartResult> restarts;
  std::size_t chosen = 0;
  SearchVerdict verdict = SearchVerdict::NoCertificateFound;
  double min_residual = 0;
  bool heuristic = false;  // residual below tol without an exactly verified certificate

  const RestartResult& best() const { return restarts[chosen]; }
};

/// Precomputed float data of an algebra: structure constants and a derivation basis.
class SolitonProblem {
 public:
  /// Throws NotNilpotent.
  explicit SolitonProblem(const LieAlgebra& a);

  std::size_t dim() const { return n_; }
  const LieAlgebra& algebra() const { return algebra_; }

  /// ||Ric - P Ric|| / max(||Ric||, eps) in a g-orthonormal frame, P the orthogonal projection
  /// onto span{I} + Der. Throws NotPositiveDefinite for degenerate g.
  double residual(const Eigen::MatrixXd& g) const;

  /// Same, for g = L L^T with L lower triangular.
  double residual_from_factor(const Eigen::MatrixXd& l) const;

  /// Ricci operator in the original basis (float).
  Eigen::MatrixXd ricci(const Eigen::MatrixXd& g) const;

 private:
  /// Ricci operator in the orthonormal frame given by the columns of L^{-T}.
  Eigen::MatrixXd frame_ricci(const Eigen::MatrixXd& l) const;

  LieAlgebra algebra_;
  std::size_t n_;
  struct Pair {
    std::size_t a, b;
    Eigen::VectorXd value;
  };
  std::vector<Pair> brackets_;
  std::vector<Eigen::MatrixXd> derivations_;
};

double soliton_residual(const LieAlgebra& a, const Eigen::MatrixXd& g);

/// Multi-restart descent over g = L L^T (L lower triangular with positive diagonal).
/// Restart 0 starts at the identity, restart r > 0 at a random metric seeded by seed + r.
FlowTrace soliton_search(const LieAlgebra& a, const FlowConfig& cfg);

/// Continued-fraction approximation with denominator at most max_den.
Rational rationalize(double x, long max_den);

}  // namespace nilherm
