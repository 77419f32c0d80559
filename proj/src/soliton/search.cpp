#include "nilherm/soliton/search.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <random>

namespace nilherm {

void FlowConfig::validate() const {
  if (!(tol > 0)) throw Error("tol must be positive");
  if (restarts == 0) throw Error("at least one restart is needed");
  if (!(step > 0)) throw Error("step must be positive");
}

std::string to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::CertificateFound:
      return "certificate-found";
    case SearchVerdict::NoCertificateFound:
      break;
  }
  return "no-certificate-found";
}

SolitonProblem::SolitonProblem(const LieAlgebra& a) : algebra_(a), n_(a.dim()) {
  if (!nilpotency(a).nilpotent) throw NotNilpotent("soliton search needs a nilpotent algebra");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Vec<Rational> v = a.bracket_basis(i, j);
      if (is_zero_vec(v)) continue;
      Eigen::VectorXd d(n_);
      for (std::size_t k = 0; k < n_; ++k) d(k) = to_double(v[k]);
      brackets_.push_back({i, j, d});
    }
  for (const auto& m : derivation_basis(a)) {
    Eigen::MatrixXd d(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t s = 0; s < n_; ++s) d(r, s) = to_double(m(r, s));
    derivations_.push_back(std::move(d));
  }
}

Eigen::MatrixXd SolitonProblem::frame_ricci(const Eigen::MatrixXd& l) const {
  const auto n = static_cast<Eigen::Index>(n_);
  // Orthonormal frame f_i = sum_a B(a,i) e_a with B = L^{-T}; coordinates in it are L^T x.
  const Eigen::MatrixXd b = l.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(n, n));
  // c[i*n + j] = coordinates of [f_i, f_j].
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n * n);
  for (const auto& p : brackets_) {
    const Eigen::VectorXd w = l.transpose() * p.value;
    const auto a = static_cast<Eigen::Index>(p.a);
    const auto bb = static_cast<Eigen::Index>(p.b);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double s = b(a, i) * b(bb, j) - b(bb, i) * b(a, j);
        if (s == 0) continue;
        c.col(i * n + j) += s * w;
      }
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) c.col(j * n + i) = -c.col(i * n + j);
  // <Ric f_k, f_l> = -1/2 sum_{i,j} c_{ki}^j c_{li}^j + 1/4 sum_{i,j} c_{ij}^k c_{ij}^l.
  Eigen::MatrixXd ric = 0.25 * c * c.transpose();
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::MatrixXd a(n, n);  // row k = [f_k, f_i]
    for (Eigen::Index k = 0; k < n; ++k) a.row(k) = c.col(k * n + i).transpose();
    ric.noalias() -= 0.5 * a * a.transpose();
  }
  return ric;
}

double SolitonProblem::residual_from_factor(const Eigen::MatrixXd& l) const {
  const auto n = static_cast<Eigen::Index>(n_);
  const Eigen::MatrixXd ric = frame_ricci(l);
  const double norm = ric.norm();
  if (norm < 1e-300) return 0.0;
  const Eigen::MatrixXd b = l.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(n, n));
  Eigen::MatrixXd span(n * n, static_cast<Eigen::Index>(derivations_.size()) + 1);
  span.col(0) = Eigen::Map<const Eigen::VectorXd>(Eigen::MatrixXd::Identity(n, n).eval().data(), n * n);
  for (std::size_t k = 0; k < derivations_.size(); ++k) {
    const Eigen::MatrixXd d = l.transpose() * derivations_[k] * b;
    span.col(static_cast<Eigen::Index>(k) + 1) = Eigen::Map<const Eigen::VectorXd>(d.data(), n * n);
  }
  const Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(ric.data(), n * n);
  const Eigen::VectorXd x = span.completeOrthogonalDecomposition().solve(r);
  return (r - span * x).norm() / std::max(norm, 1e-300);
}

double SolitonProblem::residual(const Eigen::MatrixXd& g) const {
  if (g.rows() != static_cast<Eigen::Index>(n_) || g.cols() != static_cast<Eigen::Index>(n_)) {
    throw DimensionMismatch("metric has wrong size");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
  if (n_ > 0 && eig.eigenvalues().minCoeff() < 1e-10) throw NotPositiveDefinite("metric is degenerate");
  if (n_ == 0) return 0.0;
  const Eigen::LLT<Eigen::MatrixXd> llt(g);
  return residual_from_factor(llt.matrixL());
}

Eigen::MatrixXd SolitonProblem::ricci(const Eigen::MatrixXd& g) const {
  const Eigen::LLT<Eigen::MatrixXd> llt(g);
  const Eigen::MatrixXd l = llt.matrixL();
  const auto n = static_cast<Eigen::Index>(n_);
  const Eigen::MatrixXd b = l.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(n, n));
  // Operator in frame coordinates is symmetric; back to the original basis: B Ric' B^{-1}.
  return b * frame_ricci(l) * l.transpose();
}

double soliton_residual(const LieAlgebra& a, const Eigen::MatrixXd& g) { return SolitonProblem(a).residual(g); }

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw Error("cannot rationalize a non-finite value");
  const bool neg = x < 0;
  double y = std::fabs(x);
  // Convergents h/k of the continued fraction of y.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(y));
  mpz_class k_prev = 0, k = 1;
  double frac = y - std::floor(y);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    y = 1.0 / frac;
    const double a_d = std::floor(y);
    if (a_d > 1e15) break;
    const mpz_class a = static_cast<long>(a_d);
    const mpz_class h_next = a * h + h_prev;
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = y - a_d;
  }
  Rational q(h, k);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

namespace {

struct Parameters {
  std::size_t n;
  std::size_t size() const { return n * (n + 1) / 2; }

  Eigen::MatrixXd factor(const Eigen::VectorXd& theta) const {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    double mean = 0;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mean += theta(static_cast<Eigen::Index>(idx + i));
      idx += i + 1;
    }
    mean /= static_cast<double>(n);
    idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j, ++idx) {
        const double v = theta(static_cast<Eigen::Index>(idx));
        l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = i == j ? std::exp(v - mean) : v;
      }
    return l;
  }
};

RestartResult run_restart(const SolitonProblem& prob, const FlowConfig& cfg, std::size_t r) {
  const std::size_t n = prob.dim();
  const Parameters par{n};
  const auto m = static_cast<Eigen::Index>(par.size());
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(m);
  if (r > 0) {
    std::mt19937_64 rng(cfg.seed + r);
    std::uniform_real_distribution<double> diag(-1.0, 1.0);
    std::uniform_real_distribution<double> off(-0.7, 0.7);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j, ++idx) theta(static_cast<Eigen::Index>(idx)) = i == j ? diag(rng) : off(rng);
  }
  auto objective = [&](const Eigen::VectorXd& t) {
    const double res = prob.residual_from_factor(par.factor(t));
    return res * res;
  };
  auto gradient = [&](const Eigen::VectorXd& t) {
    Eigen::VectorXd g(m);
    Eigen::VectorXd tp = t;
    for (Eigen::Index k = 0; k < m; ++k) {
      const double h = 1e-6 * std::max(1.0, std::fabs(t(k)));
      tp(k) = t(k) + h;
      const double fp = objective(tp);
      tp(k) = t(k) - h;
      const double fm = objective(tp);
      tp(k) = t(k);
      g(k) = (fp - fm) / (2 * h);
    }
    return g;
  };

  RestartResult out;
  double f = objective(theta);
  out.residuals.push_back(std::sqrt(f));
  const double stop = cfg.tol * 1e-2;
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd g = m > 0 ? gradient(theta) : Eigen::VectorXd();
  bool first = true;
  for (std::size_t it = 0; it < cfg.max_iters && m > 0; ++it) {
    if (std::sqrt(f) < stop || g.norm() == 0) break;
    Eigen::VectorXd dir = -hinv * g;
    if (dir.dot(g) >= 0) {
      hinv.setIdentity();
      dir = -g;
    }
    double alpha = first ? cfg.step / std::max(dir.norm(), 1e-300) : 1.0;
    first = false;
    const double slope = dir.dot(g);
    double f_new = f;
    bool accepted = false;
    for (int ls = 0; ls < 50; ++ls) {
      f_new = objective(theta + alpha * dir);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (hinv.isIdentity()) break;
      hinv.setIdentity();
      continue;
    }
    const Eigen::VectorXd s = alpha * dir;
    theta += s;
    const Eigen::VectorXd g_new = gradient(theta);
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-300) {
      const Eigen::VectorXd hy = hinv * y;
      hinv += ((sy + y.dot(hy)) / (sy * sy)) * (s * s.transpose()) - (hy * s.transpose() + s * hy.transpose()) / sy;
    }
    g = g_new;
    f = f_new;
    out.residuals.push_back(std::sqrt(f));
    // Stalled: the residual did not halve over the last 100 accepted steps.
    if (out.residuals.size() > 100 && out.residuals.back() > 0.5 * out.residuals[out.residuals.size() - 101]) break;
  }
  const Eigen::MatrixXd l = par.factor(theta);
  Eigen::MatrixXd metric = l * l.transpose();
  if (cfg.normalization == Normalization::FixedScalarCurvature && n > 0) {
    const double scal = prob.ricci(metric).trace();
    if (scal < 0) metric *= -scal;
  }
  out.metric = metric;
  out.final_residual = out.residuals.back();
  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(metric);
    out.condition = eig.eigenvalues().maxCoeff() / eig.eigenvalues().minCoeff();
  }
  if (out.final_residual < cfg.tol) {
    Matrix<Rational> q(n, n);
    const double scale = n > 0 ? metric(0, 0) : 1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        q(i, j) = rationalize(metric(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) / scale, 10000);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) q(j, i) = q(i, j);
    out.rational_metric = q;
    try {
      out.certificate = nilsoliton_check(prob.algebra(), InnerProduct(q));
    } catch (const NotPositiveDefinite&) {
      out.certificate.reset();
    }
  }
  return out;
}

}  // namespace

FlowTrace soliton_search(const LieAlgebra& a, const FlowConfig& cfg) {
  cfg.validate();
  const SolitonProblem prob(a);
  std::vector<std::future<RestartResult>> jobs;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    jobs.push_back(std::async(std::launch::async, [&prob, &cfg, r] { return run_restart(prob, cfg, r); }));
  }
  FlowTrace trace;
  for (auto& j : jobs) trace.restarts.push_back(j.get());
  std::optional<std::size_t> certified;
  std::size_t best = 0;
  for (std::size_t r = 0; r < trace.restarts.size(); ++r) {
    if (!certified && trace.restarts[r].certificate) certified = r;
    if (trace.restarts[r].final_residual < trace.restarts[best].final_residual) best = r;
  }
  trace.min_residual = trace.restarts[best].final_residual;
  if (certified) {
    trace.chosen = *certified;
    trace.verdict = SearchVerdict::CertificateFound;
  } else {
    trace.chosen = best;
    trace.verdict = SearchVerdict::NoCertificateFound;
    trace.heuristic = trace.min_residual < cfg.tol;
  }
  return trace;
}

}  // namespace nilherm
