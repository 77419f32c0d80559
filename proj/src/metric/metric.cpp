#include "nilherm/metric/metric.hpp"

namespace nilherm {

namespace {

void check_sizes(const LieAlgebra& a, const InnerProduct& ip) {
  if (ip.dim() != a.dim()) throw DimensionMismatch("metric and algebra differ in dimension");
}

void require_nilpotent(const LieAlgebra& a) {
  if (!nilpotency(a).nilpotent) throw NotNilpotent("Ricci formula and soliton condition need a nilpotent algebra");
}

}  // namespace

Vec<Rational> Connection::apply(const Vec<Rational>& x, const Vec<Rational>& y) const {
  Vec<Rational> out(dim_, Rational(0));
  for (std::size_t a = 0; a < dim_; ++a) {
    if (is_zero(x[a])) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (is_zero(y[b])) continue;
      axpy(out, Rational(x[a] * y[b]), basis(a, b));
    }
  }
  return out;
}

Vec<Gaussian> Connection::apply(const Vec<Gaussian>& x, const Vec<Gaussian>& y) const {
  Vec<Gaussian> out(dim_, Gaussian(0));
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b].is_zero()) continue;
      const Gaussian w = x[a] * y[b];
      const Vec<Rational>& v = basis(a, b);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!is_zero(v[k])) out[k] += w * Gaussian(v[k]);
      }
    }
  }
  return out;
}

Connection levi_civita(const LieAlgebra& a, const InnerProduct& ip) {
  check_sizes(a, ip);
  const std::size_t n = a.dim();
  const Matrix<Rational>& g = ip.gram();
  // gb[x][y] = G [e_x, e_y], so <[e_x,e_y], e_z> = gb[x][y][z].
  std::vector<std::vector<Vec<Rational>>> gb(n, std::vector<Vec<Rational>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) gb[x][y] = g.apply(a.bracket_basis(x, y));
  const Rational half(1, 2);
  std::vector<Vec<Rational>> coeffs;
  coeffs.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Vec<Rational> low(n);
      for (std::size_t z = 0; z < n; ++z) low[z] = half * (gb[x][y][z] - gb[y][z][x] + gb[z][x][y]);
      coeffs.push_back(ip.inverse_gram().apply(low));
    }
  }
  return Connection(n, std::move(coeffs));
}

CurvatureTensor CurvatureTensor::with_j(const Matrix<Rational>& j, std::size_t slot) const {
  CurvatureTensor out(dim_);
  const std::size_t n = dim_;
  std::array<std::size_t, 4> idx{};
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1])
      for (idx[2] = 0; idx[2] < n; ++idx[2])
        for (idx[3] = 0; idx[3] < n; ++idx[3]) {
          const std::size_t k = idx[slot];
          std::array<std::size_t, 4> src = idx;
          Rational s = 0;
          for (std::size_t m = 0; m < n; ++m) {
            if (is_zero(j(m, k))) continue;
            src[slot] = m;
            const Rational& r = (*this)(src[0], src[1], src[2], src[3]);
            if (!is_zero(r)) s += j(m, k) * r;
          }
          out(idx[0], idx[1], idx[2], idx[3]) = s;
        }
  return out;
}

CurvatureTensor curvature(const LieAlgebra& a, const InnerProduct& ip) {
  const Connection nabla = levi_civita(a, ip);
  const std::size_t n = a.dim();
  CurvatureTensor r(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Vec<Rational> ex = unit_vec<Rational>(n, x);
    for (std::size_t y = 0; y < n; ++y) {
      const Vec<Rational> ey = unit_vec<Rational>(n, y);
      const Vec<Rational> xy = a.bracket_basis(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        Vec<Rational> v = nabla.apply(ex, nabla.basis(y, z));
        v = sub(std::move(v), nabla.apply(ey, nabla.basis(x, z)));
        v = sub(std::move(v), nabla.apply(xy, unit_vec<Rational>(n, z)));
        const Vec<Rational> gv = ip.gram().apply(v);
        for (std::size_t w = 0; w < n; ++w) r(x, y, z, w) = gv[w];
      }
    }
  }
  return r;
}

Vec<Gaussian> complex_bracket(const LieAlgebra& a, const Vec<Gaussian>& x, const Vec<Gaussian>& y) {
  const std::size_t n = a.dim();
  Vec<Gaussian> out(n, Gaussian(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Gaussian w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational c = a.constants().coefficient(i, j, k);
        if (!is_zero(c)) out[k] += w * Gaussian(c);
      }
    }
  }
  return out;
}

Vec<Gaussian> complex_curvature(const LieAlgebra& a, const Connection& nabla, const Vec<Gaussian>& x,
                                const Vec<Gaussian>& y, const Vec<Gaussian>& z) {
  Vec<Gaussian> v = nabla.apply(x, nabla.apply(y, z));
  v = sub(std::move(v), nabla.apply(y, nabla.apply(x, z)));
  return sub(std::move(v), nabla.apply(complex_bracket(a, x, y), z));
}

Vec<Gaussian> holomorphic_vector(const AlmostComplexStructure& j, std::size_t k) {
  const std::size_t n = j.dim();
  Vec<Gaussian> z(n, Gaussian(0));
  z[k] = Gaussian(1);
  for (std::size_t m = 0; m < n; ++m) {
    if (!is_zero(j.matrix()(m, k))) z[m] -= Gaussian(Rational(0), j.matrix()(m, k));
  }
  return z;
}

std::vector<Vec<Gaussian>> holomorphic_frame(const AlmostComplexStructure& j) {
  const std::size_t n = j.dim();
  std::vector<Vec<Gaussian>> frame;
  for (std::size_t k = 0; k < n && 2 * frame.size() < n; ++k) {
    Vec<Gaussian> z = holomorphic_vector(j, k);
    auto trial = frame;
    trial.push_back(z);
    if (rank(Matrix<Gaussian>::from_columns(trial, n)) == trial.size()) frame.push_back(std::move(z));
  }
  return frame;
}

GrayResult gray_check(const CurvatureTensor& r, const AlmostComplexStructure& j, GrayIdentity which) {
  const std::size_t n = r.dim();
  if (j.dim() != n) throw DimensionMismatch("almost complex structure and curvature differ in dimension");
  const Matrix<Rational>& jm = j.matrix();
  CurvatureTensor lhs;
  CurvatureTensor rhs;
  switch (which) {
    case GrayIdentity::G1:
      lhs = r.with_j(jm, 0).with_j(jm, 1);
      rhs = r;
      break;
    case GrayIdentity::G2: {
      const CurvatureTensor jx = r.with_j(jm, 0);
      lhs = r;
      const CurvatureTensor jxjy = jx.with_j(jm, 1);
      const CurvatureTensor a = jx.with_j(jm, 2);
      const CurvatureTensor b = jx.with_j(jm, 3);
      rhs = CurvatureTensor(n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
              lhs(p, q, s, t) -= jxjy(p, q, s, t);
              rhs(p, q, s, t) = a(p, q, s, t) + b(p, q, s, t);
            }
      break;
    }
    case GrayIdentity::G3:
      lhs = r.with_j(jm, 0).with_j(jm, 1).with_j(jm, 2).with_j(jm, 3);
      rhs = r;
      break;
  }
  GrayResult res;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          if (lhs(p, q, s, t) != rhs(p, q, s, t)) {
            res.holds = false;
            res.witness = std::array<std::size_t, 4>{p, q, s, t};
            return res;
          }
        }
  return res;
}

Matrix<Rational> ricci(const LieAlgebra& a, const InnerProduct& ip) {
  check_sizes(a, ip);
  require_nilpotent(a);
  const std::size_t n = a.dim();
  const Matrix<Rational>& g = ip.gram();
  const Matrix<Rational>& h = ip.inverse_gram();
  std::vector<std::vector<Vec<Rational>>> br(n, std::vector<Vec<Rational>>(n));
  std::vector<std::vector<Vec<Rational>>> gbr(n, std::vector<Vec<Rational>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      br[x][y] = a.bracket_basis(x, y);
      gbr[x][y] = g.apply(br[x][y]);
    }
  auto dot = [n](const Vec<Rational>& u, const Vec<Rational>& v) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(u[k]) && !is_zero(v[k])) s += u[k] * v[k];
    return s;
  };
  // w[x](p, q) = <[e_p, e_q], e_x>;  v[x] = H w[x] H.
  std::vector<Matrix<Rational>> w(n, Matrix<Rational>(n, n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t x = 0; x < n; ++x) w[x](p, q) = gbr[p][q][x];
  std::vector<Matrix<Rational>> v;
  v.reserve(n);
  for (std::size_t x = 0; x < n; ++x) v.push_back(h * w[x] * h);
  Matrix<Rational> r(n, n);
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      Rational t1 = 0;
      for (std::size_t p = 0; p < n; ++p) {
        if (is_zero_vec(br[x][p])) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (is_zero(h(p, q)) || is_zero_vec(gbr[y][q])) continue;
          t1 += h(p, q) * dot(br[x][p], gbr[y][q]);
        }
      }
      Rational t2 = 0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!is_zero(v[x](p, q)) && !is_zero(w[y](p, q))) t2 += v[x](p, q) * w[y](p, q);
      r(x, y) = quarter * t2 - half * t1;
      r(y, x) = r(x, y);
    }
  }
  return h * r;
}

Matrix<Rational> ricci_from_curvature(const CurvatureTensor& r, const InnerProduct& ip) {
  const std::size_t n = r.dim();
  const Matrix<Rational>& h = ip.inverse_gram();
  Matrix<Rational> ric(n, n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      Rational s = 0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t d = 0; d < n; ++d)
          if (!is_zero(h(p, d))) s += h(p, d) * r(p, y, z, d);
      ric(y, z) = s;
    }
  return h * ric;
}

Matrix<Rational> ricci_one_one(const LieAlgebra& a, const InnerProduct& ip, const AlmostComplexStructure& j) {
  const Matrix<Rational> ric = ricci(a, ip);
  return Rational(1, 2) * (ric - j.matrix() * ric * j.matrix());
}

std::optional<SolitonCertificate> soliton_decomposition(const LieAlgebra& a, const Matrix<Rational>& op) {
  const std::size_t n = a.dim();
  const Subspace<Rational> der = derivation_space(a);
  Matrix<Rational> m(n * n, der.dim() + 1);
  Vec<Rational> rhs(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r * n + r, 0) = 1;
    for (std::size_t s = 0; s < n; ++s) rhs[r * n + s] = op(r, s);
  }
  for (std::size_t l = 0; l < der.dim(); ++l)
    for (std::size_t k = 0; k < n * n; ++k) m(k, l + 1) = der.basis()(k, l);
  const auto sol = solve_affine(m, rhs);
  if (!sol) return std::nullopt;
  SolitonCertificate cert{sol->particular.empty() ? Rational(0) : sol->particular[0], Matrix<Rational>()};
  cert.d = op - cert.c * Matrix<Rational>::identity(n);
  return cert;
}

std::optional<SolitonCertificate> nilsoliton_check(const LieAlgebra& a, const InnerProduct& ip) {
  return soliton_decomposition(a, ricci(a, ip));
}

std::optional<SolitonCertificate> minimal_check(const LieAlgebra& a, const InnerProduct& ip,
                                                const AlmostComplexStructure& j) {
  return soliton_decomposition(a, ricci_one_one(a, ip, j));
}

PairResult quasi_kahler_check(const LieAlgebra& a, const InnerProduct& ip, const AlmostComplexStructure& j) {
  const std::size_t n = a.dim();
  if (j.dim() != n) throw DimensionMismatch("almost complex structure and algebra differ in dimension");
  const Connection nabla = levi_civita(a, ip);
  const Matrix<Gaussian> jg = to_gaussian(j.matrix());
  const Gaussian i = Gaussian::i();
  PairResult res;
  for (std::size_t p = 0; p < n; ++p) {
    const Vec<Gaussian> zbar = conj_vec(holomorphic_vector(j, p));
    for (std::size_t q = 0; q < n; ++q) {
      const Vec<Gaussian> v = nabla.apply(zbar, holomorphic_vector(j, q));
      const Vec<Gaussian> part = add(v, scale(i, jg.apply(v)));
      if (!is_zero_vec(part)) {
        res.holds = false;
        res.witness = std::array<std::size_t, 2>{p, q};
        return res;
      }
    }
  }
  return res;
}

bool chern_flat_check(const LieAlgebra& a, const AlmostComplexStructure& j) { return classify(a, j).in_Ch; }

bool skt_check(const LieAlgebra& a, const InnerProduct& ip, const AlmostComplexStructure& j) {
  check_sizes(a, ip);
  const auto flags = classify(a, j);
  if (!flags.in_int) throw PreconditionFailed("SKT test needs an integrable J");
  if (!flags.in_Ch) throw PreconditionFailed("SKT test needs a Chern-flat structure");
  if (!ip.is_compatible(j.matrix())) throw PreconditionFailed("SKT test needs a Hermitian metric");
  const std::size_t n = a.dim();
  const auto frame = holomorphic_frame(j);
  const Matrix<Gaussian> g = to_gaussian(ip.gram());
  std::vector<Vec<Gaussian>> brackets;
  for (std::size_t r = 0; r < frame.size(); ++r)
    for (std::size_t s = r + 1; s < frame.size(); ++s) brackets.push_back(complex_bracket(a, frame[r], frame[s]));
  for (const auto& u : brackets) {
    for (const auto& v : brackets) {
      const Vec<Gaussian> gv = g.apply(conj_vec(v));
      Gaussian h(0);
      for (std::size_t k = 0; k < n; ++k) h += u[k] * gv[k];
      if (!h.is_zero()) return false;
    }
  }
  return true;
}

HermitianReport hermitian_report(const LieAlgebra& a, const InnerProduct& ip, const AlmostComplexStructure& j) {
  HermitianReport rep;
  rep.classification = classify(a, j);
  rep.compatible = ip.is_compatible(j.matrix());
  rep.chern_flat = rep.classification.in_Ch;
  const auto qk = quasi_kahler_check(a, ip, j);
  rep.quasi_kahler = qk.holds;
  rep.quasi_kahler_witness = qk.witness;
  const CurvatureTensor r = curvature(a, ip);
  const auto g1 = gray_check(r, j, GrayIdentity::G1);
  const auto g2 = gray_check(r, j, GrayIdentity::G2);
  const auto g3 = gray_check(r, j, GrayIdentity::G3);
  rep.g1 = g1.holds;
  rep.g2 = g2.holds;
  rep.g3 = g3.holds;
  rep.g1_witness = g1.witness;
  rep.g2_witness = g2.witness;
  rep.g3_witness = g3.witness;
  if (rep.compatible && rep.classification.in_int && rep.chern_flat) rep.skt = skt_check(a, ip, j);
  rep.in_CP2 = rep.compatible && rep.chern_flat && rep.classification.in_int && rep.g2;
  rep.in_QK0 = rep.compatible && rep.chern_flat && rep.quasi_kahler;
  return rep;
}

}  // namespace nilherm
