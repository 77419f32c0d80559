#include <doctest.h>

#include "nilherm/catalog/catalog.hpp"
#include "support/support.hpp"

using namespace nilherm;
using namespace nilherm::testing;

namespace {

LieAlgebra h3() { return catalog_get("heisenberg3").doc.real_algebra(); }

Vec<Rational> e(std::size_t n, std::size_t k) { return unit_vec<Rational>(n, k); }

std::vector<std::string> nilpotent_entries_with_j() {
  std::vector<std::string> out;
  for (const auto& info : catalog_list()) {
    const auto doc = catalog_get(info.name).doc;
    if (doc.is_real() && doc.j && nilpotency(doc.real_algebra()).nilpotent) out.push_back(info.name);
  }
  return out;
}

}  // namespace

TEST_CASE("levi-civita connection of h3") {
  const auto nabla = levi_civita(h3(), InnerProduct::identity(3));
  CHECK(nabla.basis(0, 1) == scale(Rational(1, 2), e(3, 2)));
  CHECK(nabla.basis(0, 2) == scale(Rational(-1, 2), e(3, 1)));
  CHECK(nabla.basis(1, 2) == scale(Rational(1, 2), e(3, 0)));
  const auto flat = levi_civita(LieAlgebra::abelian(3), InnerProduct::identity(3));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(is_zero_vec(flat.basis(a, b)));
}

TEST_CASE("levi-civita is metric and torsion free") {
  Rng rng(14);
  for (const char* name : {"will63", "iwasawa", "aff_c", "h3_r"}) {
    const auto a = catalog_get(name).doc.real_algebra();
    const std::size_t n = a.dim();
    const auto ip = random_metric(rng, n);
    const auto nabla = levi_civita(a, ip);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        CHECK(sub(nabla.basis(x, y), nabla.basis(y, x)) == a.bracket_basis(x, y));
        for (std::size_t z = 0; z < n; ++z)
          CHECK(ip(nabla.basis(x, y), e(n, z)) + ip(e(n, y), nabla.basis(x, z)) == 0);
      }
  }
}

TEST_CASE("curvature symmetries") {
  Rng rng(15);
  for (const char* name : {"will63", "aff_c", "h3_r"}) {
    const auto a = catalog_get(name).doc.real_algebra();
    const std::size_t n = a.dim();
    const auto r = curvature(a, random_metric(rng, n));
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            ok = ok && r(i, j, k, l) == -r(j, i, k, l) && r(i, j, k, l) == -r(i, j, l, k) &&
                 r(i, j, k, l) == r(k, l, i, j) && r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l) == 0;
          }
    CAPTURE(name);
    CHECK(ok);
  }
}

TEST_CASE("h3 sectional curvatures") {
  const auto r = curvature(h3(), InnerProduct::identity(3));
  CHECK(r(0, 1, 1, 0) == Rational(-3, 4));
  CHECK(r(0, 2, 2, 0) == Rational(1, 4));
  CHECK(r(1, 2, 2, 1) == Rational(1, 4));
  CHECK(curvature(LieAlgebra::abelian(4), InnerProduct::identity(4)) == CurvatureTensor(4));
}

TEST_CASE("holomorphic vector fields on the Iwasawa algebra") {
  const auto doc = catalog_get("iwasawa").doc;
  const auto& a = doc.real_algebra();
  Rng rng(16);
  for (int trial = 0; trial < 3; ++trial) {
    const auto ip = trial == 0 ? doc.metric_or_identity() : random_hermitian_metric(rng, doc.structure());
    const auto nabla = levi_civita(a, ip);
    const auto frame = holomorphic_frame(doc.structure());
    REQUIRE(frame.size() == 3);
    for (const auto& zi : frame)
      for (const auto& zj : frame) {
        CHECK(nabla.apply(zi, zj) == scale(Gaussian(Rational(1, 2)), complex_bracket(a, zi, zj)));
        for (const auto& zk : frame)
          CHECK(complex_curvature(a, nabla, zi, zj, zk) ==
                scale(Gaussian(Rational(1, 4)), complex_bracket(a, zk, complex_bracket(a, zi, zj))));
      }
  }
}

TEST_CASE("gray identities") {
  const auto s4 = AlmostComplexStructure::standard(4);
  const auto flat = curvature(LieAlgebra::abelian(4), InnerProduct::identity(4));
  for (auto g : {GrayIdentity::G1, GrayIdentity::G2, GrayIdentity::G3}) CHECK(gray_check(flat, s4, g).holds);

  const auto iw = catalog_get("iwasawa").doc;
  Rng rng(22);
  for (int trial = 0; trial < 3; ++trial) {
    const auto ip = random_hermitian_metric(rng, iw.structure());
    CHECK(gray_check(curvature(iw.real_algebra(), ip), iw.structure(), GrayIdentity::G2).holds);
  }

  const auto aff = catalog_get("aff_c").doc;
  const auto g2 = gray_check(curvature(aff.real_algebra(), InnerProduct::identity(4)), aff.structure(),
                             GrayIdentity::G2);
  CHECK_FALSE(g2.holds);
  REQUIRE(g2.witness);
  CHECK(*g2.witness == std::array<std::size_t, 4>{0, 2, 0, 2});
  CHECK(gray_check(curvature(iw.real_algebra(), InnerProduct::identity(6)), iw.structure(), GrayIdentity::G1)
            .witness);
}

TEST_CASE("ricci of h3 and of the abelian algebra") {
  CHECK(ricci(h3(), InnerProduct::identity(3)) ==
        Matrix<Rational>::diagonal({Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}));
  CHECK(ricci(LieAlgebra::abelian(3), InnerProduct::identity(3)).is_zero());
  CHECK_THROWS_AS(ricci(catalog_get("aff_c").doc.real_algebra(), InnerProduct::identity(4)), NotNilpotent);
}

TEST_CASE("ricci formulas agree") {
  Rng rng(23);
  for (const char* name : {"heisenberg3", "will63", "iwasawa", "h3_r", "anti_h3"}) {
    const auto a = catalog_get(name).doc.real_algebra();
    for (int trial = 0; trial < 3; ++trial) {
      const auto ip = trial == 0 ? InnerProduct::identity(a.dim()) : random_metric(rng, a.dim());
      const auto ric = ricci(a, ip);
      CAPTURE(name);
      CHECK(ric == ricci_orthogonal_frame(a, ip));
      CHECK(ric == ricci_from_curvature(curvature(a, ip), ip));
      const auto form = ip.gram() * ric;
      CHECK(form == form.transpose());
    }
  }
}

TEST_CASE("ricci is basis independent") {
  Rng rng(24);
  const auto a = catalog_get("will63").doc.real_algebra();
  const auto ip = random_metric(rng, a.dim());
  const auto ric = ricci(a, ip);
  for (int trial = 0; trial < 3; ++trial) {
    const auto g = random_invertible(rng, a.dim());
    const auto gi = inverse(g);
    const InnerProduct moved(gi.transpose() * ip.gram() * gi);
    CHECK(ricci(act_gl(a, g), moved) == g * ric * gi);
  }
}

TEST_CASE("scalar curvature of 2-step algebras") {
  for (const char* name : {"heisenberg3", "will63", "iwasawa", "anti_h3"}) {
    const auto a = catalog_get(name).doc.real_algebra();
    const auto ric = ricci(a, InnerProduct::identity(a.dim()));
    Rational trace = 0, norms = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      trace += ric(i, i);
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const auto v = a.bracket_basis(i, j);
        for (const auto& x : v) norms += x * x;
      }
    }
    CHECK(trace == -norms / 4);
    CHECK(trace < 0);
  }
}

TEST_CASE("complexified metric doubles the ricci operator") {
  Rng rng(25);
  const auto a = h3();
  for (int trial = 0; trial < 3; ++trial) {
    const auto ip = trial == 0 ? InnerProduct::identity(3) : random_metric(rng, 3);
    const auto r = ricci(a, ip);
    Matrix<Rational> doubled(6, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) doubled(i, j) = doubled(3 + i, 3 + j) = 2 * r(i, j);
    CHECK(interleaved_to_blocks(ricci(complexify(a).algebra, complexified_metric(ip))) == doubled);
  }
}

TEST_CASE("nilsoliton certificates") {
  const auto c = nilsoliton_check(h3(), InnerProduct::identity(3));
  REQUIRE(c);
  CHECK(c->c == Rational(-3, 2));
  CHECK(c->d == Matrix<Rational>::diagonal({1, 1, 2}));

  const auto z = nilsoliton_check(LieAlgebra::abelian(3), InnerProduct::identity(3));
  REQUIRE(z);
  CHECK(z->c == 0);
  CHECK(z->d.is_zero());

  CHECK_FALSE(nilsoliton_check(catalog_get("will63").doc.real_algebra(), InnerProduct::identity(9)));

  Rng rng(26);
  for (const char* name : {"heisenberg3", "iwasawa", "will63", "h3_r"}) {
    const auto a = catalog_get(name).doc.real_algebra();
    for (int trial = 0; trial < 2; ++trial) {
      const auto ip = trial == 0 ? InnerProduct::identity(a.dim()) : random_metric(rng, a.dim());
      const auto cert = nilsoliton_check(a, ip);
      if (!cert) continue;
      CHECK(is_derivation(a, cert->d));
      CHECK(ricci(a, ip) == cert->c * Matrix<Rational>::identity(a.dim()) + cert->d);
    }
  }
}

TEST_CASE("minimal metrics") {
  const auto c = complexify(h3());
  const auto ip = complexified_metric(InnerProduct::identity(3));
  const auto m = minimal_check(c.algebra, ip, c.j);
  const auto s = nilsoliton_check(c.algebra, ip);
  REQUIRE(m);
  REQUIRE(s);
  CHECK(m->c == s->c);
  CHECK(m->d == s->d);
  const auto ac = anticomplexify(h3());
  const auto am = minimal_check(ac.algebra, ip, ac.j);
  REQUIRE(am);
  CHECK(am->c == m->c);
  CHECK(am->d == m->d);

  const auto s4 = AlmostComplexStructure::standard(4);
  CHECK(minimal_check(LieAlgebra::abelian(4), InnerProduct::identity(4), s4));

  for (const auto& name : nilpotent_entries_with_j()) {
    const auto doc = catalog_get(name).doc;
    const auto f = classify(doc.real_algebra(), doc.structure());
    if (!f.in_C && !f.in_Cbar) continue;
    CAPTURE(name);
    CHECK(minimal_check(doc.real_algebra(), doc.metric_or_identity(), doc.structure()).has_value() ==
          nilsoliton_check(doc.real_algebra(), doc.metric_or_identity()).has_value());
  }
}

TEST_CASE("(1,1) part of the ricci operator") {
  const auto iw = catalog_get("iwasawa").doc;
  CHECK(ricci_one_one(iw.real_algebra(), iw.metric_or_identity(), iw.structure()) ==
        ricci(iw.real_algebra(), iw.metric_or_identity()));
  Rng rng(27);
  const auto ac = anticomplexify(h3());
  const auto r = ricci_one_one(ac.algebra, random_metric(rng, 6), ac.j);
  CHECK(r * ac.j.matrix() == ac.j.matrix() * r);
  CHECK(ricci_one_one(LieAlgebra::abelian(4), InnerProduct::identity(4), AlmostComplexStructure::standard(4))
            .is_zero());
}

TEST_CASE("quasi-kaehler, chern-flat and SKT checks") {
  const auto iw = catalog_get("iwasawa").doc;
  const auto ip = iw.metric_or_identity();
  const auto jm = j_flip(iw.real_algebra(), iw.structure(), ip);
  CHECK(quasi_kahler_check(iw.real_algebra(), ip, jm).holds);
  const auto qk = quasi_kahler_check(iw.real_algebra(), ip, iw.structure());
  CHECK_FALSE(qk.holds);
  CHECK(qk.witness);
  CHECK(quasi_kahler_check(LieAlgebra::abelian(4), InnerProduct::identity(4), AlmostComplexStructure::standard(4))
            .holds);

  CHECK(chern_flat_check(iw.real_algebra(), iw.structure()));
  CHECK(chern_flat_check(iw.real_algebra(), jm));
  const auto hr = catalog_get("h3_r").doc;
  CHECK_FALSE(chern_flat_check(hr.real_algebra(), hr.structure()));

  CHECK(skt_check(LieAlgebra::abelian(4), InnerProduct::identity(4), AlmostComplexStructure::standard(4)));
  CHECK_FALSE(skt_check(iw.real_algebra(), ip, iw.structure()));
  CHECK_THROWS_AS(skt_check(iw.real_algebra(), ip, jm), PreconditionFailed);
  const auto w = complexify(catalog_get("will63").doc.real_algebra());
  CHECK_FALSE(skt_check(w.algebra, complexified_metric(InnerProduct::identity(9)), w.j));
}

TEST_CASE("hermitian reports") {
  const auto iw = catalog_get("iwasawa").doc;
  const auto ip = iw.metric_or_identity();
  const auto r = hermitian_report(iw.real_algebra(), ip, iw.structure());
  CHECK(r.in_CP2);
  CHECK(hermitian_report(iw.real_algebra(), ip, j_flip(iw.real_algebra(), iw.structure(), ip)).in_QK0);

  const auto aff = catalog_get("aff_c").doc;
  const auto ra = hermitian_report(aff.real_algebra(), InnerProduct::identity(4), aff.structure());
  CHECK(ra.chern_flat);
  CHECK_FALSE(ra.g2);
  CHECK_FALSE(ra.in_CP2);

  const auto flat = hermitian_report(LieAlgebra::abelian(4), InnerProduct::identity(4),
                                     AlmostComplexStructure::standard(4));
  CHECK((flat.g1 && flat.g2 && flat.g3 && flat.quasi_kahler && flat.chern_flat && flat.in_CP2 && flat.in_QK0));
  CHECK(flat.skt == std::optional<bool>(true));

  Rng rng(28);
  for (int trial = 0; trial < 4; ++trial) {
    const auto g = random_hermitian_metric(rng, iw.structure());
    const auto rep = hermitian_report(iw.real_algebra(), g, iw.structure());
    if (rep.in_CP2)
      CHECK(hermitian_report(iw.real_algebra(), g, j_flip(iw.real_algebra(), iw.structure(), g)).in_QK0);
  }
}
