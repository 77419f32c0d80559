#include <doctest.h>

#include "nilherm/catalog/catalog.hpp"
#include "support/support.hpp"

using namespace nilherm;
using namespace nilherm::testing;

namespace {

BracketTensor<Rational> tensor(std::size_t n, std::vector<std::tuple<std::size_t, std::size_t, Vec<Rational>>> rules) {
  BracketTensor<Rational> t(n);
  for (auto& [i, j, v] : rules) t.set(i, j, v);
  return t;
}

LieAlgebra h3() { return LieAlgebra::validate(tensor(3, {{0, 1, {0, 0, 1}}})); }

}  // namespace

TEST_CASE("jacobi validation") {
  CHECK_NOTHROW(h3());
  CHECK(LieAlgebra::validate(BracketTensor<Rational>(4)).is_abelian());

  const auto bad = tensor(3, {{0, 1, {0, 0, 1}}, {0, 2, {1, 0, 0}}});
  // [[X1,X2],X3] + [[X2,X3],X1] + [[X3,X1],X2] = 0 + 0 + [-X1,X2] = -X3
  CHECK(jacobi_sum(bad, 0, 1, 2) == Vec<Rational>{0, 0, -1});
  try {
    LieAlgebra::validate(bad);
    FAIL("expected JacobiViolation");
  } catch (const JacobiViolation& e) {
    CHECK(e.triple() == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(e.cyclic_sum() == "-X3");
  }
}

TEST_CASE("jacobi sums vanish on catalog entries") {
  for (const auto& info : catalog_list()) {
    const auto doc = catalog_get(info.name).doc;
    if (!doc.is_real()) continue;
    const auto& t = doc.real_algebra().constants();
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = i + 1; j < t.dim(); ++j)
        for (std::size_t k = j + 1; k < t.dim(); ++k) CHECK(is_zero_vec(jacobi_sum(t, i, j, k)));
  }
}

TEST_CASE("lower central series and nilpotency") {
  const auto info = nilpotency(h3());
  CHECK(info.series_dims == std::vector<std::size_t>{3, 1, 0});
  CHECK(info.two_step());

  const auto ab = nilpotency(LieAlgebra::abelian(4));
  CHECK(ab.series_dims == std::vector<std::size_t>{4, 0});
  CHECK(ab.abelian());

  const auto aff = catalog_get("aff_c").doc.real_algebra();
  const auto series = lower_central_series(aff);
  CHECK_FALSE(nilpotency(aff).nilpotent);
  CHECK(series.back().dim() == 2);
  CHECK(same_span(derived_subalgebra(aff), series.back()));
}

TEST_CASE("center and derived algebra") {
  const auto e3 = Subspace<Rational>::span(3, {unit_vec<Rational>(3, 2)});
  CHECK(same_span(center(h3()), e3));
  CHECK(same_span(derived_subalgebra(h3()), e3));
  CHECK(center(LieAlgebra::abelian(3)).dim() == 3);
  CHECK(derived_subalgebra(LieAlgebra::abelian(3)).dim() == 0);

  const auto iw = catalog_get("iwasawa").doc.real_algebra();
  CHECK(same_span(center(iw), Subspace<Rational>::span(6, {unit_vec<Rational>(6, 4), unit_vec<Rational>(6, 5)})));

  const auto l82 = catalog_get("lambda82").doc.complex_algebra();
  CHECK(derived_subalgebra(l82).dim() == 2);
}

TEST_CASE("derivations") {
  CHECK(derivation_space(LieAlgebra::abelian(3)).dim() == 9);
  CHECK(derivation_space(h3()).dim() == 6);
  for (long d1 = -2; d1 <= 2; ++d1)
    for (long d2 = -2; d2 <= 2; ++d2)
      for (long d3 = -2; d3 <= 2; ++d3) {
        const auto d = Matrix<Rational>::diagonal({d1, d2, d3});
        CHECK(is_derivation(h3(), d) == (d3 == d1 + d2));
      }
  for (const auto& d : derivation_basis(catalog_get("will63").doc.real_algebra()))
    CHECK(is_derivation(catalog_get("will63").doc.real_algebra(), d));
}

TEST_CASE("change of basis action") {
  CHECK(act_gl(h3(), Matrix<Rational>::identity(3)) == h3());
  const auto scaled = act_gl(h3(), Matrix<Rational>::diagonal({1, 1, 2}));
  CHECK(scaled.bracket_basis(0, 1) == Vec<Rational>{0, 0, 2});

  Rng rng(8);
  const auto a = catalog_get("will63").doc.real_algebra();
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_invertible(rng, a.dim()), h = random_invertible(rng, a.dim());
    CHECK(act_gl(a, g * h) == act_gl(act_gl(a, h), g));
    CHECK(nilpotency(act_gl(a, g)).series_dims == nilpotency(a).series_dims);
  }
}

TEST_CASE("two-step presentations") {
  const auto p = two_step_presentation(h3());
  CHECK(p.p() == 2);
  CHECK(p.q() == 1);
  const auto l = two_step_presentation(catalog_get("lambda82").doc.complex_algebra());
  CHECK(l.p() == 8);
  CHECK(l.q() == 2);
  CHECK_THROWS_AS(two_step_presentation(LieAlgebra::abelian(3)), NotTwoStep);
  const auto w1 = Subspace<Rational>::span(3, {unit_vec<Rational>(3, 0)});
  CHECK_THROWS_AS(two_step_presentation(h3(), std::optional(w1)), InvalidPresentation);
}
