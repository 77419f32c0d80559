#include "nilherm/catalog/catalog.hpp"

#include <functional>

namespace nilherm {

namespace {

using Terms = std::vector<std::pair<std::size_t, Gaussian>>;

/// Brackets given as (i, j, [(k, c), ...]) with 1-based indices.
struct Rule {
  std::size_t i, j;
  Terms value;
};

template <class K>
BracketTensor<K> tensor_from_rules(std::size_t n, const std::vector<Rule>& rules) {
  BracketTensor<K> t(n);
  for (const auto& r : rules) {
    Vec<K> v(n, K(0));
    for (const auto& [k, c] : r.value) {
      if constexpr (std::is_same_v<K, Rational>) {
        v[k - 1] += c.re();
      } else {
        v[k - 1] += c;
      }
    }
    t.set(r.i - 1, r.j - 1, v);
  }
  return t;
}

std::vector<std::string> names(std::size_t p, const std::string& a, std::size_t q, const std::string& b) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= p; ++k) out.push_back(a + std::to_string(k));
  for (std::size_t k = 1; k <= q; ++k) out.push_back(b + std::to_string(k));
  return out;
}

LieAlgebra heisenberg3() { return LieAlgebra::validate(tensor_from_rules<Rational>(3, {{1, 2, {{3, 1}}}})); }

CatalogEntry real_entry(const std::string& name, LieAlgebra alg, std::optional<AlmostComplexStructure> j) {
  CatalogEntry e;
  e.doc.name = name;
  e.doc.basis = default_basis_names(alg.dim());
  e.doc.metric = InnerProduct::identity(alg.dim());
  e.doc.algebra = std::move(alg);
  e.doc.j = std::move(j);
  return e;
}

ClassificationFlags flags(bool in_int, bool in_ab, bool in_c, bool in_ch, bool in_cbar) {
  return ClassificationFlags{in_int, in_ab, in_c, in_ch, in_cbar};
}

CatalogEntry make_heisenberg3(const std::optional<Gaussian>&) {
  auto e = real_entry("heisenberg3", heisenberg3(), std::nullopt);
  e.summary = "3-dimensional Heisenberg algebra [X1,X2] = X3";
  e.provenance = "standard";
  return e;
}

CatalogEntry make_iwasawa(const std::optional<Gaussian>&) {
  auto r = complexify(heisenberg3());
  auto e = real_entry("iwasawa", std::move(r.algebra), std::move(r.j));
  e.summary = "complex Heisenberg algebra [Z1,Z2] = Z3, realified, J0 = multiplication by i";
  e.provenance =
      "Iwasawa manifold example: Z_k is built from e_{2k-1} (Z_k = e_{2k-1} - i J0 e_{2k-1}); "
      "coframe relations de^5 = e^13 + e^42, de^6 = e^14 + e^23 are checked in the tests, not assumed";
  e.declared = flags(true, false, true, true, false);
  return e;
}

CatalogEntry make_iwasawa_qk(const std::optional<Gaussian>&) {
  auto r = complexify(heisenberg3());
  const auto jm = j_flip(r.algebra, r.j, InnerProduct::identity(6));
  auto e = real_entry("iwasawa_qk", std::move(r.algebra), jm);
  e.summary = "Iwasawa algebra with J0- (sign of J0 flipped off the center): quasi-Kaehler Chern-flat";
  e.provenance = "Iwasawa manifold example, structure J0-";
  e.declared = flags(false, false, false, true, true);
  return e;
}

CatalogEntry make_anti_h3(const std::optional<Gaussian>&) {
  auto r = anticomplexify(heisenberg3());
  auto e = real_entry("anti_h3", std::move(r.algebra), std::move(r.j));
  e.summary = "anti-complexification of the Heisenberg algebra, J = i (anti-bi-invariant)";
  e.provenance = "anti-complexification [X a, Y b] = conj(ab)[X,Y] applied to h3";
  e.declared = flags(false, false, false, true, true);
  return e;
}

CatalogEntry make_aff_c(const std::optional<Gaussian>&) {
  auto alg = LieAlgebra::validate(
      tensor_from_rules<Rational>(4, {{1, 3, {{3, 1}}}, {1, 4, {{4, 1}}}, {2, 3, {{4, 1}}}, {2, 4, {{3, -1}}}}));
  auto e = real_entry("aff_c", std::move(alg), AlmostComplexStructure::standard(4));
  e.summary = "realified complex affine algebra [X,Y] = Y, J = i (not nilpotent)";
  e.provenance = "negative control: realification of [X,Y] = Y";
  e.declared = flags(true, false, true, true, false);
  return e;
}

CatalogEntry make_torus4(const std::optional<Gaussian>&) {
  auto e = real_entry("torus4", LieAlgebra::abelian(4), AlmostComplexStructure::standard(4));
  e.summary = "abelian 4-dimensional algebra with the standard J";
  e.provenance = "flat torus";
  e.declared = flags(true, true, true, true, true);
  return e;
}

CatalogEntry make_h3_r(const std::optional<Gaussian>&) {
  Matrix<Rational> j(4, 4);
  j(1, 0) = 1;   // J X1 = X2
  j(0, 1) = -1;  // J X2 = -X1
  j(3, 2) = 1;   // J X3 = X4
  j(2, 3) = -1;  // J X4 = -X3
  auto alg = LieAlgebra::validate(tensor_from_rules<Rational>(4, {{1, 2, {{3, 1}}}}));
  auto e = real_entry("h3_r", std::move(alg), AlmostComplexStructure(std::move(j)));
  e.summary = "h3 + R with J X1 = X2, J X3 = X4: [JX1,X1] != [X1,JX1], not Chern-flat";
  e.provenance = "negative control for the Chern-flat identity";
  e.declared = classify(std::get<LieAlgebra>(e.doc.algebra), *e.doc.j);
  return e;
}

Gaussian param_or(const std::optional<Gaussian>& t, long fallback) { return t ? *t : Gaussian(fallback); }

CatalogEntry make_lambda82(const std::optional<Gaussian>& tp) {
  const Gaussian t = param_or(tp, 2);
  // X1..X8 = indices 1..8, Z1 = 9, Z2 = 10.
  const std::vector<Rule> rules = {
      {1, 5, {{9, 1}}}, {2, 6, {{9, 1}}},  {3, 7, {{9, 1}}},  {4, 8, {{9, 1}}},       {2, 5, {{10, 1}}},
      {3, 6, {{10, 1}}}, {4, 7, {{10, 1}}}, {1, 8, {{10, -1}}}, {2, 7, {{10, -t}}},
  };
  CatalogEntry e;
  e.doc.name = "lambda82";
  e.doc.basis = names(8, "X", 2, "Z");
  e.doc.algebra = ComplexLieAlgebra::validate(tensor_from_rules<Gaussian>(10, rules));
  e.doc.params["t"] = t;
  e.summary = "complex type (8,2) family with Pfaffian form x^4 + t x^2y^2 + y^4";
  e.provenance = "type (8,2) example family lambda_t";
  e.has_parameter = true;
  return e;
}

CatalogEntry make_lambda63(const std::optional<Gaussian>& tp) {
  const Gaussian t = param_or(tp, 2);
  // X1..X6 = indices 1..6, Z1..Z3 = 7..9.
  const std::vector<Rule> rules = {
      {1, 2, {{7, t}}}, {3, 4, {{8, t}}}, {5, 6, {{9, t}}}, {5, 4, {{7, 1}}}, {1, 6, {{8, 1}}},
      {3, 2, {{9, 1}}}, {3, 6, {{7, 1}}}, {5, 2, {{8, 1}}}, {1, 4, {{9, 1}}},
  };
  CatalogEntry e;
  e.doc.name = "lambda63";
  e.doc.basis = names(6, "X", 3, "Z");
  e.doc.algebra = ComplexLieAlgebra::validate(tensor_from_rules<Gaussian>(9, rules));
  e.doc.params["t"] = t;
  e.summary = "complex type (6,3) family with Pfaffian form (t^3+2)xyz - t(x^3+y^3+z^3)";
  e.provenance = "type (6,3) example family lambda_t";
  e.has_parameter = true;
  return e;
}

CatalogEntry make_will63(const std::optional<Gaussian>& tp) {
  const Gaussian t = param_or(tp, 2);
  if (!t.is_real()) throw Error("will63 takes a rational parameter t");
  const std::vector<Rule> rules = {
      {5, 4, {{7, 1}}}, {1, 6, {{8, 1}}}, {3, 2, {{9, 1}}}, {3, 6, {{7, t}}},
      {5, 2, {{8, t}}}, {1, 4, {{9, t}}}, {1, 2, {{7, 1}}},
  };
  auto alg = LieAlgebra::validate(tensor_from_rules<Rational>(9, rules));
  auto e = real_entry("will63", std::move(alg), std::nullopt);
  e.doc.params["t"] = t;
  e.summary = "real type (6,3) curve; for t in (1, oo) no nilsoliton metric exists";
  e.provenance = "curve of 2-step algebras without nilsolitons (range t > 1 documented, not enforced)";
  e.has_parameter = true;
  return e;
}

struct Maker {
  const char* name;
  std::function<CatalogEntry(const std::optional<Gaussian>&)> make;
  bool has_parameter;
};

const std::vector<Maker>& makers() {
  static const std::vector<Maker> m = {
      {"heisenberg3", make_heisenberg3, false}, {"iwasawa", make_iwasawa, false},
      {"iwasawa_qk", make_iwasawa_qk, false},   {"anti_h3", make_anti_h3, false},
      {"lambda82", make_lambda82, true},        {"lambda63", make_lambda63, true},
      {"will63", make_will63, true},            {"aff_c", make_aff_c, false},
      {"torus4", make_torus4, false},           {"h3_r", make_h3_r, false},
  };
  return m;
}

}  // namespace

std::vector<CatalogInfo> catalog_list() {
  std::vector<CatalogInfo> out;
  for (const auto& m : makers()) out.push_back({m.name, m.make(std::nullopt).summary, m.has_parameter});
  return out;
}

CatalogEntry catalog_get(const std::string& name, const std::optional<Gaussian>& t) {
  for (const auto& m : makers()) {
    if (name != m.name) continue;
    if (t && !m.has_parameter) throw Error("catalog entry '" + name + "' has no parameter");
    return m.make(t);
  }
  throw Error("unknown catalog entry '" + name + "'");
}

}  // namespace nilherm
