#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nilherm/acs/acs.hpp"
#include "nilherm/metric/inner_product.hpp"

namespace nilherm {

/// Contents of an algebra file:
///
///   name ID
///   field Q|QI
///   dim N
///   basis ID ID ...
///   bracket ID ID -> combo        unlisted brackets are zero
///   J ID -> combo                 image of each generator (Q only)
///   metric identity | metric row s s ...  (N rows, Q only)
///   param ID = scalar
///
/// Combos are `c*ID + c*ID - ID ...`; complex coefficients are written in parentheses, `(1+1i)*Z2`.
struct AlgebraDocument {
  std::string name;
  std::vector<std::string> basis;
  std::variant<LieAlgebra, ComplexLieAlgebra> algebra;
  std::optional<AlmostComplexStructure> j;
  std::optional<InnerProduct> metric;
  std::map<std::string, Gaussian> params;

  Field field() const { return algebra.index() == 0 ? Field::Rational : Field::GaussianRational; }
  std::size_t dim() const { return basis.size(); }
  bool is_real() const { return algebra.index() == 0; }

  /// Throws Error for QI documents.
  const LieAlgebra& real_algebra() const;
  const ComplexLieAlgebra& complex_algebra() const;

  /// Throws Error when no J was given.
  const AlmostComplexStructure& structure() const;

  /// The declared metric, the identity when none was given.
  InnerProduct metric_or_identity() const;

  friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b);
};

/// Throws ParseError with the line number; Jacobi and J^2 failures are reported the same way.
AlgebraDocument parse_algebra_document(std::string_view text);

std::string emit_algebra_document(const AlgebraDocument& doc);

/// `X1 + 2*X2 - 1/2*X3`, `0` for the zero vector.
template <class K>
std::string format_combo(const Vec<K>& v, const std::vector<std::string>& names);

/// Default generator names X1 ... Xn.
std::vector<std::string> default_basis_names(std::size_t n);

}  // namespace nilherm
