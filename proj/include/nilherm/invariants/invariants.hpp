#pragma once

#include <cstddef>
#include <string>

#include "nilherm/exact/multipoly.hpp"
#include "nilherm/lie/lie_algebra.hpp"

namespace nilherm {

/// Pf(B(z)), homogeneous of degree p/2 in the q coordinates z of W2.
struct PfaffianForm {
  MultiPoly poly;
  std::size_t p = 0;
  std::size_t q = 0;
};

/// B(z)_ab = sum_k z_k (W2-coordinate k of [u_a, u_b]) for the W1 basis u_a.
/// Throws DimensionMismatch when p is odd or q = 0.
PfaffianForm pfaffian_form(const TwoStepPresentation<Gaussian>& pres);
PfaffianForm pfaffian_form(const TwoStepPresentation<Rational>& pres);

enum class Convention { Plain, Binomial };
enum class FormFamily { BinaryQuartic, TernaryCubic };

std::string to_string(Convention c);
std::string to_string(FormFamily f);

struct InvariantPair {
  Gaussian s;
  Gaussian t;
  Convention convention = Convention::Plain;
  FormFamily family = FormFamily::BinaryQuartic;
};

/// For a x^4 + 4b x^3y + 6c x^2y^2 + 4d xy^3 + e y^4 (binomial) or with the raw coefficients
/// (plain): S = ae - 4bd + 3c^2, T = ace + 2bcd - ad^2 - b^2e - c^3.
InvariantPair binary_quartic_st(const MultiPoly& f, Convention convention);

/// Aronhold invariants of degree 4 and 6 in the coefficients, scaled so that on
/// a(x^3+y^3+z^3) + 6b xyz they equal a^3b - b^4 and a^6 - 20a^3b^3 - 8b^6.
InvariantPair ternary_cubic_st(const MultiPoly& f);

/// Binary quartics with the given convention, ternary cubics otherwise.
/// Throws Error for forms of any other shape.
InvariantPair form_invariants(const MultiPoly& f, Convention convention = Convention::Binomial);

struct AbsoluteInvariant {
  enum class Kind { Finite, Infinite, Indeterminate };
  Kind kind = Kind::Indeterminate;
  Gaussian value;  // S^3 / T^2 when finite

  friend bool operator==(const AbsoluteInvariant& a, const AbsoluteInvariant& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
};

std::string to_string(const AbsoluteInvariant& a);

/// S^3 / T^2; infinite when T = 0 != S, indeterminate when S = T = 0.
AbsoluteInvariant absolute_invariant(const InvariantPair& pair);

enum class ObstructionVerdict { NoRealForm, Inconclusive };
std::string to_string(ObstructionVerdict v);

/// No real form when S^3/T^2 is finite and not real. The criterion only works in this direction.
ObstructionVerdict real_form_obstruction(const InvariantPair& pair);

enum class DistinctVerdict { Distinct, Inconclusive };
std::string to_string(DistinctVerdict v);

/// Distinct when the absolute invariants differ; never claims an isomorphism.
/// Throws Error when the forms belong to different families.
DistinctVerdict distinguish_algebras(const PfaffianForm& f, const PfaffianForm& g,
                                     Convention convention = Convention::Binomial);

/// f = c g for some nonzero scalar c.
bool proportional(const MultiPoly& f, const MultiPoly& g);

}  // namespace nilherm
