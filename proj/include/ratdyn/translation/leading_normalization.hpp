#pragma once

#include <span>
#include <string>
#include <vector>

#include "ratdyn/exactalg/linalg.hpp"
#include "ratdyn/exactalg/rational_function.hpp"

namespace ratdyn {

/// Univariate polynomial in t with coefficients in Q(s_1, ..., s_r):
/// entry k multiplies t^k. Trailing zero coefficients are not stored.
using FieldPolynomial = std::vector<RationalFunction>;

FieldPolynomial trimmed(FieldPolynomial p);
/// -1 for the zero polynomial.
long degree(const FieldPolynomial& p) noexcept;
/// sum_j c[j] ps[j] over the common field (r auxiliary variables).
FieldPolynomial combine(std::span<const Scalar> c, std::span<const FieldPolynomial> ps, std::size_t r);
std::string to_string(const FieldPolynomial& p, const std::vector<std::string>& field_vars,
                      const std::string& t = "t");

/// Rank over Q of elements of Q(s), by clearing denominators.
std::size_t rational_rank(std::span<const RationalFunction> values);

/// True when, for every degree n, the leading coefficients of the members of
/// degree n are Q-linearly independent.
bool satisfies_star(std::span<const FieldPolynomial> ps);

struct LeadingNormalization {
  std::vector<FieldPolynomial> polys;
  /// polys = transition * inputs.
  QMatrix transition;
  /// inputs = inverse_transition * polys.
  QMatrix inverse_transition;
  unsigned steps = 0;
};

/// Replaces members of the highest degree block whose leading coefficients
/// are dependent by the lower-degree combination given by that dependence,
/// until every block is independent. The member replaced is the largest
/// index carrying a nonzero coefficient. Throws Error(precondition) when a
/// replacement vanishes, which means the inputs are Q-linearly dependent.
LeadingNormalization normalize_leading_sequence(std::span<const FieldPolynomial> qs, std::size_t r);

}  // namespace ratdyn
