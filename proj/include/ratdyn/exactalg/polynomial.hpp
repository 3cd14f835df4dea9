#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ratdyn/exactalg/monomial.hpp"
#include "ratdyn/exactalg/scalar.hpp"

namespace ratdyn {

/// Sparse multivariate polynomial over Q.
///
/// Terms are stored flat and sorted by descending graded lexicographic
/// order, so term 0 is the leading term. No stored coefficient is zero and
/// the zero polynomial has no terms. Values are immutable once built; every
/// operation returns a new polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Scalar& c);
  /// Collects like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(std::size_t nvars,
                               std::vector<std::pair<Monomial, Scalar>> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars_, nvars_};
  }
  const Scalar& coeff(std::size_t term) const { return coeffs_[term]; }
  Monomial monomial(std::size_t term) const { return Monomial(exponents(term)); }

  /// Requires a nonzero polynomial.
  const Scalar& leading_coeff() const { return coeffs_.front(); }
  Monomial leading_monomial() const { return monomial(0); }

  /// Coefficient of the constant term (zero when absent).
  Scalar constant_term() const;
  Scalar coefficient_of(std::span<const Exponent> m) const;

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const noexcept;
  /// Degree in one variable; -1 for the zero polynomial.
  long degree_in(std::size_t var) const noexcept;
  bool uses_variable(std::size_t var) const noexcept;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial pow(unsigned exponent) const;
  Polynomial mul_monomial(std::span<const Exponent> m, const Scalar& c) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  Polynomial derivative(std::size_t var) const;

  /// Substitutes polynomial images for the variables (all of a common arity).
  Polynomial compose(std::span<const Polynomial> images) const;

  /// Re-embeds into `new_nvars` variables; variable i becomes index_map[i].
  Polynomial remap(std::size_t new_nvars, std::span<const std::size_t> index_map) const;

  /// Coefficients with respect to `var`: result[k] multiplies var^k and does
  /// not involve var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients_in(std::size_t var, std::span<const Polynomial> coeffs);

  /// Positive integer multiple with coprime integer coefficients and a
  /// positive leading coefficient; zero stays zero.
  Polynomial primitive_integer() const;
  /// Scales so that the leading coefficient is one.
  Polynomial monic() const;

  /// Deterministic total order: degree, then terms (grlex), then coefficients.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend class PolynomialBuilder;

  std::size_t nvars_ = 0;
  std::vector<Exponent> exps_;
  std::vector<Scalar> coeffs_;
};

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

bool canonical_less(const Polynomial& a, const Polynomial& b);

/// Accumulates terms in arbitrary order, then sorts and combines them once.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(std::size_t nvars) : nvars_(nvars) {}

  void reserve(std::size_t terms);
  void add(std::span<const Exponent> m, const Scalar& c);
  void add(std::span<const Exponent> m, Scalar&& c);
  /// Adds the product of two monomials.
  void add_product(std::span<const Exponent> a, std::span<const Exponent> b, Scalar&& c);
  Polynomial build();
  /// For terms already added in strictly descending grlex order.
  Polynomial build_presorted();

 private:
  std::size_t nvars_;
  std::vector<Exponent> exps_;
  std::vector<Scalar> coeffs_;
};

/// Exact multivariate division. Throws Error(precondition) when `divisor`
/// does not divide `dividend`; throws Error(division_by_zero) for a zero divisor.
Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor);

/// Quotient when divisor | dividend, otherwise nothing.
bool try_divide(const Polynomial& dividend, const Polynomial& divisor, Polynomial& quotient);

}  // namespace ratdyn
