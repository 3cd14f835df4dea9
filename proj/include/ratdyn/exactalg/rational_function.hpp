#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ratdyn/exactalg/polynomial.hpp"

namespace ratdyn {

/// Element of Q(x_1, ..., x_n) in canonical form: gcd(num, den) is constant,
/// den is monic under graded lexicographic order and never zero. Two equal
/// functions have identical representations.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(Polynomial::constant(0, 1)) {}
  explicit RationalFunction(std::size_t nvars)
      : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}
  /// Polynomial embedding (denominator 1).
  RationalFunction(const Polynomial& p);  // NOLINT(implicit)

  static RationalFunction constant(std::size_t nvars, const Scalar& c);
  static RationalFunction variable(std::size_t nvars, std::size_t index);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return num_.nvars(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  /// Value of a constant function; requires is_constant().
  Scalar constant_value() const;

  /// max(deg num, deg den).
  long degree() const noexcept;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& other) const;
  RationalFunction operator-(const RationalFunction& other) const;
  RationalFunction operator*(const RationalFunction& other) const;
  /// Throws Error(division_by_zero) when other is zero.
  RationalFunction operator/(const RationalFunction& other) const;
  RationalFunction operator*(const Scalar& c) const;
  RationalFunction pow(unsigned exponent) const;

  /// Value at a point, or nothing when the denominator vanishes there.
  std::optional<Scalar> evaluate(std::span<const Scalar> point) const;
  RationalFunction derivative(std::size_t var) const;

  RationalFunction remap(std::size_t new_nvars, std::span<const std::size_t> index_map) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend RationalFunction ratfunc_normalize(Polynomial num, Polynomial den);

 private:
  /// Requires gcd(num, den) constant; only rescales den to be monic.
  static RationalFunction from_coprime(Polynomial num, Polynomial den);

  RationalFunction(Polynomial num, Polynomial den, int /*trusted*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Canonical form of num/den. Idempotent. Throws Error(division_by_zero)
/// when den is zero and Error(structural) on differing variable counts.
RationalFunction ratfunc_normalize(Polynomial num, Polynomial den);

/// Normalized composition f(images). Throws Error(structural) when the
/// number of images differs from f's variable count and
/// Error(indeterminacy) when the composed denominator vanishes identically.
RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> images);

/// Equality test by cross multiplication; skips normalization of inputs.
bool same_function(const Polynomial& num_a, const Polynomial& den_a,
                   const Polynomial& num_b, const Polynomial& den_b);

/// Unnormalized composition num/den of f(images); den is nonzero.
/// Cheaper than substitute when only an identity test follows.
std::pair<Polynomial, Polynomial> substitute_unreduced(const RationalFunction& f,
                                                       std::span<const RationalFunction> images);

}  // namespace ratdyn
