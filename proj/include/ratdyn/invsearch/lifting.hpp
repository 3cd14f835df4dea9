#pragma once

#include <vector>

#include "ratdyn/dynsys/dynamical_system.hpp"

namespace ratdyn {

/// phi written over a common denominator: phi_i = a_i / m with m the lcm of
/// the coordinate denominators. For f of degree <= e,
/// f(phi) = lift(f, e) / m^e with lift(f, e) a polynomial.
class ClearedMap {
 public:
  explicit ClearedMap(const DynamicalSystem& sys);

  std::size_t nvars() const noexcept { return a_.size(); }
  const std::vector<Polynomial>& numerators() const noexcept { return a_; }
  const Polynomial& denominator() const noexcept { return m_; }

  /// sum over terms c x^u of f: c a^u m^(e - |u|). Requires deg f <= e.
  Polynomial lift(const Polynomial& f, unsigned e) const;
  /// lift(x^u, e) for each monomial u of degree <= e, ascending grlex.
  std::vector<Polynomial> lifted_monomials(unsigned e) const;
  /// m^k.
  Polynomial denominator_power(unsigned k) const;

 private:
  const Polynomial& power(std::size_t var, unsigned k) const;

  std::vector<Polynomial> a_;
  Polynomial m_;
  mutable std::vector<std::vector<Polynomial>> a_powers_;
  mutable std::vector<Polynomial> m_powers_;
};

/// Polynomial with the given coefficients on monomials_up_to(nvars, degree).
Polynomial from_coefficients(std::size_t nvars, unsigned degree, std::span<const Scalar> coeffs);

}  // namespace ratdyn
