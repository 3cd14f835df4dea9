#pragma once

#include "ratdyn/exactalg/polynomial.hpp"

namespace ratdyn {

/// Greatest common divisor over Q, returned as a primitive integer
/// polynomial with positive leading coefficient. gcd(0, b) is b normalized;
/// gcd(0, 0) is 0. Throws Error(structural) on differing variable counts.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Content of `p` viewed as a polynomial in `var` (gcd of its coefficients),
/// normalized like poly_gcd.
Polynomial content_in(const Polynomial& p, std::size_t var);

/// Pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

/// Probabilistic coprimality certificate: true only when a and b are proven
/// to have a constant gcd (by modular univariate images). False means
/// "unknown", never "not coprime".
bool certainly_coprime(const Polynomial& a, const Polynomial& b);

/// Gcd-free basis: pairwise coprime non-constant primitive polynomials whose
/// products generate every input up to constants. Deterministically ordered
/// by (degree, graded lexicographic leading monomial, coefficients).
std::vector<Polynomial> coprime_basis(std::span<const Polynomial> inputs);

/// Square-free part splitting into the distinct factors p/gcd(p, dp/dx_i).
std::vector<Polynomial> squarefree_factors(const Polynomial& p);

}  // namespace ratdyn
