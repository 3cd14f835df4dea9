#pragma once

#include <optional>

#include "ratdyn/exactalg/polynomial.hpp"

namespace ratdyn {

/// Dense modular gcd (evaluation and interpolation over Z/p, then CRT
/// across primes). Inputs must be nonzero primitive integer polynomials of
/// equal arity. The answer is certified by exact trial division; nothing is
/// returned when the prime table runs out first.
std::optional<Polynomial> modular_gcd(const Polynomial& a, const Polynomial& b);

/// Primitive polynomial remainder sequence gcd. Slow on large inputs; kept
/// as the reference the modular route is tested against.
Polynomial prs_gcd_reference(const Polynomial& a, const Polynomial& b);

}  // namespace ratdyn
