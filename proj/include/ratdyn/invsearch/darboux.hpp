#pragma once

#include <vector>

#include "ratdyn/exactalg/linalg.hpp"
#include "ratdyn/invsearch/lifting.hpp"

namespace ratdyn {

/// det(t p - q) for square p, q, as a univariate polynomial in t with
/// integer coefficients (scaled by a common denominator of the entries).
Polynomial pencil_determinant(const QMatrix& p, const QMatrix& q);

/// Polynomials q of degree <= max_degree with lift(q, deg q) = lambda K q for
/// a rational lambda and K dividing m^deg q (m the common denominator).
/// Found as eigenvectors of the pencil (lift, K) on each degree; returns
/// their split factors, pairwise coprime.
std::vector<Polynomial> darboux_factors(const ClearedMap& cleared, unsigned max_degree);

}  // namespace ratdyn
