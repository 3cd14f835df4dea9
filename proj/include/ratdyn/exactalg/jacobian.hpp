#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ratdyn/exactalg/polynomial.hpp"
#include "ratdyn/exactalg/rational_function.hpp"
#include "ratdyn/exactalg/scalar.hpp"

namespace ratdyn {

/// Rank over Q(x) of the matrix of formal partials d fs[i] / d x_j.
/// In characteristic zero this is the transcendence degree of Q(fs).
/// Random evaluations give a lower bound; the exact fraction-free
/// elimination is only run when they fall short of min(|fs|, n).
std::size_t jacobian_rank(std::span<const RationalFunction> fs, std::uint64_t seed = kDefaultSeed);

/// Same rank computed only by exact elimination (the reference path).
std::size_t jacobian_rank_exact(std::span<const RationalFunction> fs);

/// Rank over Q(x) of a polynomial matrix by Bareiss fraction-free elimination.
std::size_t polynomial_matrix_rank(std::vector<std::vector<Polynomial>> rows);

/// Determinant of a square polynomial matrix by Bareiss elimination.
Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> rows);

}  // namespace ratdyn
