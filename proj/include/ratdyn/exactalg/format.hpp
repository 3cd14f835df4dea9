#pragma once

#include <span>
#include <string>
#include <vector>

#include "ratdyn/exactalg/polynomial.hpp"
#include "ratdyn/exactalg/rational_function.hpp"

namespace ratdyn {

/// Default names x1, x2, ... for anonymous variables.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Canonical infix text, terms in descending graded lexicographic order,
/// e.g. "x^2 - 3/2*x*y + 1". The output parses back to the same value.
std::string to_string(const Polynomial& p, std::span<const std::string> names);
std::string to_string(const RationalFunction& f, std::span<const std::string> names);

}  // namespace ratdyn
