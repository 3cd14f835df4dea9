#pragma once

#include <string_view>
#include <vector>

#include "ratdyn/invsearch/lifting.hpp"
#include "ratdyn/invsearch/search_budget.hpp"

namespace ratdyn {

enum class BilinearStatus { skipped, complete, inconclusive };
std::string_view to_string(BilinearStatus s) noexcept;

struct BilinearResult {
  BilinearStatus status = BilinearStatus::skipped;
  /// Kernel dimension of the linearized identity on pairs.
  std::size_t kernel_dimension = 0;
  /// Verified nonconstant invariants a/b read off rank-one kernel points.
  std::vector<RationalFunction> invariants;
};

/// Searches invariants a/b with deg a, deg b <= e by linearizing
/// a(phi) b - b(phi) a = 0 on wedge products a ^ b and looking for
/// decomposable points of the kernel.
BilinearResult bilinear_search(const DynamicalSystem& sys, const ClearedMap& cleared, unsigned e,
                               unsigned rank1_limit, int jobs = 1);

/// Rational roots of a univariate polynomial (arity 1), ascending.
std::vector<Scalar> rational_roots(const Polynomial& p);

/// Resultant of a and b with respect to `var`.
Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var);

}  // namespace ratdyn
