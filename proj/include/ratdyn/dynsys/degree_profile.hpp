#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ratdyn/dynsys/dynamical_system.hpp"

namespace ratdyn {

enum class GrowthClass { bounded, polynomial_suspected, exponential_suspected };

std::string_view to_string(GrowthClass g) noexcept;

/// Degrees of phi, phi^2, ..., phi^N and a heuristic growth label. The
/// label is evidence only.
struct DegreeProfile {
  std::vector<long> degrees;
  GrowthClass growth_class = GrowthClass::bounded;
  /// Least-squares slope of log(degree) against the iterate index for
  /// exponential growth, against log(index) for polynomial growth; 0 when
  /// bounded.
  double fitted_rate = 0.0;
};

/// max over coordinates of max(deg num, deg den).
long map_degree(const DynamicalSystem& sys);

/// Classification rule on a degree window of length N, with h = ceil(N/2):
///  - bounded if the last h degrees take at most two values and none exceeds
///    the maximum of the earlier N - h degrees;
///  - exponential-suspected if the least-squares slope of log(degree) over
///    the last h points (at least two when N >= 2) exceeds 0.1;
///  - polynomial-suspected otherwise.
DegreeProfile classify_degrees(std::vector<long> degrees);

DegreeProfile degree_sequence(const DynamicalSystem& sys, unsigned n);
DegreeProfile degree_sequence(IterateCache& cache, unsigned n);

}  // namespace ratdyn
