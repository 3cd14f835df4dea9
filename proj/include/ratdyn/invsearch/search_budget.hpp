#pragma once

#include <cstdint>

#include "ratdyn/exactalg/scalar.hpp"

namespace ratdyn {

/// Truncation of the invariant search.
struct SearchBudget {
  unsigned max_num_degree = 3;
  unsigned max_den_degree = 3;
  unsigned denominator_catalog_depth = 2;
  /// Largest kernel dimension for which the bilinear stage looks for
  /// rank-one points (at most 3 is supported exactly).
  unsigned nullspace_rank1_limit = 3;

  friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

struct SearchOptions {
  /// Threads for catalog searches and modular elimination; 0 = OpenMP default.
  int jobs = 1;
  std::uint64_t seed = kDefaultSeed;
};

}  // namespace ratdyn
