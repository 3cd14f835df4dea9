#pragma once

#include <optional>

#include "ratdyn/dynsys/degree_profile.hpp"
#include "ratdyn/invsearch/invariant_search.hpp"

namespace ratdyn {

/// Compares the invariants of the diagonal square with those pulled back
/// from a single factor.
struct CorollaryBReport {
  std::size_t base_rank = 0;
  std::size_t square_rank = 0;
  std::size_t pullback_rank = 0;
  bool new_invariant_found = false;
  /// Square invariant independent of every single-factor pullback.
  std::optional<RationalFunction> witness{};
  /// Degree profile of the base system, attached when a witness exists.
  std::optional<DegreeProfile> profile{};
  InvariantReport base;
  InvariantReport square;
};

CorollaryBReport corollary_b_check(const DynamicalSystem& sys, const SearchBudget& budget,
                                   const SearchOptions& options = {});

}  // namespace ratdyn
