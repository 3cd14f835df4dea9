#pragma once

#include <vector>

#include "ratdyn/dynsys/dynamical_system.hpp"
#include "ratdyn/invsearch/search_budget.hpp"

namespace ratdyn {

/// Splits p into coprime non-constant primitive factors using square-free
/// decomposition, monomial extraction and contents in each variable. Not a
/// full factorization over Q: irreducibility of the pieces is not checked.
std::vector<Polynomial> split_factors(const Polynomial& p);

struct DenominatorCatalog {
  /// Pairwise coprime factors of degree <= max_den_degree drawn from the
  /// numerators and denominators of phi, ..., phi^depth and from the
  /// Darboux polynomials of phi (see darboux_factors).
  std::vector<Polynomial> factors;
  /// Products of factors (with repetition) of degree 1..max_den_degree,
  /// ordered by degree then graded lexicographic order. 1 is not listed.
  std::vector<Polynomial> entries;
};

DenominatorCatalog build_denominator_catalog(const DynamicalSystem& sys, const SearchBudget& budget);

}  // namespace ratdyn
