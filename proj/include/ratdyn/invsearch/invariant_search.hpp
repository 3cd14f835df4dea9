#pragma once

#include <span>
#include <vector>

#include "ratdyn/dynsys/dynamical_system.hpp"
#include "ratdyn/invsearch/bilinear.hpp"
#include "ratdyn/invsearch/search_budget.hpp"

namespace ratdyn {

/// Basis of the polynomial invariants of degree <= d. Each element is a
/// primitive integer polynomial whose leading monomial is absent from the
/// other elements; ordered by leading monomial, so 1 comes first.
std::vector<Polynomial> polynomial_invariant_basis(const DynamicalSystem& sys, unsigned d,
                                                   const SearchOptions& options = {});

struct RationalSearchResult {
  /// Nonconstant exact invariants in discovery order, each raising the
  /// independence rank of its predecessors.
  std::vector<RationalFunction> invariants;
  BilinearStatus bilinear = BilinearStatus::skipped;
  std::size_t catalog_size = 0;
};

RationalSearchResult rational_invariant_search_detailed(const DynamicalSystem& sys,
                                                        const SearchBudget& budget,
                                                        const SearchOptions& options = {});
std::vector<RationalFunction> rational_invariant_search(const DynamicalSystem& sys,
                                                        const SearchBudget& budget,
                                                        const SearchOptions& options = {});

/// Transcendence degree of Q(fs) via the Jacobian rank.
std::size_t independence_rank(std::span<const RationalFunction> fs, std::uint64_t seed = kDefaultSeed);

struct InvariantReport {
  DynamicalSystem system;
  SearchBudget budget;
  std::vector<RationalFunction> invariants;
  std::size_t independence_rank = 0;
  bool verified = true;
  std::vector<RationalFunction> reduction_generators{};
  BilinearStatus bilinear = BilinearStatus::skipped;
};

InvariantReport adim_lower_bound(const DynamicalSystem& sys, const SearchBudget& budget,
                                 const SearchOptions& options = {});

}  // namespace ratdyn
