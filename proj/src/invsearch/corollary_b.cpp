#include "ratdyn/invsearch/corollary_b.hpp"

namespace ratdyn {

CorollaryBReport corollary_b_check(const DynamicalSystem& sys, const SearchBudget& budget,
                                   const SearchOptions& options) {
  const std::size_t n = sys.dimension();
  InvariantReport base = adim_lower_bound(sys, budget, options);
  InvariantReport square = adim_lower_bound(diagonal_power(sys, 2), budget, options);

  std::vector<RationalFunction> combined;
  for (const auto& g : base.invariants) {
    combined.push_back(embed_factor(g, 0, 2 * n));
    combined.push_back(embed_factor(g, n, 2 * n));
  }
  CorollaryBReport report{.base = base, .square = square};
  report.base_rank = base.independence_rank;
  report.pullback_rank = independence_rank(combined, options.seed);
  std::size_t rank = report.pullback_rank;
  for (const auto& f : square.invariants) {
    combined.push_back(f);
    const std::size_t r = independence_rank(combined, options.seed);
    if (r > rank) {
      rank = r;
      if (!report.witness) report.witness = f;
    } else {
      combined.pop_back();
    }
  }
  report.square_rank = rank;
  report.new_invariant_found = rank > report.pullback_rank;
  if (report.new_invariant_found) report.profile = degree_sequence(sys, 6);
  return report;
}

}  // namespace ratdyn
