#include "ratdyn/invsearch/invariant_search.hpp"

#include <omp.h>

#include <algorithm>

#include "ratdyn/exactalg/jacobian.hpp"
#include "ratdyn/exactalg/linalg.hpp"
#include "ratdyn/invsearch/catalog.hpp"
#include "ratdyn/invsearch/lifting.hpp"
#include "ratdyn/parallel/nullspace.hpp"

namespace ratdyn {

namespace {

// Greedy accumulation: a candidate is kept when it is a nonconstant exact
// invariant that raises the Jacobian rank of the kept ones.
class Accumulator {
 public:
  Accumulator(const DynamicalSystem& sys, std::uint64_t seed) : sys_(sys), seed_(seed) {}

  bool full() const { return rank_ == sys_.dimension(); }

  void consider(const RationalFunction& f) {
    if (full() || f.is_constant() || !is_invariant(sys_, f)) return;
    kept_.push_back(f);
    const std::size_t r = jacobian_rank(kept_, seed_);
    if (r > rank_) {
      rank_ = r;
    } else {
      kept_.pop_back();
    }
  }

  std::vector<RationalFunction> take() { return std::move(kept_); }

 private:
  const DynamicalSystem& sys_;
  std::uint64_t seed_;
  std::vector<RationalFunction> kept_;
  std::size_t rank_ = 0;
};

std::vector<RationalFunction> catalog_candidates(const Polynomial& q, const Polynomial& lifted_q,
                                                 const std::vector<Polynomial>& lifted,
                                                 const std::vector<Monomial>& monos,
                                                 const ClearedMap& cleared, unsigned dn,
                                                 std::size_t trivial) {
  const unsigned dq = static_cast<unsigned>(q.total_degree());
  const unsigned top = std::max(dn, dq);
  const Polynomial left = q * cleared.denominator_power(top - dn);
  const Polynomial right = lifted_q * cleared.denominator_power(top - dq);
  std::vector<Polynomial> columns;
  columns.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    columns.push_back(lifted[i] * left - right.mul_monomial(monos[i].exponents(), 1));
  }
  const ColumnMatrix matrix = ColumnMatrix::from_polynomials(columns);
  if (nullity_upper_bound(matrix) <= trivial) return {};
  std::vector<RationalFunction> out;
  const std::size_t n = q.nvars();
  for (const auto& v : nullspace(matrix)) {
    RationalFunction f = ratfunc_normalize(from_coefficients(n, dn, v), q);
    if (!f.is_constant()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> polynomial_invariant_basis(const DynamicalSystem& sys, unsigned d,
                                                   const SearchOptions& options) {
  const std::size_t n = sys.dimension();
  const ClearedMap cleared(sys);
  const auto monos = monomials_up_to(n, d);
  const auto lifted = cleared.lifted_monomials(d);
  const Polynomial md = cleared.denominator_power(d);
  std::vector<Polynomial> columns;
  columns.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    columns.push_back(lifted[i] - md.mul_monomial(monos[i].exponents(), 1));
  }
  std::vector<Polynomial> basis;
  for (const auto& v : nullspace(ColumnMatrix::from_polynomials(columns), {NullspaceRoute::automatic, options.jobs})) {
    basis.push_back(from_coefficients(n, d, v).primitive_integer());
  }
  return basis;
}

RationalSearchResult rational_invariant_search_detailed(const DynamicalSystem& sys,
                                                        const SearchBudget& budget,
                                                        const SearchOptions& options) {
  RationalSearchResult result;
  const std::size_t n = sys.dimension();
  const unsigned dn = budget.max_num_degree;
  Accumulator acc(sys, options.seed);

  const auto poly_basis = polynomial_invariant_basis(sys, dn, options);
  for (const auto& p : poly_basis) acc.consider(RationalFunction(p));

  const ClearedMap cleared(sys);
  const auto catalog = build_denominator_catalog(sys, budget);
  result.catalog_size = catalog.entries.size();
  if (!acc.full() && !catalog.entries.empty()) {
    const auto monos = monomials_up_to(n, dn);
    const auto lifted = cleared.lifted_monomials(dn);
    std::vector<Polynomial> lifted_q;
    std::vector<std::size_t> trivial;
    for (const auto& q : catalog.entries) {
      const long dq = q.total_degree();
      lifted_q.push_back(cleared.lift(q, static_cast<unsigned>(dq)));
      cleared.denominator_power(std::max<unsigned>(dn, static_cast<unsigned>(dq)));
      // Multiples q g with g a polynomial invariant always solve the system.
      trivial.push_back(static_cast<std::size_t>(std::count_if(poly_basis.begin(), poly_basis.end(), [&](const Polynomial& g) {
        return g.total_degree() + dq <= static_cast<long>(dn);
      })));
    }
    std::vector<std::vector<RationalFunction>> found(catalog.entries.size());
    const int count = static_cast<int>(catalog.entries.size());
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (int i = 0; i < count; ++i) {
      found[i] = catalog_candidates(catalog.entries[i], lifted_q[i], lifted, monos, cleared, dn, trivial[i]);
    }
    for (const auto& fs : found) {
      for (const auto& f : fs) acc.consider(f);
    }
  }

  if (!acc.full()) {
    const unsigned e = std::max(dn, budget.max_den_degree);
    auto bilinear = bilinear_search(sys, cleared, e, budget.nullspace_rank1_limit, options.jobs);
    result.bilinear = bilinear.status;
    for (const auto& f : bilinear.invariants) acc.consider(f);
  }
  result.invariants = acc.take();
  return result;
}

std::vector<RationalFunction> rational_invariant_search(const DynamicalSystem& sys,
                                                        const SearchBudget& budget,
                                                        const SearchOptions& options) {
  return rational_invariant_search_detailed(sys, budget, options).invariants;
}

std::size_t independence_rank(std::span<const RationalFunction> fs, std::uint64_t seed) {
  return jacobian_rank(fs, seed);
}

InvariantReport adim_lower_bound(const DynamicalSystem& sys, const SearchBudget& budget,
                                 const SearchOptions& options) {
  auto search = rational_invariant_search_detailed(sys, budget, options);
  InvariantReport report{.system = sys, .budget = budget, .invariants = std::move(search.invariants)};
  report.bilinear = search.bilinear;
  report.verified = std::all_of(report.invariants.begin(), report.invariants.end(),
                                [&](const RationalFunction& f) { return is_invariant(sys, f); });
  report.independence_rank = independence_rank(report.invariants, options.seed);
  std::vector<RationalFunction> chosen;
  std::size_t rank = 0;
  for (const auto& f : report.invariants) {
    chosen.push_back(f);
    const std::size_t r = independence_rank(chosen, options.seed);
    if (r > rank) {
      rank = r;
    } else {
      chosen.pop_back();
    }
  }
  report.reduction_generators = std::move(chosen);
  return report;
}

}  // namespace ratdyn
