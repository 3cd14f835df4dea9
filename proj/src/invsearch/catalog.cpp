#include "ratdyn/invsearch/catalog.hpp"

#include <algorithm>
#include <optional>

#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/gcd.hpp"
#include "ratdyn/invsearch/darboux.hpp"

namespace ratdyn {

namespace {

// Largest monomial dividing every term of f.
std::vector<Exponent> monomial_content(const Polynomial& f) {
  auto first = f.exponents(0);
  std::vector<Exponent> m(first.begin(), first.end());
  for (std::size_t t = 1; t < f.size(); ++t) {
    auto e = f.exponents(t);
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], e[v]);
  }
  return m;
}

void products(const std::vector<Polynomial>& factors, std::size_t start, long remaining,
              const Polynomial& current, std::vector<Polynomial>& out) {
  for (std::size_t i = start; i < factors.size(); ++i) {
    const long d = factors[i].total_degree();
    if (d > remaining) continue;
    Polynomial next = current * factors[i];
    out.push_back(next);
    products(factors, i, remaining - d, next, out);
  }
}

}  // namespace

std::vector<Polynomial> split_factors(const Polynomial& p) {
  if (p.is_constant()) return {};
  const std::size_t n = p.nvars();
  std::vector<Polynomial> out;
  std::vector<Polynomial> work = squarefree_factors(p);
  while (!work.empty()) {
    Polynomial f = std::move(work.back());
    work.pop_back();
    if (f.is_constant()) continue;
    auto mono = monomial_content(f);
    if (std::any_of(mono.begin(), mono.end(), [](Exponent e) { return e != 0; })) {
      for (std::size_t v = 0; v < n; ++v) {
        if (mono[v] != 0) out.push_back(Polynomial::variable(n, v));
      }
      work.push_back(exact_divide(f, Polynomial::term(Monomial(mono), 1)));
      continue;
    }
    bool split = false;
    for (std::size_t v = 0; v < n && !split; ++v) {
      if (!f.uses_variable(v)) continue;
      Polynomial c = content_in(f, v);
      if (c.is_constant()) continue;
      work.push_back(c);
      work.push_back(exact_divide(f, c));
      split = true;
    }
    if (!split) out.push_back(f.primitive_integer());
  }
  return coprime_basis(out);
}

DenominatorCatalog build_denominator_catalog(const DynamicalSystem& sys, const SearchBudget& budget) {
  DenominatorCatalog catalog;
  if (budget.denominator_catalog_depth == 0 || budget.max_den_degree == 0) return catalog;
  std::vector<Polynomial> pieces;
  IterateCache cache(sys);
  for (unsigned k = 1; k <= budget.denominator_catalog_depth; ++k) {
    std::optional<DynamicalSystem> it;
    try {
      it = cache.get(k);
    } catch (const Error& e) {
      // phi^k undefined: deeper iterates are too.
      if (e.code() != ErrorCode::indeterminacy) throw;
      break;
    }
    for (const auto& c : it->coords()) {
      for (auto& f : split_factors(c.num())) pieces.push_back(std::move(f));
      for (auto& f : split_factors(c.den())) pieces.push_back(std::move(f));
    }
  }
  for (auto& f : darboux_factors(ClearedMap(sys), budget.max_den_degree)) pieces.push_back(std::move(f));
  for (auto& f : coprime_basis(pieces)) {
    if (f.total_degree() <= static_cast<long>(budget.max_den_degree)) catalog.factors.push_back(std::move(f));
  }
  products(catalog.factors, 0, budget.max_den_degree, Polynomial::constant(sys.dimension(), 1),
           catalog.entries);
  std::sort(catalog.entries.begin(), catalog.entries.end(), canonical_less);
  catalog.entries.erase(std::unique(catalog.entries.begin(), catalog.entries.end()), catalog.entries.end());
  return catalog;
}

}  // namespace ratdyn
