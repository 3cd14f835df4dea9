#include "ratdyn/invsearch/bilinear.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/gcd.hpp"
#include "ratdyn/exactalg/jacobian.hpp"
#include "ratdyn/exactalg/linalg.hpp"
#include "ratdyn/parallel/nullspace.hpp"

namespace ratdyn {

std::string_view to_string(BilinearStatus s) noexcept {
  switch (s) {
    case BilinearStatus::skipped: return "skipped";
    case BilinearStatus::complete: return "complete";
    case BilinearStatus::inconclusive: return "inconclusive";
  }
  return "skipped";
}

// ---------------------------------------------------------------------------
// Univariate roots and resultants

namespace {

void add_root(std::vector<Scalar>& out, const Scalar& r) {
  if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
}

bool is_square(const Integer& z, Integer& root) {
  if (z < 0) return false;
  if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
  return true;
}

// Candidate rationals near x from continued-fraction convergents, each
// checked exactly.
void numeric_candidates(const Polynomial& f, long double x, std::vector<Scalar>& out) {
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double rest = x;
  for (int step = 0; step < 40; ++step) {
    const long double fl = std::floor(rest);
    if (std::fabs(fl) > 1e18L) break;
    const Integer a(static_cast<long>(fl));
    Integer h2 = a * h1 + h0;
    Integer k2 = a * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (k1 > Integer("1000000000000")) break;
    Scalar r(h1, k1);
    r.canonicalize();
    const Scalar point[1] = {r};
    if (sgn(f.evaluate(point)) == 0) {
      add_root(out, r);
      return;
    }
    const long double frac = rest - fl;
    if (frac < 1e-15L) break;
    rest = 1.0L / frac;
  }
}

void numeric_roots(const Polynomial& f, std::vector<Scalar>& out) {
  const long deg = f.degree_in(0);
  std::vector<long double> c(static_cast<std::size_t>(deg) + 1, 0.0L);
  for (std::size_t t = 0; t < f.size(); ++t) c[f.exponents(t)[0]] = f.coeff(t).get_d();
  for (auto& x : c) x /= c.back();
  // Durand-Kerner iteration on the monic polynomial.
  using C = std::complex<long double>;
  std::vector<C> z(static_cast<std::size_t>(deg));
  const C seed(0.4L, 0.9L);
  C p = 1;
  for (auto& r : z) r = (p *= seed);
  auto eval = [&](C x) {
    C acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    long double moved = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (std::abs(denom) == 0) denom = 1e-30L;
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-18L) break;
  }
  for (const auto& r : z) {
    if (std::fabs(r.imag()) < 1e-6L * (1 + std::fabs(r.real()))) numeric_candidates(f, r.real(), out);
  }
}

}  // namespace

std::vector<Scalar> rational_roots(const Polynomial& p) {
  if (p.nvars() != 1) throw Error(ErrorCode::structural, "rational_roots needs a univariate polynomial");
  std::vector<Scalar> out;
  if (p.is_zero() || p.is_constant()) return out;
  for (const auto& f : squarefree_factors(p)) {
    const long d = f.degree_in(0);
    const Scalar a = f.coefficient_of(std::vector<Exponent>{static_cast<Exponent>(d)});
    if (d == 1) {
      add_root(out, -f.constant_term() / a);
    } else if (d == 2) {
      const Scalar b = f.coefficient_of(std::vector<Exponent>{1});
      const Scalar c = f.constant_term();
      // f is primitive integer, so the discriminant is an integer.
      const Integer disc = Scalar(b * b - 4 * a * c).get_num();
      Integer root;
      if (!is_square(disc, root)) continue;
      add_root(out, (-b + Scalar(root)) / (2 * a));
      add_root(out, (-b - Scalar(root)) / (2 * a));
    } else {
      numeric_roots(f, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const long da = a.degree_in(var);
  const long db = b.degree_in(var);
  const std::size_t n = a.nvars();
  if (da < 0 || db < 0) return Polynomial(n);
  if (da == 0) return a.pow(static_cast<unsigned>(db));
  if (db == 0) return b.pow(static_cast<unsigned>(da));
  const auto ca = a.coefficients_in(var);
  const auto cb = b.coefficients_in(var);
  const std::size_t size = static_cast<std::size_t>(da + db);
  std::vector<std::vector<Polynomial>> rows(size, std::vector<Polynomial>(size, Polynomial(n)));
  for (long r = 0; r < db; ++r) {
    for (long k = 0; k <= da; ++k) rows[r][r + da - k] = ca[k];
  }
  for (long r = 0; r < da; ++r) {
    for (long k = 0; k <= db; ++k) rows[db + r][r + db - k] = cb[k];
  }
  return polynomial_determinant(std::move(rows));
}

// ---------------------------------------------------------------------------
// Rank-one points of a small linear family of antisymmetric matrices

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

struct Family {
  std::size_t params = 0;
  // Linear form in the parameters for each pair (i < j) in the support.
  std::map<Pair, Polynomial> entries;
};

Polynomial entry(const Family& fam, std::size_t i, std::size_t j) {
  if (i == j) return Polynomial(fam.params);
  if (i < j) {
    auto it = fam.entries.find({i, j});
    return it == fam.entries.end() ? Polynomial(fam.params) : it->second;
  }
  return -entry(fam, j, i);
}

std::vector<Polynomial> pfaffian_quadrics(const Family& fam) {
  std::vector<std::size_t> support;
  for (const auto& [pair, form] : fam.entries) {
    support.push_back(pair.first);
    support.push_back(pair.second);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<Polynomial> out;
  const std::size_t s = support.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c)
        for (std::size_t d = c + 1; d < s; ++d) {
          const std::size_t i = support[a], j = support[b], k = support[c], l = support[d];
          Polynomial q = entry(fam, i, j) * entry(fam, k, l) - entry(fam, i, k) * entry(fam, j, l) +
                         entry(fam, i, l) * entry(fam, j, k);
          if (!q.is_zero()) out.push_back(q.primitive_integer());
        }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial gcd_all(const std::vector<Polynomial>& fs, std::size_t nvars) {
  Polynomial g(nvars);
  for (const auto& f : fs) g = poly_gcd(g, f);
  return g;
}

std::vector<Polynomial> nonzero(std::vector<Polynomial> fs) {
  std::erase_if(fs, [](const Polynomial& f) { return f.is_zero(); });
  return fs;
}

// Restricts polynomials in (s, u) to s = s0, as polynomials in u.
std::vector<Polynomial> at_first(const std::vector<Polynomial>& fs, const Scalar& s0) {
  const Polynomial images[2] = {Polynomial::constant(1, s0), Polynomial::variable(1, 0)};
  std::vector<Polynomial> out;
  for (const auto& f : fs) out.push_back(f.compose(images));
  return out;
}

Polynomial as_univariate(const Polynomial& f, std::size_t var) {
  std::vector<Polynomial> images(f.nvars(), Polynomial::constant(1, 0));
  images[var] = Polynomial::variable(1, 0);
  return f.compose(images);
}

std::vector<Scalar> common_roots(const std::vector<Polynomial>& univariate, bool& free) {
  auto fs = nonzero(univariate);
  free = fs.empty();
  if (free) return {};
  return rational_roots(gcd_all(fs, 1));
}

const Scalar kSamples[] = {0, 1, -1, 2};

// Rational zeros (s, u) of quadrics in two unknowns; finite sets in full,
// curves only at a few sample abscissae.
std::vector<std::pair<Scalar, Scalar>> plane_points(const std::vector<Polynomial>& quadrics) {
  std::vector<std::pair<Scalar, Scalar>> out;
  auto fs = nonzero(quadrics);
  std::vector<Scalar> abscissae;
  if (fs.empty()) {
    for (const auto& s : kSamples) out.emplace_back(s, 0);
    return out;
  }
  const Polynomial g = gcd_all(fs, 2);
  std::vector<Polynomial> rest;
  for (const auto& f : fs) {
    Polynomial h = exact_divide(f, g);
    if (!h.is_constant()) rest.push_back(h.primitive_integer());
  }
  if (!g.is_constant()) {
    if (g.degree_in(1) == 0) {
      for (const auto& r : rational_roots(as_univariate(g, 0))) abscissae.push_back(r);
    } else {
      for (const auto& s : kSamples) abscissae.push_back(s);
      // Vertical components: roots of the leading coefficient in u.
      for (const auto& r : rational_roots(as_univariate(g.coefficients_in(1).back(), 0))) abscissae.push_back(r);
    }
  }
  const std::size_t limit = std::min<std::size_t>(rest.size(), 6);
  for (std::size_t a = 0; a < limit; ++a) {
    if (rest[a].degree_in(1) == 0) {
      for (const auto& r : rational_roots(as_univariate(rest[a], 0))) abscissae.push_back(r);
      continue;
    }
    for (std::size_t b = a + 1; b < limit; ++b) {
      if (rest[b].degree_in(1) == 0) continue;
      Polynomial r = resultant(rest[a], rest[b], 1);
      if (r.is_zero() || r.is_constant()) continue;
      for (const auto& x : rational_roots(as_univariate(r, 0))) abscissae.push_back(x);
    }
  }
  std::sort(abscissae.begin(), abscissae.end());
  abscissae.erase(std::unique(abscissae.begin(), abscissae.end()), abscissae.end());
  for (const auto& s0 : abscissae) {
    bool free = false;
    auto us = common_roots(at_first(fs, s0), free);
    if (free) us = {0};
    for (const auto& u0 : us) out.emplace_back(s0, u0);
  }
  return out;
}

// Rank-one points of the family up to scaling, over the affine charts
// t_c = 1, t_j = 0 (j < c).
std::vector<Vector> rank_one_points(const Family& fam) {
  const std::size_t k = fam.params;
  const auto quadrics = pfaffian_quadrics(fam);
  std::vector<Vector> points;
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t r = k - 1 - c;
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < k; ++j) {
      if (j < c) images.push_back(Polynomial::constant(r, 0));
      else if (j == c) images.push_back(Polynomial::constant(r, 1));
      else images.push_back(Polynomial::variable(r, j - c - 1));
    }
    std::vector<Polynomial> restricted;
    for (const auto& q : quadrics) restricted.push_back(q.compose(images));
    auto make = [&](std::vector<Scalar> free_values) {
      Vector t(k, 0);
      t[c] = 1;
      for (std::size_t j = 0; j < r; ++j) t[c + 1 + j] = free_values[j];
      points.push_back(std::move(t));
    };
    if (r == 0) {
      if (nonzero(restricted).empty()) make({});
    } else if (r == 1) {
      bool free = false;
      auto roots = common_roots(restricted, free);
      if (free) roots.assign(std::begin(kSamples), std::end(kSamples));
      for (const auto& s : roots) make({s});
    } else {
      for (const auto& [s, u] : plane_points(restricted)) make({s, u});
    }
  }
  return points;
}

std::optional<RationalFunction> ratio_of_rows(const std::map<Pair, Scalar>& w,
                                              const std::vector<Monomial>& basis) {
  const std::size_t n = basis.front().nvars();
  std::map<std::size_t, PolynomialBuilder> rows;
  for (const auto& [pair, value] : w) {
    rows.try_emplace(pair.first, n).first->second.add(basis[pair.second].exponents(), value);
    rows.try_emplace(pair.second, n).first->second.add(basis[pair.first].exponents(), -value);
  }
  std::vector<Polynomial> built;
  for (auto& [i, b] : rows) {
    Polynomial p = b.build();
    if (!p.is_zero()) built.push_back(std::move(p));
  }
  for (std::size_t j = 1; j < built.size(); ++j) {
    RationalFunction f = ratfunc_normalize(built.front(), built[j]);
    if (!f.is_constant()) return f;
  }
  return std::nullopt;
}

}  // namespace

BilinearResult bilinear_search(const DynamicalSystem& sys, const ClearedMap& cleared, unsigned e,
                               unsigned rank1_limit, int jobs) {
  BilinearResult result;
  const std::size_t n = sys.dimension();
  const auto basis = monomials_up_to(n, e);
  const auto lifted = cleared.lifted_monomials(e);
  std::vector<Pair> pairs;
  std::vector<Polynomial> columns;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      pairs.emplace_back(i, j);
      columns.push_back(lifted[i].mul_monomial(basis[j].exponents(), 1) -
                        lifted[j].mul_monomial(basis[i].exponents(), 1));
    }
  }
  if (columns.empty()) {
    result.status = BilinearStatus::complete;
    return result;
  }
  const ColumnMatrix matrix = ColumnMatrix::from_polynomials(columns);
  const std::size_t bound = nullity_upper_bound(matrix, jobs);
  result.kernel_dimension = bound;
  if (bound == 0) {
    result.status = BilinearStatus::complete;
    return result;
  }
  if (bound > rank1_limit || bound > 3) {
    result.status = BilinearStatus::inconclusive;
    return result;
  }
  const auto kernel = nullspace(matrix, {NullspaceRoute::automatic, jobs});
  result.kernel_dimension = kernel.size();
  result.status = BilinearStatus::complete;
  if (kernel.empty()) return result;

  Family fam;
  fam.params = kernel.size();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    PolynomialBuilder form(fam.params);
    std::vector<Exponent> unit(fam.params, 0);
    for (std::size_t l = 0; l < kernel.size(); ++l) {
      if (sgn(kernel[l][p]) == 0) continue;
      unit.assign(fam.params, 0);
      unit[l] = 1;
      form.add(unit, kernel[l][p]);
    }
    Polynomial f = form.build();
    if (!f.is_zero()) fam.entries.emplace(pairs[p], std::move(f));
  }

  for (const auto& t : rank_one_points(fam)) {
    std::map<Pair, Scalar> w;
    for (const auto& [pair, form] : fam.entries) {
      Scalar v = form.evaluate(t);
      if (sgn(v) != 0) w.emplace(pair, std::move(v));
    }
    if (w.empty()) continue;
    auto f = ratio_of_rows(w, basis);
    if (!f || !is_invariant(sys, *f)) continue;
    if (std::find(result.invariants.begin(), result.invariants.end(), *f) == result.invariants.end()) {
      result.invariants.push_back(std::move(*f));
    }
  }
  return result;
}

}  // namespace ratdyn
