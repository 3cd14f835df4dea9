#include "ratdyn/exactalg/gcd.hpp"

#include <algorithm>

#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/modular_gcd.hpp"
#include "ratdyn/parallel/modular.hpp"

namespace ratdyn {

namespace {

using modular::Word;

Polynomial one(std::size_t n) { return Polynomial::constant(n, 1); }

Polynomial monomial_gcd(const Polynomial& mono, const Polynomial& other) {
  const std::size_t n = mono.nvars();
  auto base = mono.exponents(0);
  std::vector<Exponent> m(base.begin(), base.end());
  for (std::size_t i = 0; i < other.size(); ++i) {
    auto e = other.exponents(i);
    for (std::size_t v = 0; v < n; ++v) m[v] = std::min(m[v], e[v]);
  }
  return Polynomial::term(Monomial(std::move(m)), 1);
}

long highest_variable(const Polynomial& a) {
  for (long v = static_cast<long>(a.nvars()) - 1; v >= 0; --v) {
    if (a.uses_variable(static_cast<std::size_t>(v))) return v;
  }
  return -1;
}

Polynomial leading_coeff_in(const Polynomial& p, std::size_t var) {
  return p.coefficients_in(var).back();
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b, bool use_modular);

Polynomial content_with(const Polynomial& p, std::size_t var, bool use_modular) {
  if (p.is_zero()) return p;
  Polynomial g(p.nvars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd_impl(g, c, use_modular);
    if (g.is_constant()) return one(p.nvars());
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  Polynomial c = content_with(p, var, false);
  if (c.is_constant()) return p.primitive_integer();
  return exact_divide(p, c).primitive_integer();
}

Polynomial prs_gcd(Polynomial a, Polynomial b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return b.primitive_integer();
    if (r.degree_in(var) == 0) return one(a.nvars());
    a = std::move(b);
    b = primitive_part_in(r, var);
  }
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b, bool use_modular) {
  if (use_modular) {
    if (auto g = modular_gcd(a, b)) return *g;
  }
  const long va = highest_variable(a);
  const long vb = highest_variable(b);
  const std::size_t v = static_cast<std::size_t>(std::max(va, vb));
  if (va != vb) {
    // The higher variable occurs in only one argument: the gcd lives in its content.
    if (va > vb) return gcd_impl(content_with(a, v, use_modular), b, use_modular);
    return gcd_impl(a, content_with(b, v, use_modular), use_modular);
  }
  Polynomial ca = content_with(a, v, use_modular);
  Polynomial cb = content_with(b, v, use_modular);
  Polynomial pa = ca.is_constant() ? a : exact_divide(a, ca);
  Polynomial pb = cb.is_constant() ? b : exact_divide(b, cb);
  Polynomial c = gcd_impl(ca, cb, use_modular);
  Polynomial g = prs_gcd(pa.primitive_integer(), pb.primitive_integer(), v);
  return (c * g).primitive_integer();
}

// Univariate images over Z/p, coefficient k multiplies var^k.
std::vector<Word> univariate_image(const Polynomial& p, std::size_t var,
                                   const std::vector<Word>& point, Word prime) {
  std::vector<Word> out(static_cast<std::size_t>(p.degree_in(var)) + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto e = p.exponents(i);
    Word t = mpz_fdiv_ui(p.coeff(i).get_num_mpz_t(), prime);
    for (std::size_t v = 0; v < p.nvars() && t != 0; ++v) {
      if (v == var) continue;
      for (Exponent k = 0; k < e[v]; ++k) t = modular::mul_mod(t, point[v], prime);
    }
    out[e[var]] = modular::add_mod(out[e[var]], t, prime);
  }
  return out;
}

std::size_t univariate_gcd_degree(std::vector<Word> a, std::vector<Word> b, Word p) {
  auto trim = [](std::vector<Word>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const Word inv = modular::inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const Word factor = modular::mul_mod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        a[shift + k] = modular::sub_mod(a[shift + k], modular::mul_mod(factor, b[k], p), p);
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const long db = b.degree_in(var);
  if (db < 0) throw Error(ErrorCode::division_by_zero, "pseudo-remainder by zero");
  const Polynomial lcb = leading_coeff_in(b, var);
  Polynomial r = a;
  std::vector<Exponent> shift(a.nvars(), 0);
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const long dr = r.degree_in(var);
    Polynomial lcr = leading_coeff_in(r, var);
    shift[var] = static_cast<Exponent>(dr - db);
    Polynomial lead_part = Polynomial::term(Monomial(shift), 1) * lcr;
    r = r * lcb - lead_part * b;
  }
  return r;
}

Polynomial content_in(const Polynomial& p, std::size_t var) { return content_with(p, var, true); }

bool certainly_coprime(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) return false;
  const std::size_t n = a.nvars();
  const Word prime = modular::primes().front();
  Polynomial pa = a.primitive_integer();
  Polynomial pb = b.primitive_integer();
  Rng rng(0x9e3779b97f4a7c15ULL ^ (a.size() * 1315423911u + b.size()));
  for (std::size_t var = 0; var < n; ++var) {
    if (!pa.uses_variable(var) || !pb.uses_variable(var)) continue;
    std::vector<Word> point(n);
    for (auto& x : point) x = 2 + rng.next() % (prime - 3);
    auto ia = univariate_image(pa, var, point, prime);
    auto ib = univariate_image(pb, var, point, prime);
    if (ia.back() == 0 || ib.back() == 0) return false;
    if (univariate_gcd_degree(std::move(ia), std::move(ib), prime) > 0) return false;
  }
  return true;
}

namespace {

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b, bool use_modular) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::structural, "gcd of polynomials over different variable lists");
  }
  const std::size_t n = a.nvars();
  if (a.is_zero()) return b.primitive_integer();
  if (b.is_zero()) return a.primitive_integer();
  if (a.is_constant() || b.is_constant()) return one(n);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  Polynomial pa = a.primitive_integer();
  Polynomial pb = b.primitive_integer();
  if (pa == pb) return pa;
  Polynomial q;
  if (pa.total_degree() <= pb.total_degree()) {
    if (try_divide(pb, pa, q)) return pa;
  } else if (try_divide(pa, pb, q)) {
    return pb;
  }
  if (certainly_coprime(pa, pb)) return one(n);
  return gcd_recursive(pa, pb, use_modular);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) { return gcd_impl(a, b, true); }

Polynomial prs_gcd_reference(const Polynomial& a, const Polynomial& b) {
  return gcd_impl(a, b, false);
}

std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
  std::vector<Polynomial> out;
  std::vector<Polynomial> work{p.primitive_integer()};
  while (!work.empty()) {
    Polynomial f = std::move(work.back());
    work.pop_back();
    if (f.is_constant()) continue;
    bool split = false;
    for (std::size_t v = 0; v < f.nvars() && !split; ++v) {
      if (!f.uses_variable(v)) continue;
      Polynomial g = poly_gcd(f, f.derivative(v));
      if (!g.is_constant()) {
        work.push_back(g);
        work.push_back(exact_divide(f, g).primitive_integer());
        split = true;
      }
    }
    if (!split) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Polynomial> coprime_basis(std::span<const Polynomial> inputs) {
  std::vector<Polynomial> work;
  for (const auto& p : inputs) {
    if (p.is_constant()) continue;
    for (auto& f : squarefree_factors(p)) work.push_back(std::move(f));
  }
  std::vector<Polynomial> basis;
  while (!work.empty()) {
    Polynomial f = std::move(work.back());
    work.pop_back();
    if (f.is_constant()) continue;
    f = f.primitive_integer();
    bool consumed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == f) {
        consumed = true;
        break;
      }
      Polynomial g = poly_gcd(f, basis[i]);
      if (g.is_constant()) continue;
      Polynomial b = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(g);
      work.push_back(exact_divide(b, g));
      work.push_back(exact_divide(f, g));
      consumed = true;
      break;
    }
    if (!consumed) basis.push_back(std::move(f));
  }
  std::sort(basis.begin(), basis.end(), canonical_less);
  return basis;
}

}  // namespace ratdyn
