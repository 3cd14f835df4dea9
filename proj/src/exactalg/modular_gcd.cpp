#include "ratdyn/exactalg/modular_gcd.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ratdyn/parallel/modular.hpp"

namespace ratdyn {

namespace {

using modular::add_mod;
using modular::inv_mod;
using modular::mul_mod;
using modular::sub_mod;
using modular::Word;

// Coefficient k multiplies t^k; no trailing zeros, so zero is empty.
using Uni = std::vector<Word>;
using Key = std::vector<Exponent>;
// Descending lex on exponent vectors, variable 0 most significant.
using ModPoly = std::map<Key, Word, std::greater<Key>>;
using Grouped = std::map<Key, Uni, std::greater<Key>>;

void trim(Uni& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

long deg(const Uni& u) { return static_cast<long>(u.size()) - 1; }

Word eval(const Uni& u, Word x, Word p) {
  Word acc = 0;
  for (auto it = u.rbegin(); it != u.rend(); ++it) acc = add_mod(mul_mod(acc, x, p), *it, p);
  return acc;
}

Uni mul(const Uni& a, const Uni& b, Word p) {
  if (a.empty() || b.empty()) return {};
  Uni r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

// Returns the quotient; `a` is left holding the remainder.
Uni divrem(Uni& a, const Uni& b, Word p) {
  if (a.size() < b.size()) return {};
  Uni q(a.size() - b.size() + 1, 0);
  const Word inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const Word f = mul_mod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = sub_mod(a[shift + k], mul_mod(f, b[k], p), p);
    trim(a);
  }
  return q;
}

void make_monic(Uni& u, Word p) {
  if (u.empty()) return;
  const Word inv = inv_mod(u.back(), p);
  for (auto& c : u) c = mul_mod(c, inv, p);
}

Uni gcd(Uni a, Uni b, Word p) {
  while (!b.empty()) {
    divrem(a, b, p);
    std::swap(a, b);
  }
  make_monic(a, p);
  return a;
}

Grouped group(const ModPoly& f, std::size_t v) {
  Grouped out;
  for (const auto& [k, c] : f) {
    Key key = k;
    const Exponent e = key[v];
    key[v] = 0;
    Uni& u = out[key];
    if (u.size() <= e) u.resize(e + 1, 0);
    u[e] = c;
  }
  return out;
}

ModPoly ungroup(const Grouped& g, std::size_t v) {
  ModPoly out;
  for (const auto& [k, u] : g) {
    for (std::size_t e = 0; e < u.size(); ++e) {
      if (u[e] == 0) continue;
      Key key = k;
      key[v] = static_cast<Exponent>(e);
      out.emplace(std::move(key), u[e]);
    }
  }
  return out;
}

ModPoly evaluate(const Grouped& g, Word alpha, Word p) {
  ModPoly out;
  for (const auto& [k, u] : g) {
    const Word c = eval(u, alpha, p);
    if (c != 0) out.emplace(k, c);
  }
  return out;
}

Uni content(const Grouped& g, Word p) {
  Uni c;
  for (const auto& [k, u] : g) {
    c = gcd(c, u, p);
    if (c.size() == 1) break;
  }
  return c;
}

void divide_groups(Grouped& g, const Uni& c, Word p) {
  if (c.size() == 1) return;
  for (auto& [k, u] : g) u = divrem(u, c, p);
}

void make_monic(ModPoly& f, Word p) {
  const Word inv = inv_mod(f.begin()->second, p);
  for (auto& [k, c] : f) c = mul_mod(c, inv, p);
}

long max_degree(const Grouped& g) {
  long d = 0;
  for (const auto& [k, u] : g) d = std::max(d, deg(u));
  return d;
}

// Monic gcd over Z/p in the variables `vars`; other exponents are zero.
ModPoly pgcd(const ModPoly& a, const ModPoly& b, std::span<const std::size_t> vars, Word p,
             std::size_t nvars) {
  if (vars.empty()) return ModPoly{{Key(nvars, 0), 1}};
  const std::size_t v = vars.back();
  Grouped ga = group(a, v);
  Grouped gb = group(b, v);
  if (vars.size() == 1) {
    return ungroup(Grouped{{Key(nvars, 0), gcd(ga.begin()->second, gb.begin()->second, p)}}, v);
  }
  const auto rest = vars.first(vars.size() - 1);

  const Uni ca = content(ga, p);
  const Uni cb = content(gb, p);
  divide_groups(ga, ca, p);
  divide_groups(gb, cb, p);
  const Uni c = gcd(ca, cb, p);
  const Uni& lca = ga.begin()->second;
  const Uni& lcb = gb.begin()->second;
  const Uni gamma = gcd(lca, lcb, p);
  const long needed = deg(gamma) + std::min(max_degree(ga), max_degree(gb)) + 1;

  Grouped h;
  Uni q{1};
  Key lm;
  long count = 0;
  for (Word alpha = 1; count < needed; ++alpha) {
    if (alpha == p) throw std::runtime_error("modular gcd ran out of evaluation points");
    if (eval(lca, alpha, p) == 0 || eval(lcb, alpha, p) == 0) continue;
    ModPoly g = pgcd(evaluate(ga, alpha, p), evaluate(gb, alpha, p), rest, p, nvars);
    const Key& glm = g.begin()->first;
    if (count > 0 && glm > lm) continue;
    if (count == 0 || glm < lm) {
      h.clear();
      q = {1};
      count = 0;
      lm = glm;
    }
    const Word scale = eval(gamma, alpha, p);
    for (auto& [k, x] : g) x = mul_mod(x, scale, p);
    for (const auto& [k, x] : g) h[k];
    const Word qinv = inv_mod(eval(q, alpha, p), p);
    for (auto& [k, u] : h) {
      auto it = g.find(k);
      const Word target = it == g.end() ? 0 : it->second;
      const Word diff = sub_mod(target, eval(u, alpha, p), p);
      if (diff == 0) continue;
      const Word f = mul_mod(diff, qinv, p);
      if (u.size() < q.size()) u.resize(q.size(), 0);
      for (std::size_t i = 0; i < q.size(); ++i) u[i] = add_mod(u[i], mul_mod(f, q[i], p), p);
      trim(u);
    }
    q = mul(q, Uni{p - alpha, 1}, p);
    ++count;
  }
  std::erase_if(h, [](const auto& kv) { return kv.second.empty(); });
  divide_groups(h, content(h, p), p);
  for (auto& [k, u] : h) u = mul(u, c, p);
  ModPoly out = ungroup(h, v);
  make_monic(out, p);
  return out;
}

ModPoly reduce(const Polynomial& f, Word p) {
  ModPoly out;
  for (std::size_t t = 0; t < f.size(); ++t) {
    const Word c = mpz_fdiv_ui(f.coeff(t).get_num_mpz_t(), p);
    if (c == 0) continue;
    auto e = f.exponents(t);
    out.emplace(Key(e.begin(), e.end()), c);
  }
  return out;
}

Integer lex_leading_coeff(const Polynomial& f) {
  std::size_t best = 0;
  for (std::size_t t = 1; t < f.size(); ++t) {
    auto a = f.exponents(t);
    auto b = f.exponents(best);
    if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) best = t;
  }
  return f.coeff(best).get_num();
}

bool is_one(const ModPoly& f) {
  const auto& k = f.begin()->first;
  return std::all_of(k.begin(), k.end(), [](Exponent e) { return e == 0; });
}

}  // namespace

std::optional<Polynomial> modular_gcd(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.nvars();
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < n; ++v) {
    if (a.uses_variable(v) || b.uses_variable(v)) vars.push_back(v);
  }
  const Integer lca = lex_leading_coeff(a);
  const Integer lcb = lex_leading_coeff(b);
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), lca.get_mpz_t(), lcb.get_mpz_t());

  std::map<Key, Integer, std::greater<Key>> acc;
  Integer modulus = 0;
  Key lm;
  Polynomial previous;
  for (Word p : modular::primes()) {
    if (mpz_fdiv_ui(lca.get_mpz_t(), p) == 0 || mpz_fdiv_ui(lcb.get_mpz_t(), p) == 0) continue;
    ModPoly g = pgcd(reduce(a, p), reduce(b, p), vars, p, n);
    if (is_one(g)) return Polynomial::constant(n, 1);
    const Key& glm = g.begin()->first;
    if (modulus != 0 && glm > lm) continue;
    if (modulus == 0 || glm < lm) {
      acc.clear();
      modulus = 0;
      previous = Polynomial();
      lm = glm;
    }
    const Word scale = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    if (modulus == 0) {
      for (const auto& [k, x] : g) acc[k] = Integer(static_cast<unsigned long>(mul_mod(x, scale, p)));
      modulus = p;
    } else {
      for (const auto& [k, x] : g) acc[k];
      const Word minv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      for (auto& [k, r] : acc) {
        auto it = g.find(k);
        const Word target = it == g.end() ? 0 : mul_mod(it->second, scale, p);
        const Word diff = sub_mod(target, mpz_fdiv_ui(r.get_mpz_t(), p), p);
        r += modulus * static_cast<unsigned long>(mul_mod(diff, minv, p));
      }
      modulus *= static_cast<unsigned long>(p);
    }

    const Integer half = modulus / 2;
    PolynomialBuilder builder(n);
    for (const auto& [k, r] : acc) builder.add(k, Scalar(r > half ? Integer(r - modulus) : r));
    Polynomial candidate = builder.build();
    if (!previous.is_zero() && candidate == previous) {
      Polynomial g_z = candidate.primitive_integer();
      Polynomial q;
      if (try_divide(a, g_z, q) && try_divide(b, g_z, q)) return g_z;
    }
    previous = std::move(candidate);
  }
  return std::nullopt;
}

}  // namespace ratdyn
