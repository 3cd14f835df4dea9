#include "ratdyn/invsearch/darboux.hpp"

#include <random>

#include "ratdyn/exactalg/gcd.hpp"
#include "ratdyn/invsearch/bilinear.hpp"
#include "ratdyn/invsearch/catalog.hpp"
#include "ratdyn/parallel/modular.hpp"
#include "ratdyn/parallel/nullspace.hpp"

namespace ratdyn {

namespace {

using modular::Word;

// Determinant mod p by elimination; destroys m.
Word det_mod(std::vector<Word>& m, std::size_t n, Word p) {
  Word det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
      det = p - det;
    }
    det = modular::mul_mod(det, m[c * n + c], p);
    const Word inv = modular::inv_mod(m[c * n + c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Word f = modular::mul_mod(m[r * n + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        m[r * n + j] = modular::sub_mod(m[r * n + j], modular::mul_mod(f, m[c * n + j], p), p);
      }
    }
  }
  return det % p;
}

// Coefficients (ascending) of det(t P - Q) mod p from values at 0..n.
std::vector<Word> pencil_det_mod(const std::vector<Integer>& pm, const std::vector<Integer>& qm, std::size_t n, Word p) {
  std::vector<Word> ps(pm.size()), qs(qm.size());
  for (std::size_t i = 0; i < pm.size(); ++i) {
    ps[i] = Integer(((pm[i] % p) + p) % p).get_ui();
    qs[i] = Integer(((qm[i] % p) + p) % p).get_ui();
  }
  // Newton interpolation through (k, det(k P - Q)).
  std::vector<Word> newton;
  for (Word k = 0; k <= n; ++k) {
    std::vector<Word> m(n * n);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = modular::sub_mod(modular::mul_mod(k, ps[i], p), qs[i], p);
    Word v = det_mod(m, n, p);
    for (Word j = 0; j < k; ++j) {
      v = modular::mul_mod(modular::sub_mod(v, newton[j], p), modular::inv_mod(k - j, p), p);
    }
    newton.push_back(v);
  }
  std::vector<Word> out(n + 1, 0);
  for (std::size_t j = newton.size(); j-- > 0;) {
    // out = out * (t - j) + newton[j]
    std::vector<Word> next(n + 1, 0);
    for (std::size_t e = 0; e + 1 <= n; ++e) next[e + 1] = out[e];
    for (std::size_t e = 0; e <= n; ++e) next[e] = modular::sub_mod(next[e], modular::mul_mod(j % p, out[e], p), p);
    next[0] = modular::add_mod(next[0], newton[j], p);
    out = std::move(next);
  }
  return out;
}

// All divisors of prod f_i^mult_i.
void divisors(const std::vector<Polynomial>& fs, const std::vector<unsigned>& mult, std::size_t i,
              const Polynomial& current, std::vector<Polynomial>& out) {
  if (i == fs.size()) {
    out.push_back(current);
    return;
  }
  Polynomial p = current;
  for (unsigned k = 0; k <= mult[i]; ++k) {
    divisors(fs, mult, i + 1, p, out);
    p = p * fs[i];
  }
}

std::vector<Polynomial> cofactors(const Polynomial& m, unsigned power) {
  const std::size_t n = m.nvars();
  std::vector<Polynomial> fs = split_factors(m);
  std::vector<unsigned> mult;
  for (const auto& f : fs) {
    unsigned k = 0;
    Polynomial rest = m;
    Polynomial q(n);
    while (try_divide(rest, f, q)) {
      rest = q;
      ++k;
    }
    mult.push_back(k * power);
  }
  std::vector<Polynomial> out;
  divisors(fs, mult, 0, Polynomial::constant(n, 1), out);
  return out;
}

// Kernel of (lift - lambda K) on polynomials of degree <= d, for each
// rational lambda admitted by a random square projection of the pencil.
std::vector<Polynomial> eigenpolynomials(const std::vector<Polynomial>& lifted, const std::vector<Monomial>& monos,
                                         const Polynomial& k, unsigned d, std::mt19937_64& rng) {
  const std::size_t n = k.nvars();
  const std::size_t size = monos.size();
  std::vector<Polynomial> columns = lifted;
  for (const auto& u : monos) columns.push_back(k.mul_monomial(u.exponents(), 1));
  const ColumnMatrix sparse = ColumnMatrix::from_polynomials(columns);

  std::uniform_int_distribution<int> small(-3, 3);
  std::vector<std::vector<int>> r(size, std::vector<int>(sparse.rows()));
  for (auto& row : r) {
    for (auto& x : row) x = small(rng);
  }
  // det(t R K - R L) vanishes at every rational eigenvalue of the pencil.
  QMatrix pk(size, size), pl(size, size);
  for (std::size_t col = 0; col < 2 * size; ++col) {
    QMatrix& target = col < size ? pl : pk;
    const std::size_t c = col % size;
    for (const auto& [row, value] : sparse.column(col)) {
      for (std::size_t i = 0; i < size; ++i) {
        if (r[i][row] != 0) target(i, c) += r[i][row] * value;
      }
    }
  }
  const Polynomial det = pencil_determinant(pk, pl);
  if (det.is_zero()) return {};

  std::vector<Polynomial> out;
  for (const auto& lambda : rational_roots(det)) {
    if (sgn(lambda) == 0) continue;
    std::vector<Polynomial> shifted;
    shifted.reserve(size);
    for (std::size_t i = 0; i < size; ++i) shifted.push_back(lifted[i] - columns[size + i] * lambda);
    for (const auto& v : nullspace(ColumnMatrix::from_polynomials(shifted))) {
      Polynomial q = from_coefficients(n, d, v);
      if (!q.is_constant()) out.push_back(std::move(q));
    }
  }
  return out;
}

}  // namespace

Polynomial pencil_determinant(const QMatrix& p, const QMatrix& q) {
  const std::size_t n = p.rows();
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p(i, j).get_den_mpz_t());
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q(i, j).get_den_mpz_t());
    }
  }
  std::vector<Integer> pm, qm;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pm.push_back(Scalar(p(i, j) * scale).get_num());
      qm.push_back(Scalar(q(i, j) * scale).get_num());
    }
  }
  std::vector<Integer> value(n + 1, 0);
  Integer modulus = 1;
  int stable = 0;
  for (const Word prime : modular::primes()) {
    const auto residues = pencil_det_mod(pm, qm, n, prime);
    bool changed = false;
    const Integer inv(modular::inv_mod(Integer(modulus % prime).get_ui(), prime));
    for (std::size_t e = 0; e <= n; ++e) {
      const Integer current = ((value[e] % prime) + prime) % prime;
      const Integer delta = ((Integer(residues[e]) - current + prime) * inv) % prime;
      if (delta != 0) {
        value[e] += modulus * delta;
        changed = true;
      }
    }
    modulus *= prime;
    for (auto& v : value) {
      v %= modulus;
      if (v < 0) v += modulus;
      if (2 * v > modulus) v -= modulus;
    }
    stable = changed ? 0 : stable + 1;
    if (stable == 2) break;
  }
  std::vector<Scalar> coeffs(value.begin(), value.end());
  return from_coefficients(1, static_cast<unsigned>(n), coeffs);
}

std::vector<Polynomial> darboux_factors(const ClearedMap& cleared, unsigned max_degree) {
  const std::size_t n = cleared.nvars();
  std::mt19937_64 rng(0x5eed);
  std::vector<Polynomial> pieces;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const auto monos = monomials_up_to(n, d);
    const auto lifted = cleared.lifted_monomials(d);
    for (const auto& k : cofactors(cleared.denominator(), d)) {
      for (const auto& q : eigenpolynomials(lifted, monos, k, d, rng)) {
        for (auto& f : split_factors(q)) {
          if (f.total_degree() <= static_cast<long>(max_degree)) pieces.push_back(std::move(f));
        }
      }
    }
  }
  return coprime_basis(pieces);
}

}  // namespace ratdyn
