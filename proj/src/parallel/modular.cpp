#include "ratdyn/parallel/modular.hpp"

#include <omp.h>

#include <utility>

#include "ratdyn/error.hpp"

namespace ratdyn::modular {

namespace {

bool is_prime(Word n) {
  if (n < 2) return false;
  for (Word d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

const std::vector<Word>& primes() {
  static const std::vector<Word> table = [] {
    std::vector<Word> out;
    for (Word n = (Word{1} << 31) - 1; out.size() < 64; n -= 2) {
      if (is_prime(n)) out.push_back(n);
    }
    return out;
  }();
  return table;
}

Word inv_mod(Word a, Word p) {
  // Extended Euclid on signed 64-bit values (p < 2^31).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  if (new_r == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero modulo p");
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<Word>(t);
}

std::optional<Word> reduce(const Scalar& q, Word p) {
  const Word den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  const Word num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return mul_mod(num, inv_mod(den, p), p);
}

std::optional<Scalar> rational_reconstruct(const Integer& residue, const Integer& modulus) {
  // Half-extended Euclid stopping once the remainder drops below the bound.
  Integer bound;
  Integer half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  Integer t0 = 0, t1 = 1;
  Integer q, tmp;
  while (r1 > bound) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Scalar out(r1, t1);
  out.canonicalize();
  return out;
}

namespace {

template <bool Parallel>
std::vector<std::size_t> rref_impl(ModMatrix& m, int jobs) {
  const Word p = m.prime;
  const std::size_t rows = m.rows;
  const std::size_t cols = m.cols;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = row; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    }
    const Word inv = inv_mod(m.at(row, col), p);
    Word* prow = &m.data[row * cols];
    for (std::size_t c = col; c < cols; ++c) prow[c] = mul_mod(prow[c], inv, p);

    // Each non-pivot row is updated independently.
    const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) num_threads(jobs) if (Parallel && rows * (cols - col) > 4096)
    for (std::int64_t r = 0; r < n; ++r) {
      if (static_cast<std::size_t>(r) == row) continue;
      Word* target = &m.data[static_cast<std::size_t>(r) * cols];
      const Word f = target[col];
      if (f == 0) continue;
      const Word neg = p - f;
      for (std::size_t c = col; c < cols; ++c) {
        if (prow[c] != 0) target[c] = (target[c] + neg * prow[c]) % p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_serial(ModMatrix& m) { return rref_impl<false>(m, 1); }

std::vector<std::size_t> rref_parallel(ModMatrix& m, int jobs) {
  if (jobs <= 0) jobs = omp_get_max_threads();
  return rref_impl<true>(m, jobs);
}

}  // namespace ratdyn::modular
