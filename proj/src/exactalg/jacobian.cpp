#include "ratdyn/exactalg/jacobian.hpp"

#include <algorithm>

#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/linalg.hpp"

namespace ratdyn {

namespace {

std::size_t common_arity(std::span<const RationalFunction> fs) {
  const std::size_t n = fs[0].nvars();
  for (const auto& f : fs) {
    if (f.nvars() != n) throw Error(ErrorCode::structural, "functions over different variable lists");
  }
  return n;
}

// Row of partials of f scaled by den(f)^2, so every entry is a polynomial.
std::vector<Polynomial> cleared_gradient(const RationalFunction& f) {
  const std::size_t n = f.nvars();
  std::vector<Polynomial> row;
  row.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (f.den().is_constant()) {
      row.push_back(f.num().derivative(j));
    } else {
      row.push_back(f.num().derivative(j) * f.den() - f.num() * f.den().derivative(j));
    }
  }
  return row;
}

// Bareiss elimination in place; returns rank and the sign of the row permutation.
std::pair<std::size_t, int> bareiss(std::vector<std::vector<Polynomial>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t n = rows == 0 ? 0 : (cols == 0 ? 0 : m[0][0].nvars());
  Polynomial prev = Polynomial::constant(n, 1);
  std::size_t row = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = rows;
    std::size_t best_size = 0;
    for (std::size_t r = row; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      // Prefer the sparsest pivot.
      if (pivot == rows || m[r][col].size() < best_size) {
        pivot = r;
        best_size = m[r][col].size();
      }
    }
    if (pivot == rows) continue;
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Polynomial t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        m[i][j] = prev.is_constant() ? t * (1 / prev.leading_coeff()) : exact_divide(t, prev);
      }
      m[i][col] = Polynomial(n);
    }
    prev = m[row][col];
    ++row;
  }
  return {row, sign};
}

}  // namespace

std::size_t polynomial_matrix_rank(std::vector<std::vector<Polynomial>> rows) {
  return bareiss(rows).first;
}

Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::structural, "determinant of a non-square matrix");
  }
  if (n == 0) return Polynomial::constant(0, 1);
  const std::size_t arity = rows[0][0].nvars();
  auto [rk, sign] = bareiss(rows);
  if (rk < n) return Polynomial(arity);
  return sign > 0 ? rows[n - 1][n - 1] : -rows[n - 1][n - 1];
}

std::size_t jacobian_rank_exact(std::span<const RationalFunction> fs) {
  if (fs.empty()) return 0;
  common_arity(fs);
  std::vector<std::vector<Polynomial>> m;
  m.reserve(fs.size());
  for (const auto& f : fs) m.push_back(cleared_gradient(f));
  return polynomial_matrix_rank(std::move(m));
}

std::size_t jacobian_rank(std::span<const RationalFunction> fs, std::uint64_t seed) {
  if (fs.empty()) return 0;
  const std::size_t n = common_arity(fs);
  const std::size_t target = std::min(fs.size(), n);
  if (target == 0) return 0;

  std::vector<std::vector<Polynomial>> grads;
  std::vector<Polynomial> dens;
  grads.reserve(fs.size());
  for (const auto& f : fs) {
    grads.push_back(cleared_gradient(f));
    dens.push_back(f.den());
  }
  // Lower bounds from random points; a point where some denominator
  // vanishes is skipped.
  Rng rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Scalar> point(n);
    for (auto& x : point) x = rng.pool_value();
    bool defined = true;
    for (const auto& d : dens) defined = defined && sgn(d.evaluate(point)) != 0;
    if (!defined) continue;
    QMatrix m(fs.size(), n);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = grads[i][j].evaluate(point);
    }
    if (rank(std::move(m)) == target) return target;
  }
  return polynomial_matrix_rank(std::move(grads));
}

}  // namespace ratdyn
