#include "ratdyn/exactalg/linalg.hpp"

#include <algorithm>

#include "ratdyn/error.hpp"

namespace ratdyn {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::structural, "matrix dimensions do not match");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

std::vector<std::size_t> rref_in_place(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Scalar factor;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (sgn(m(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref_in_place(m).size(); }

std::vector<Vector> nullspace_exact(const QMatrix& m) {
  QMatrix r = m;
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> canonical_kernel_basis(std::vector<Vector> basis, std::size_t cols) {
  QMatrix k(basis.size(), cols);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != cols) throw Error(ErrorCode::structural, "kernel vector has wrong length");
    for (std::size_t j = 0; j < cols; ++j) k(i, j) = std::move(basis[i][cols - 1 - j]);
  }
  const auto pivots = rref_in_place(k);
  std::vector<Vector> out(pivots.size(), Vector(cols));
  // Row i of the reversed echelon form has its last nonzero entry at column
  // cols-1-pivots[i]; emit rows in increasing order of that column.
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Vector& v = out[pivots.size() - 1 - i];
    for (std::size_t j = 0; j < cols; ++j) v[cols - 1 - j] = k(i, j);
  }
  return out;
}

ColumnMatrix ColumnMatrix::from_polynomials(std::span<const Polynomial> columns) {
  std::vector<Monomial> rows;
  for (const auto& p : columns) {
    for (std::size_t t = 0; t < p.size(); ++t) rows.push_back(p.monomial(t));
  }
  std::sort(rows.begin(), rows.end(), [](const Monomial& a, const Monomial& b) {
    return grlex_compare(a.exponents(), b.exponents()) > 0;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  auto index_of = [&](std::span<const Exponent> e) {
    auto it = std::lower_bound(rows.begin(), rows.end(), e, [](const Monomial& m, std::span<const Exponent> key) {
      return grlex_compare(m.exponents(), key) > 0;
    });
    return static_cast<std::uint32_t>(it - rows.begin());
  };
  std::vector<Column> cols;
  cols.reserve(columns.size());
  for (const auto& p : columns) {
    Column c;
    c.reserve(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) c.emplace_back(index_of(p.exponents(t)), p.coeff(t));
    cols.push_back(std::move(c));
  }
  return ColumnMatrix(rows.size(), std::move(cols));
}

QMatrix ColumnMatrix::to_dense() const {
  QMatrix m(rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  }
  return m;
}

Vector ColumnMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != columns_.size()) throw Error(ErrorCode::structural, "vector length does not match columns");
  Vector out(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (const auto& [r, x] : columns_[c]) out[r] += x * v[c];
  }
  return out;
}

}  // namespace ratdyn
