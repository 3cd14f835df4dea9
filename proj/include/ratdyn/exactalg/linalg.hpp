#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ratdyn/exactalg/polynomial.hpp"
#include "ratdyn/exactalg/scalar.hpp"

namespace ratdyn {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& other) const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Gauss-Jordan elimination to reduced row echelon form; returns the pivot
/// columns in increasing order.
std::vector<std::size_t> rref_in_place(QMatrix& m);
std::size_t rank(QMatrix m);

/// Canonical nullspace basis: one vector per free column f of the reduced
/// row echelon form, equal to 1 at f, zero at every other free column.
/// Vectors are ordered by increasing free column.
std::vector<Vector> nullspace_exact(const QMatrix& m);

/// Brings any spanning set of a subspace to the canonical basis described
/// above (reduced echelon form with the column order reversed).
std::vector<Vector> canonical_kernel_basis(std::vector<Vector> basis, std::size_t cols);

/// Sparse column-oriented matrix over Q; the natural shape of linear systems
/// whose columns are coefficient vectors of polynomials.
class ColumnMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Scalar>;
  using Column = std::vector<Entry>;

  ColumnMatrix() = default;
  ColumnMatrix(std::size_t rows, std::vector<Column> columns)
      : rows_(rows), columns_(std::move(columns)) {}

  /// Rows are the union of monomials of the inputs, in descending grlex order.
  static ColumnMatrix from_polynomials(std::span<const Polynomial> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_[c]; }

  QMatrix to_dense() const;
  /// A * v.
  Vector apply(std::span<const Scalar> v) const;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

}  // namespace ratdyn
