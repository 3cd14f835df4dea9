#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdyn/dynsys/dynamical_system.hpp"
#include "ratdyn/exactalg/monomial.hpp"

namespace ratdyn {

/// Square integer matrix whose row i is the exponent vector of coordinate i
/// of the monomial map x_i -> prod_j x_j^A(i,j).
class ExponentMatrix {
 public:
  /// Throws Error(structural) unless the rows form a square matrix.
  explicit ExponentMatrix(std::vector<std::vector<long>> rows);

  /// Exponent matrix of a system whose coordinates are all monomials (negative
  /// exponents allowed) with coefficient 1; nothing otherwise.
  static std::optional<ExponentMatrix> from_system(const DynamicalSystem& sys);

  std::size_t size() const noexcept { return rows_.size(); }
  long operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<long>>& rows() const noexcept { return rows_; }

  Integer determinant() const;
  /// Smallest k in 1..max_order with A^k = I.
  std::optional<unsigned> multiplicative_order(unsigned max_order = 60) const;
  /// The monomial map itself over the given variable names.
  DynamicalSystem to_system(const std::vector<std::string>& variables) const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  std::vector<std::vector<long>> rows_;
};

/// All u >= 0 with |u| <= d and A^T u = u, by enumerating the simplex,
/// ascending in graded lexicographic order. Throws Error(precondition) when
/// det A = 0.
std::vector<Monomial> monomial_invariant_lattice(const ExponentMatrix& a, unsigned d);

}  // namespace ratdyn
