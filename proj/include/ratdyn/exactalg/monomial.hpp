#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ratdyn {

using Exponent = std::uint32_t;

/// Exponent vector of a monomial; its length is the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept;
  bool is_one() const noexcept;

  /// True when every exponent of `other` is at most the matching exponent here.
  bool divisible_by(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisible_by(other).
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Graded lexicographic comparison; variable 0 is the most significant.
/// Returns <0, 0 or >0.
int grlex_compare(std::span<const Exponent> a, std::span<const Exponent> b) noexcept;

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grlex_compare(a.exponents(), b.exponents()) < 0;
  }
};

/// All monomials in `nvars` variables of total degree <= `max_degree`,
/// ascending in graded lexicographic order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint64_t max_degree);

}  // namespace ratdyn
