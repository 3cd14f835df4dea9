#include "ratdyn/exactalg/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace ratdyn {

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_.at(index) = 1;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

int grlex_compare(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void enumerate_degree(std::size_t nvars, std::uint64_t degree, std::size_t var,
                      std::vector<Exponent>& current, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    current[var] = static_cast<Exponent>(degree);
    out.emplace_back(current);
    return;
  }
  // Ascending lex: small exponents of the most significant variable first.
  for (std::uint64_t e = 0; e <= degree; ++e) {
    current[var] = static_cast<Exponent>(e);
    enumerate_degree(nvars, degree - e, var + 1, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint64_t max_degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> current(nvars, 0);
  for (std::uint64_t d = 0; d <= max_degree; ++d) enumerate_degree(nvars, d, 0, current, out);
  return out;
}

}  // namespace ratdyn
