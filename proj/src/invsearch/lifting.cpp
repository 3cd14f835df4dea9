#include "ratdyn/invsearch/lifting.hpp"

#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/gcd.hpp"

namespace ratdyn {

ClearedMap::ClearedMap(const DynamicalSystem& sys) {
  const std::size_t n = sys.dimension();
  m_ = Polynomial::constant(n, 1);
  for (const auto& c : sys.coords()) {
    if (c.den().is_constant()) continue;
    m_ = exact_divide(m_ * c.den(), poly_gcd(m_, c.den()));
  }
  m_ = m_.monic();
  for (const auto& c : sys.coords()) a_.push_back(c.num() * exact_divide(m_, c.den()));
  a_powers_.assign(n, {Polynomial::constant(n, 1)});
  m_powers_.push_back(Polynomial::constant(n, 1));
}

const Polynomial& ClearedMap::power(std::size_t var, unsigned k) const {
  auto& table = a_powers_[var];
  while (table.size() <= k) table.push_back(table.back() * a_[var]);
  return table[k];
}

Polynomial ClearedMap::denominator_power(unsigned k) const {
  while (m_powers_.size() <= k) m_powers_.push_back(m_powers_.back() * m_);
  return m_powers_[k];
}

Polynomial ClearedMap::lift(const Polynomial& f, unsigned e) const {
  if (f.total_degree() > static_cast<long>(e)) {
    throw Error(ErrorCode::precondition, "lift degree below the polynomial degree");
  }
  const std::size_t n = nvars();
  Polynomial out(n);
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto u = f.exponents(t);
    Polynomial term = denominator_power(e - static_cast<unsigned>(f.monomial(t).total_degree())) * f.coeff(t);
    for (std::size_t v = 0; v < n; ++v) {
      if (u[v] != 0) term = term * power(v, u[v]);
    }
    out += term;
  }
  return out;
}

std::vector<Polynomial> ClearedMap::lifted_monomials(unsigned e) const {
  std::vector<Polynomial> out;
  for (const auto& u : monomials_up_to(nvars(), e)) out.push_back(lift(Polynomial::term(u, 1), e));
  return out;
}

Polynomial from_coefficients(std::size_t nvars, unsigned degree, std::span<const Scalar> coeffs) {
  const auto monos = monomials_up_to(nvars, degree);
  if (monos.size() != coeffs.size()) throw Error(ErrorCode::structural, "coefficient count mismatch");
  PolynomialBuilder b(nvars);
  for (std::size_t i = 0; i < monos.size(); ++i) b.add(monos[i].exponents(), coeffs[i]);
  return b.build();
}

}  // namespace ratdyn
