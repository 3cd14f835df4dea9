#include "ratdyn/exactalg/rational_function.hpp"

#include <algorithm>

#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/gcd.hpp"

namespace ratdyn {

namespace {

Polynomial one(std::size_t n) { return Polynomial::constant(n, 1); }

}  // namespace

RationalFunction ratfunc_normalize(Polynomial num, Polynomial den) {
  if (num.nvars() != den.nvars()) {
    throw Error(ErrorCode::structural, "numerator and denominator over different variable lists");
  }
  if (den.is_zero()) throw Error(ErrorCode::division_by_zero, "rational function with zero denominator");
  const std::size_t n = num.nvars();
  if (num.is_zero()) return RationalFunction(Polynomial(n), one(n), 0);
  if (!den.is_constant()) {
    Polynomial g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = exact_divide(num, g);
      den = exact_divide(den, g);
    }
  }
  const Scalar inv = 1 / den.leading_coeff();
  if (inv != 1) {
    num = num * inv;
    den = den * inv;
  }
  return RationalFunction(std::move(num), std::move(den), 0);
}

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den) {
  const Scalar inv = 1 / den.leading_coeff();
  if (inv != 1) {
    num = num * inv;
    den = den * inv;
  }
  return RationalFunction(std::move(num), std::move(den), 0);
}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(one(p.nvars())) {}

RationalFunction RationalFunction::constant(std::size_t nvars, const Scalar& c) {
  return RationalFunction(Polynomial::constant(nvars, c));
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t index) {
  return RationalFunction(Polynomial::variable(nvars, index));
}

Scalar RationalFunction::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::precondition, "rational function is not constant");
  return num_.constant_term() / den_.constant_term();
}

long RationalFunction::degree() const noexcept {
  return std::max(num_.total_degree(), den_.total_degree());
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (nvars() != o.nvars()) throw Error(ErrorCode::structural, "sum over different variable lists");
  if (den_.is_constant() && o.den_.is_constant()) return RationalFunction(num_ + o.num_, den_, 0);
  if (den_ == o.den_) return ratfunc_normalize(num_ + o.num_, den_);
  Polynomial g = poly_gcd(den_, o.den_);
  if (g.is_constant()) {
    // Coprime denominators: the sum is already reduced.
    return from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Polynomial d1 = exact_divide(den_, g);
  Polynomial d2 = exact_divide(o.den_, g);
  Polynomial t = num_ * d2 + o.num_ * d1;
  if (t.is_zero()) return RationalFunction(nvars());
  Polynomial h = poly_gcd(t, g);
  if (!h.is_constant()) {
    t = exact_divide(t, h);
    return from_coprime(std::move(t), d1 * exact_divide(o.den_, h));
  }
  return from_coprime(std::move(t), d1 * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (nvars() != o.nvars()) throw Error(ErrorCode::structural, "product over different variable lists");
  if (is_zero() || o.is_zero()) return RationalFunction(nvars());
  if (den_.is_constant() && o.den_.is_constant()) return RationalFunction(num_ * o.num_, den_, 0);
  Polynomial n1 = num_;
  Polynomial d2 = o.den_;
  Polynomial n2 = o.num_;
  Polynomial d1 = den_;
  Polynomial g1 = poly_gcd(n1, d2);
  if (!g1.is_constant()) {
    n1 = exact_divide(n1, g1);
    d2 = exact_divide(d2, g1);
  }
  Polynomial g2 = poly_gcd(n2, d1);
  if (!g2.is_constant()) {
    n2 = exact_divide(n2, g2);
    d1 = exact_divide(d1, g2);
  }
  return from_coprime(n1 * n2, d1 * d2);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "division by the zero function");
  const Scalar inv = 1 / o.num_.leading_coeff();
  RationalFunction reciprocal(o.den_ * inv, o.num_ * inv, 0);
  return *this * reciprocal;
}

RationalFunction RationalFunction::operator*(const Scalar& c) const {
  if (sgn(c) == 0) return RationalFunction(nvars());
  return RationalFunction(num_ * c, den_, 0);
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  // Powers of coprime polynomials stay coprime.
  return RationalFunction(num_.pow(exponent), den_.pow(exponent), 0);
}

std::optional<Scalar> RationalFunction::evaluate(std::span<const Scalar> point) const {
  Scalar d = den_.evaluate(point);
  if (sgn(d) == 0) return std::nullopt;
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.is_constant()) return RationalFunction(num_.derivative(var) * (1 / den_.leading_coeff()));
  Polynomial top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return ratfunc_normalize(std::move(top), den_ * den_);
}

RationalFunction RationalFunction::remap(std::size_t new_nvars,
                                         std::span<const std::size_t> index_map) const {
  // Renaming variables preserves coprimality; the leading coefficient of den
  // may move, so re-monic.
  Polynomial n = num_.remap(new_nvars, index_map);
  Polynomial d = den_.remap(new_nvars, index_map);
  const Scalar inv = 1 / d.leading_coeff();
  return RationalFunction(n * inv, d * inv, 0);
}

// ---------------------------------------------------------------------------
// Composition

namespace {

struct ImagePowers {
  std::vector<std::vector<Polynomial>> num;  // p_i^k
  std::vector<std::vector<Polynomial>> den;  // q_i^k
};

const Polynomial& power_of(std::vector<Polynomial>& cache, const Polynomial& base, std::size_t k) {
  while (cache.size() <= k) cache.push_back(cache.back() * base);
  return cache[k];
}

/// Numerator of P(p/q) after multiplying by prod q_i^{deg_i P}.
Polynomial cleared_image(const Polynomial& p, std::span<const RationalFunction> images,
                         ImagePowers& powers, std::size_t target) {
  const std::size_t n = p.nvars();
  std::vector<long> degs(n);
  for (std::size_t v = 0; v < n; ++v) degs[v] = std::max(p.degree_in(v), 0L);
  PolynomialBuilder acc(target);
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    Polynomial term = Polynomial::constant(target, p.coeff(t));
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] != 0) term = term * power_of(powers.num[v], images[v].num(), e[v]);
      const auto rest = static_cast<std::size_t>(degs[v]) - e[v];
      if (rest != 0 && !images[v].den().is_constant()) {
        term = term * power_of(powers.den[v], images[v].den(), rest);
      }
    }
    for (std::size_t k = 0; k < term.size(); ++k) acc.add(term.exponents(k), term.coeff(k));
  }
  return acc.build();
}

}  // namespace

std::pair<Polynomial, Polynomial> substitute_unreduced(const RationalFunction& f,
                                                       std::span<const RationalFunction> images) {
  const std::size_t n = f.nvars();
  if (images.size() != n) {
    throw Error(ErrorCode::structural, "substitution needs one image per variable");
  }
  const std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images) {
    if (im.nvars() != target) throw Error(ErrorCode::structural, "images over different variable lists");
  }
  ImagePowers powers;
  powers.num.resize(n);
  powers.den.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    powers.num[v].push_back(one(target));
    powers.den[v].push_back(one(target));
  }
  Polynomial top = cleared_image(f.num(), images, powers, target);
  Polynomial bottom = f.den().is_constant()
                          ? Polynomial::constant(target, f.den().leading_coeff())
                          : cleared_image(f.den(), images, powers, target);
  if (bottom.is_zero()) {
    throw Error(ErrorCode::indeterminacy, "denominator vanishes identically after substitution");
  }
  // Balance the q_i powers: top carries prod q^{deg num}, bottom prod q^{deg den}.
  for (std::size_t v = 0; v < n; ++v) {
    if (images[v].den().is_constant()) continue;
    const long dn = std::max(f.num().degree_in(v), 0L);
    const long dd = std::max(f.den().degree_in(v), 0L);
    if (dd > dn) {
      top = top * power_of(powers.den[v], images[v].den(), static_cast<std::size_t>(dd - dn));
    } else if (dn > dd) {
      bottom = bottom * power_of(powers.den[v], images[v].den(), static_cast<std::size_t>(dn - dd));
    }
  }
  return {std::move(top), std::move(bottom)};
}

RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> images) {
  auto [top, bottom] = substitute_unreduced(f, images);
  return ratfunc_normalize(std::move(top), std::move(bottom));
}

bool same_function(const Polynomial& num_a, const Polynomial& den_a, const Polynomial& num_b,
                   const Polynomial& den_b) {
  if (num_a.is_zero() || num_b.is_zero()) return num_a.is_zero() && num_b.is_zero();
  return num_a * den_b == num_b * den_a;
}

}  // namespace ratdyn
