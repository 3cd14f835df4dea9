#include "ratdyn/exactalg/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "ratdyn/error.hpp"

namespace ratdyn {

namespace {

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::structural, "polynomials over different variable lists");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PolynomialBuilder

void PolynomialBuilder::reserve(std::size_t terms) {
  exps_.reserve(terms * nvars_);
  coeffs_.reserve(terms);
}

void PolynomialBuilder::add(std::span<const Exponent> m, const Scalar& c) {
  if (sgn(c) == 0) return;
  exps_.insert(exps_.end(), m.begin(), m.end());
  coeffs_.push_back(c);
}

void PolynomialBuilder::add(std::span<const Exponent> m, Scalar&& c) {
  if (sgn(c) == 0) return;
  exps_.insert(exps_.end(), m.begin(), m.end());
  coeffs_.push_back(std::move(c));
}

void PolynomialBuilder::add_product(std::span<const Exponent> a, std::span<const Exponent> b,
                                    Scalar&& c) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < nvars_; ++i) exps_.push_back(a[i] + b[i]);
  coeffs_.push_back(std::move(c));
}

Polynomial PolynomialBuilder::build() {
  const std::size_t n = coeffs_.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t w = nvars_;
  auto key = [&](std::size_t i) { return std::span<const Exponent>(exps_.data() + i * w, w); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return grlex_compare(key(a), key(b)) > 0;
  });

  Polynomial out(nvars_);
  out.exps_.reserve(n * w);
  out.coeffs_.reserve(n);
  std::size_t i = 0;
  while (i < n) {
    Scalar sum = std::move(coeffs_[order[i]]);
    std::size_t j = i + 1;
    while (j < n && grlex_compare(key(order[i]), key(order[j])) == 0) {
      sum += coeffs_[order[j]];
      ++j;
    }
    if (sgn(sum) != 0) {
      auto k = key(order[i]);
      out.exps_.insert(out.exps_.end(), k.begin(), k.end());
      out.coeffs_.push_back(std::move(sum));
    }
    i = j;
  }
  exps_.clear();
  coeffs_.clear();
  return out;
}

Polynomial PolynomialBuilder::build_presorted() {
  Polynomial out(nvars_);
  out.exps_ = std::move(exps_);
  out.coeffs_ = std::move(coeffs_);
  exps_.clear();
  coeffs_.clear();
  return out;
}

// ---------------------------------------------------------------------------
// Construction

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) {
    p.exps_.assign(nvars, 0);
    p.coeffs_.push_back(c);
  }
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return term(Monomial::variable(nvars, index), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
  Polynomial p(m.nvars());
  if (sgn(c) != 0) {
    auto e = m.exponents();
    p.exps_.assign(e.begin(), e.end());
    p.coeffs_.push_back(c);
  }
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars,
                                  std::vector<std::pair<Monomial, Scalar>> terms) {
  PolynomialBuilder b(nvars);
  b.reserve(terms.size());
  for (auto& [m, c] : terms) {
    if (m.nvars() != nvars) throw Error(ErrorCode::structural, "monomial arity mismatch");
    b.add(m.exponents(), std::move(c));
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Queries

bool Polynomial::is_constant() const noexcept {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() > 1) return false;
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Scalar Polynomial::constant_term() const {
  if (coeffs_.empty()) return 0;
  // The constant term is the smallest in grlex, hence last.
  auto e = exponents(coeffs_.size() - 1);
  for (auto x : e) {
    if (x != 0) return 0;
  }
  return coeffs_.back();
}

Scalar Polynomial::coefficient_of(std::span<const Exponent> m) const {
  // Terms are sorted descending; binary search.
  std::size_t lo = 0;
  std::size_t hi = coeffs_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = grlex_compare(exponents(mid), m);
    if (c == 0) return coeffs_[mid];
    if (c > 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return 0;
}

long Polynomial::total_degree() const noexcept {
  if (coeffs_.empty()) return -1;
  auto e = exponents(0);
  return static_cast<long>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

long Polynomial::degree_in(std::size_t var) const noexcept {
  if (coeffs_.empty()) return -1;
  Exponent d = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) d = std::max(d, exps_[t * nvars_ + var]);
  return d;
}

bool Polynomial::uses_variable(std::size_t var) const noexcept { return degree_in(var) > 0; }

// ---------------------------------------------------------------------------
// Arithmetic

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

template <bool Subtract>
Polynomial merge(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b);
  const std::size_t n = a.nvars();
  PolynomialBuilder out(n);
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = grlex_compare(a.exponents(i), b.exponents(j));
    }
    if (c > 0) {
      out.add(a.exponents(i), a.coeff(i));
      ++i;
    } else if (c < 0) {
      if constexpr (Subtract) {
        out.add(b.exponents(j), Scalar(-b.coeff(j)));
      } else {
        out.add(b.exponents(j), b.coeff(j));
      }
      ++j;
    } else {
      Scalar s = Subtract ? Scalar(a.coeff(i) - b.coeff(j)) : Scalar(a.coeff(i) + b.coeff(j));
      out.add(a.exponents(i), std::move(s));
      ++i;
      ++j;
    }
  }
  return out.build_presorted();
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const { return merge<false>(*this, other); }
Polynomial Polynomial::operator-(const Polynomial& other) const { return merge<true>(*this, other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_arity(*this, other);
  if (is_zero() || other.is_zero()) return Polynomial(nvars_);
  if (other.size() == 1) return mul_monomial(other.exponents(0), other.coeff(0));
  if (size() == 1) return other.mul_monomial(exponents(0), coeff(0));
  PolynomialBuilder b(nvars_);
  b.reserve(size() * other.size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < other.size(); ++j) {
      b.add_product(exponents(i), other.exponents(j), Scalar(coeff(i) * other.coeff(j)));
    }
  }
  return b.build();
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (sgn(c) == 0) return Polynomial(nvars_);
  Polynomial r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::mul_monomial(std::span<const Exponent> m, const Scalar& c) const {
  if (sgn(c) == 0) return Polynomial(nvars_);
  Polynomial r(*this);
  for (std::size_t t = 0; t < r.coeffs_.size(); ++t) {
    for (std::size_t v = 0; v < nvars_; ++v) r.exps_[t * nvars_ + v] += m[v];
    r.coeffs_[t] *= c;
  }
  // Multiplying by a monomial preserves grlex order.
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::structural, "evaluation point has wrong arity");
  std::vector<std::vector<Scalar>> powers(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    const long d = degree_in(v);
    powers[v].reserve(static_cast<std::size_t>(std::max(d, 0L)) + 1);
    powers[v].emplace_back(1);
    for (long k = 1; k <= d; ++k) powers[v].emplace_back(powers[v].back() * point[v]);
  }
  Scalar sum = 0;
  Scalar t;
  for (std::size_t i = 0; i < size(); ++i) {
    t = coeffs_[i];
    auto e = exponents(i);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] != 0) t *= powers[v][e[v]];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  PolynomialBuilder b(nvars_);
  std::vector<Exponent> m(nvars_);
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = exponents(i);
    if (e[var] == 0) continue;
    std::copy(e.begin(), e.end(), m.begin());
    m[var] -= 1;
    b.add(m, Scalar(coeffs_[i] * e[var]));
  }
  return b.build();
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) {
    throw Error(ErrorCode::structural, "composition needs one image per variable");
  }
  const std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images) {
    if (im.nvars() != target) throw Error(ErrorCode::structural, "images over different variable lists");
  }
  if (is_zero()) return Polynomial(target);
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    const long d = degree_in(v);
    powers[v].push_back(constant(target, 1));
    for (long k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  PolynomialBuilder acc(target);
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = exponents(i);
    Polynomial t = constant(target, coeffs_[i]);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] != 0) t = t * powers[v][e[v]];
    }
    for (std::size_t k = 0; k < t.size(); ++k) acc.add(t.exponents(k), t.coeff(k));
  }
  return acc.build();
}

Polynomial Polynomial::remap(std::size_t new_nvars, std::span<const std::size_t> index_map) const {
  if (index_map.size() != nvars_) throw Error(ErrorCode::structural, "remap needs one index per variable");
  PolynomialBuilder b(new_nvars);
  b.reserve(size());
  std::vector<Exponent> m(new_nvars);
  for (std::size_t i = 0; i < size(); ++i) {
    std::fill(m.begin(), m.end(), 0);
    auto e = exponents(i);
    for (std::size_t v = 0; v < nvars_; ++v) m.at(index_map[v]) += e[v];
    b.add(m, coeffs_[i]);
  }
  return b.build();
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  const long d = degree_in(var);
  if (d < 0) return {};
  std::vector<PolynomialBuilder> parts(static_cast<std::size_t>(d) + 1, PolynomialBuilder(nvars_));
  std::vector<Exponent> m(nvars_);
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = exponents(i);
    std::copy(e.begin(), e.end(), m.begin());
    const Exponent k = m[var];
    m[var] = 0;
    parts[k].add(m, coeffs_[i]);
  }
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(p.build());
  return out;
}

Polynomial Polynomial::from_coefficients_in(std::size_t var, std::span<const Polynomial> coeffs) {
  if (coeffs.empty()) return Polynomial();
  const std::size_t n = coeffs[0].nvars();
  PolynomialBuilder b(n);
  std::vector<Exponent> m(n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (std::size_t i = 0; i < coeffs[k].size(); ++i) {
      auto e = coeffs[k].exponents(i);
      std::copy(e.begin(), e.end(), m.begin());
      m[var] += static_cast<Exponent>(k);
      b.add(m, coeffs[k].coeff(i));
    }
  }
  return b.build();
}

Polynomial Polynomial::primitive_integer() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : coeffs_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(coeffs_.front()) < 0) factor = -factor;
  return *this * factor;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Scalar inv = 1 / coeffs_.front();
  return *this * inv;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = grlex_compare(a.exponents(i), b.exponents(i));
    if (c != 0) return c < 0;
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// Division

bool try_divide(const Polynomial& dividend, const Polynomial& divisor, Polynomial& quotient) {
  require_same_arity(dividend, divisor);
  if (divisor.is_zero()) throw Error(ErrorCode::division_by_zero, "division by the zero polynomial");
  const std::size_t n = dividend.nvars();
  if (dividend.is_zero()) {
    quotient = Polynomial(n);
    return true;
  }
  if (divisor.is_monomial()) {
    auto lm = divisor.exponents(0);
    PolynomialBuilder q(n);
    std::vector<Exponent> m(n);
    const Scalar inv = 1 / divisor.coeff(0);
    for (std::size_t i = 0; i < dividend.size(); ++i) {
      auto e = dividend.exponents(i);
      for (std::size_t v = 0; v < n; ++v) {
        if (e[v] < lm[v]) return false;
        m[v] = e[v] - lm[v];
      }
      q.add(m, Scalar(dividend.coeff(i) * inv));
    }
    quotient = q.build();
    return true;
  }
  if (dividend.total_degree() < divisor.total_degree()) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (dividend.degree_in(v) < divisor.degree_in(v)) return false;
  }

  Polynomial remainder = dividend;
  PolynomialBuilder q(n);
  auto lead = divisor.exponents(0);
  const Scalar lead_inv = 1 / divisor.leading_coeff();
  std::vector<Exponent> m(n);
  while (!remainder.is_zero()) {
    auto e = remainder.exponents(0);
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] < lead[v]) return false;
      m[v] = e[v] - lead[v];
    }
    Scalar c = remainder.leading_coeff() * lead_inv;
    remainder = remainder - divisor.mul_monomial(m, c);
    q.add(m, std::move(c));
  }
  quotient = q.build();
  return true;
}

Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
  Polynomial q;
  if (!try_divide(dividend, divisor, q)) {
    throw Error(ErrorCode::precondition, "exact division: divisor does not divide dividend");
  }
  return q;
}

}  // namespace ratdyn
