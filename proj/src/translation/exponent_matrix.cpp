#include "ratdyn/translation/exponent_matrix.hpp"

#include <algorithm>

#include "ratdyn/error.hpp"

namespace ratdyn {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_integers(const std::vector<std::vector<long>>& rows) {
  IntMatrix out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool is_identity(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[i][j] != (i == j ? 1 : 0)) return false;
    }
  return true;
}

void enumerate(std::vector<Exponent>& u, std::size_t pos, unsigned remaining, std::vector<Monomial>& out) {
  if (pos == u.size()) {
    out.emplace_back(u);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    u[pos] = e;
    enumerate(u, pos + 1, remaining - e, out);
  }
  u[pos] = 0;
}

// Exponent vector of a monomial with coefficient 1 over its numerator and
// denominator, if p is one.
bool unit_monomial(const Polynomial& p, std::vector<long>& exps, long sign) {
  if (!p.is_monomial() || p.leading_coeff() != 1) return false;
  auto e = p.exponents(0);
  for (std::size_t v = 0; v < e.size(); ++v) exps[v] += sign * static_cast<long>(e[v]);
  return true;
}

}  // namespace

ExponentMatrix::ExponentMatrix(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw Error(ErrorCode::structural, "exponent matrix must be square");
  }
}

std::optional<ExponentMatrix> ExponentMatrix::from_system(const DynamicalSystem& sys) {
  const std::size_t n = sys.dimension();
  std::vector<std::vector<long>> rows;
  for (const auto& c : sys.coords()) {
    std::vector<long> exps(n, 0);
    if (!unit_monomial(c.num(), exps, 1) || !unit_monomial(c.den(), exps, -1)) return std::nullopt;
    rows.push_back(std::move(exps));
  }
  return ExponentMatrix(std::move(rows));
}

Integer ExponentMatrix::determinant() const {
  // Bareiss elimination over Z.
  IntMatrix m = to_integers(rows_);
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<unsigned> ExponentMatrix::multiplicative_order(unsigned max_order) const {
  const IntMatrix a = to_integers(rows_);
  IntMatrix power = a;
  for (unsigned k = 1; k <= max_order; ++k) {
    if (is_identity(power)) return k;
    power = multiply(power, a);
  }
  return std::nullopt;
}

DynamicalSystem ExponentMatrix::to_system(const std::vector<std::string>& variables) const {
  const std::size_t n = size();
  if (variables.size() != n) throw Error(ErrorCode::structural, "one variable name per row required");
  std::vector<RationalFunction> coords;
  for (const auto& r : rows_) {
    Monomial num(n), den(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] >= 0) num[j] = static_cast<Exponent>(r[j]);
      else den[j] = static_cast<Exponent>(-r[j]);
    }
    coords.push_back(ratfunc_normalize(Polynomial::term(num, 1), Polynomial::term(den, 1)));
  }
  return DynamicalSystem(variables, std::move(coords));
}

std::vector<Monomial> monomial_invariant_lattice(const ExponentMatrix& a, unsigned d) {
  if (a.determinant() == 0) throw Error(ErrorCode::precondition, "exponent matrix is singular");
  const std::size_t n = a.size();
  std::vector<Monomial> points;
  std::vector<Exponent> u(n, 0);
  enumerate(u, 0, d, points);
  std::vector<Monomial> out;
  for (const auto& p : points) {
    bool fixed = true;
    for (std::size_t j = 0; j < n && fixed; ++j) {
      long image = 0;
      for (std::size_t i = 0; i < n; ++i) image += a(i, j) * static_cast<long>(p[i]);
      fixed = image == static_cast<long>(p[j]);
    }
    if (fixed) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace ratdyn
