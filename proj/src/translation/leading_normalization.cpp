#include "ratdyn/translation/leading_normalization.hpp"

#include <algorithm>
#include <map>

#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/format.hpp"
#include "ratdyn/exactalg/gcd.hpp"

namespace ratdyn {

FieldPolynomial trimmed(FieldPolynomial p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

long degree(const FieldPolynomial& p) noexcept { return static_cast<long>(p.size()) - 1; }

FieldPolynomial combine(std::span<const Scalar> c, std::span<const FieldPolynomial> ps, std::size_t r) {
  FieldPolynomial out;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    if (out.size() < ps[j].size()) out.resize(ps[j].size(), RationalFunction(r));
    for (std::size_t k = 0; k < ps[j].size(); ++k) out[k] = out[k] + ps[j][k] * c[j];
  }
  return trimmed(std::move(out));
}

std::string to_string(const FieldPolynomial& p, const std::vector<std::string>& field_vars,
                      const std::string& t) {
  if (p.empty()) return "0";
  std::string out;
  for (long k = degree(p); k >= 0; --k) {
    const RationalFunction& c = p[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string power = k == 0 ? "" : (k == 1 ? t : t + "^" + std::to_string(k));
    std::string coeff = to_string(c, field_vars);
    bool negative = false;
    if (c.is_polynomial() && c.num().is_monomial() && c.num().leading_coeff() < 0) {
      negative = true;
      coeff = to_string(-c, field_vars);
    }
    std::string term;
    if (power.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = power;
    } else if (c.is_polynomial() && c.num().is_monomial()) {
      term = coeff + "*" + power;
    } else {
      term = "(" + coeff + ")*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

namespace {

// Numerators over a common denominator; Q-linear relations are unchanged.
std::vector<Polynomial> cleared(std::span<const RationalFunction> values) {
  if (values.empty()) return {};
  const std::size_t r = values.front().nvars();
  Polynomial d = Polynomial::constant(r, 1);
  for (const auto& v : values) {
    if (v.den().is_constant()) continue;
    d = exact_divide(d * v.den(), poly_gcd(d, v.den()));
  }
  std::vector<Polynomial> out;
  for (const auto& v : values) out.push_back(v.num() * exact_divide(d, v.den()));
  return out;
}

std::map<long, std::vector<std::size_t>> blocks(std::span<const FieldPolynomial> ps) {
  std::map<long, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < ps.size(); ++i) out[degree(ps[i])].push_back(i);
  return out;
}

std::vector<RationalFunction> leading(std::span<const FieldPolynomial> ps, const std::vector<std::size_t>& idx) {
  std::vector<RationalFunction> out;
  for (auto i : idx) out.push_back(ps[i].back());
  return out;
}

}  // namespace

std::size_t rational_rank(std::span<const RationalFunction> values) {
  if (values.empty()) return 0;
  const auto nums = cleared(values);
  return values.size() - nullspace_exact(ColumnMatrix::from_polynomials(nums).to_dense()).size();
}

bool satisfies_star(std::span<const FieldPolynomial> ps) {
  for (const auto& [deg, idx] : blocks(ps)) {
    if (deg < 0) return false;
    const auto lead = leading(ps, idx);
    if (rational_rank(lead) != lead.size()) return false;
  }
  return true;
}

LeadingNormalization normalize_leading_sequence(std::span<const FieldPolynomial> qs, std::size_t r) {
  const std::size_t s = qs.size();
  LeadingNormalization out{std::vector<FieldPolynomial>(qs.begin(), qs.end()), QMatrix::identity(s),
                           QMatrix::identity(s)};
  for (auto& p : out.polys) {
    p = trimmed(std::move(p));
    if (p.empty()) throw Error(ErrorCode::precondition, "zero polynomial in a linearly independent family");
  }
  while (true) {
    bool replaced = false;
    const auto bl = blocks(out.polys);
    for (auto it = bl.rbegin(); it != bl.rend() && !replaced; ++it) {
      const auto& idx = it->second;
      if (idx.size() < 2) continue;
      const auto lead = leading(out.polys, idx);
      const auto relations = nullspace_exact(ColumnMatrix::from_polynomials(cleared(lead)).to_dense());
      if (relations.empty()) continue;
      // The relation of the largest free column is 1 there and involves
      // only smaller block positions.
      const Vector& rel = relations.back();
      std::size_t f = 0;
      for (std::size_t j = 0; j < rel.size(); ++j) {
        if (sgn(rel[j]) != 0) f = j;
      }
      Vector c(s, 0);
      for (std::size_t j = 0; j < idx.size(); ++j) c[idx[j]] = rel[j];
      FieldPolynomial h = combine(c, out.polys, r);
      if (h.empty()) throw Error(ErrorCode::precondition, "inputs are linearly dependent over Q");
      const std::size_t target = idx[f];
      out.polys[target] = std::move(h);
      // Row target of the transition becomes sum_j c_j row_j.
      std::vector<Scalar> row(s, 0);
      for (std::size_t j = 0; j < s; ++j) {
        if (sgn(c[j]) == 0) continue;
        for (std::size_t k = 0; k < s; ++k) row[k] += c[j] * out.transition(j, k);
      }
      for (std::size_t k = 0; k < s; ++k) out.transition(target, k) = row[k];
      // Old member = new member - sum_{j != target} c_j p_j.
      for (std::size_t j = 0; j < s; ++j) {
        if (j == target || sgn(c[j]) == 0) continue;
        for (std::size_t i = 0; i < s; ++i) out.inverse_transition(i, j) -= out.inverse_transition(i, target) * c[j];
      }
      ++out.steps;
      replaced = true;
    }
    if (!replaced) break;
  }
  return out;
}

}  // namespace ratdyn
