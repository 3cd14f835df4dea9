#pragma once

#include <string>
#include <vector>

#include "ratdyn/cli/parser.hpp"
#include "ratdyn/exactalg/format.hpp"
#include "ratdyn/exactalg/polynomial.hpp"
#include "ratdyn/exactalg/rational_function.hpp"

namespace ratdyn::testing {

inline RationalFunction rf(const std::string& src, const std::vector<std::string>& vars) {
  return parse_expression(src, vars);
}

inline Polynomial poly(const std::string& src, const std::vector<std::string>& vars) {
  RationalFunction f = parse_expression(src, vars);
  if (!f.is_polynomial()) throw std::runtime_error("not a polynomial: " + src);
  return f.num() * (1 / f.den().leading_coeff());
}

inline std::string str(const RationalFunction& f, const std::vector<std::string>& vars) {
  return to_string(f, vars);
}

inline std::string str(const Polynomial& p, const std::vector<std::string>& vars) {
  return to_string(p, vars);
}

/// Random polynomial with `terms` terms of total degree <= max_degree and
/// small integer coefficients.
inline Polynomial random_polynomial(Rng& rng, std::size_t nvars, int max_degree, int terms,
                                    int coeff_bound = 5) {
  PolynomialBuilder b(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<Exponent> e(nvars, 0);
    int budget = static_cast<int>(rng.uniform(0, max_degree));
    for (int k = 0; k < budget; ++k) e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nvars) - 1))] += 1;
    b.add(e, Scalar(static_cast<long>(rng.uniform(-coeff_bound, coeff_bound))));
  }
  return b.build();
}

inline std::vector<Scalar> random_point(Rng& rng, std::size_t n) {
  std::vector<Scalar> p(n);
  for (auto& x : p) x = rng.pool_value();
  return p;
}

}  // namespace ratdyn::testing
