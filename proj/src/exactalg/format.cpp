#include "ratdyn/exactalg/format.hpp"

#include <sstream>

#include "ratdyn/error.hpp"

namespace ratdyn {

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

namespace {

void check_names(std::size_t nvars, std::span<const std::string> names) {
  if (names.size() != nvars) throw Error(ErrorCode::structural, "variable name list has wrong length");
}

// Writes the monomial as "x^2*y"; returns false for the unit monomial.
bool write_monomial(std::ostream& os, std::span<const Exponent> e, std::span<const std::string> names) {
  bool first = true;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!first) os << '*';
    os << names[v];
    if (e[v] > 1) os << '^' << e[v];
    first = false;
  }
  return !first;
}

bool single_power(const Polynomial& p) {
  if (!p.is_monomial() || p.coeff(0) != 1) return false;
  int used = 0;
  for (auto e : p.exponents(0)) used += e != 0 ? 1 : 0;
  return used == 1;
}

}  // namespace

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  check_names(p.nvars(), names);
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < p.size(); ++t) {
    const Scalar& c = p.coeff(t);
    const bool negative = sgn(c) < 0;
    if (t == 0) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    Scalar mag = abs(c);
    auto e = p.exponents(t);
    bool unit = true;
    for (auto x : e) unit = unit && x == 0;
    if (unit) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      write_monomial(os, e, names);
    }
  }
  return os.str();
}

std::string to_string(const RationalFunction& f, std::span<const std::string> names) {
  if (f.is_polynomial()) return to_string(f.num(), names);
  std::string top = to_string(f.num(), names);
  if (f.num().size() > 1) top = "(" + top + ")";
  std::string bottom = to_string(f.den(), names);
  if (!single_power(f.den())) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

}  // namespace ratdyn
