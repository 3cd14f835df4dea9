#include "ratdyn/exactalg/scalar.hpp"

#include "ratdyn/error.hpp"

namespace ratdyn {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::structural: return "structural";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::indeterminacy: return "indeterminacy";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::undeclared_identifier: return "undeclared_identifier";
    case ErrorCode::usage: return "usage";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

Scalar scalar_from_string(const std::string& text) {
  Scalar s;
  if (s.set_str(text, 10) != 0) {
    throw Error(ErrorCode::parse, "not a rational literal: " + text);
  }
  if (s.get_den() == 0) throw Error(ErrorCode::division_by_zero, "zero denominator in " + text);
  s.canonicalize();
  return s;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Scalar Rng::pool_value() { return Scalar(static_cast<long>(uniform(-500000, 500000))); }

Scalar Rng::small_rational(std::int64_t bound) {
  std::int64_t n = 0;
  while (n == 0) n = uniform(-bound, bound);
  const std::int64_t d = uniform(1, bound);
  Scalar q(static_cast<long>(n), static_cast<long>(d));
  q.canonicalize();
  return q;
}

}  // namespace ratdyn
