#include "ratdyn/cli/verify.hpp"

#include "ratdyn/error.hpp"

namespace ratdyn {

std::string_view to_string(VerifyMode m) noexcept {
  return m == VerifyMode::exact ? "exact" : "randomized";
}

std::string_view to_string(VerifyVerdict v) noexcept {
  switch (v) {
    case VerifyVerdict::invariant: return "invariant";
    case VerifyVerdict::not_invariant: return "not-invariant";
    case VerifyVerdict::undefined_at_samples: return "undefined-at-samples";
    case VerifyVerdict::not_refuted: return "not-refuted";
  }
  return "not-refuted";
}

VerifyMode verify_mode_from_string(std::string_view s) {
  if (s == "exact") return VerifyMode::exact;
  if (s == "randomized") return VerifyMode::randomized;
  throw Error(ErrorCode::usage, "unknown verification mode '" + std::string(s) + "'");
}

VerifyResult verify_invariant(const DynamicalSystem& sys, const RationalFunction& f, VerifyMode mode,
                              unsigned trials, std::uint64_t seed) {
  if (f.nvars() != sys.dimension()) throw Error(ErrorCode::structural, "function arity differs from the system");
  VerifyResult result;
  if (mode == VerifyMode::exact) {
    try {
      result.verdict = is_invariant(sys, f) ? VerifyVerdict::invariant : VerifyVerdict::not_invariant;
    } catch (const Error& e) {
      // f o phi is undefined, so it cannot equal f.
      if (e.code() != ErrorCode::indeterminacy) throw;
      result.verdict = VerifyVerdict::not_invariant;
    }
    return result;
  }
  if (trials == 0) throw Error(ErrorCode::precondition, "randomized verification needs at least one trial");
  Rng rng(seed);
  const std::size_t n = sys.dimension();
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Scalar> p(n), image(n);
    for (auto& x : p) x = rng.pool_value();
    bool defined = true;
    for (std::size_t i = 0; i < n && defined; ++i) {
      auto v = sys.coord(i).evaluate(p);
      if (v) image[i] = *v;
      else defined = false;
    }
    std::optional<Scalar> before, after;
    if (defined) before = f.evaluate(p);
    if (before) after = f.evaluate(image);
    if (!after) {
      ++result.skipped;
      continue;
    }
    ++result.evaluated;
    if (*before != *after) {
      result.verdict = VerifyVerdict::not_invariant;
      result.counterexample = std::move(p);
      return result;
    }
  }
  result.verdict = result.evaluated == 0 ? VerifyVerdict::undefined_at_samples : VerifyVerdict::not_refuted;
  return result;
}

}  // namespace ratdyn
