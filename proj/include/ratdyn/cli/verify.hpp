#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ratdyn/dynsys/dynamical_system.hpp"

namespace ratdyn {

enum class VerifyMode { exact, randomized };

/// not_refuted is the only positive outcome of randomized mode: sampling
/// can refute invariance but never establish it.
enum class VerifyVerdict { invariant, not_invariant, undefined_at_samples, not_refuted };

std::string_view to_string(VerifyMode m) noexcept;
std::string_view to_string(VerifyVerdict v) noexcept;
VerifyMode verify_mode_from_string(std::string_view s);

inline constexpr unsigned kDefaultTrials = 32;

struct VerifyResult {
  VerifyVerdict verdict = VerifyVerdict::not_refuted;
  /// Randomized mode: points where both sides were defined, and the rest.
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  /// Randomized mode: a point where f(phi(p)) != f(p).
  std::optional<std::vector<Scalar>> counterexample{};
};

/// Exact mode normalizes pullback(sys, f) - f. Randomized mode compares
/// f(phi(p)) and f(p) exactly at `trials` seeded points drawn from a pool of
/// 10^6 + 1 integers per coordinate, skipping points where a denominator
/// vanishes.
VerifyResult verify_invariant(const DynamicalSystem& sys, const RationalFunction& f, VerifyMode mode,
                              unsigned trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

}  // namespace ratdyn
