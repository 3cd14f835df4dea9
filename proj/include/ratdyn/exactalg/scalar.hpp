#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace ratdyn {

/// Element of the base field Q. mpq_class keeps values canonical
/// (reduced, positive denominator, zero as 0/1) after every arithmetic op.
using Scalar = mpq_class;
using Integer = mpz_class;

std::string to_string(const Scalar& s);

/// Parses "n" or "n/d" in base 10.
Scalar scalar_from_string(const std::string& text);

inline bool is_integer(const Scalar& s) { return s.get_den() == 1; }

/// Deterministic generator shared by every randomized routine. Draws are
/// made by modular reduction of raw 64-bit output so the sequence does not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Random integer from a pool of 10^6 + 1 values centred on zero.
  Scalar pool_value();

  /// Small nonzero rational with numerator and denominator bounded by `bound`.
  Scalar small_rational(std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace ratdyn
