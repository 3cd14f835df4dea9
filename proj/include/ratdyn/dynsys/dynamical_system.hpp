#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ratdyn/exactalg/rational_function.hpp"

namespace ratdyn {

/// A rational self-map of affine n-space: one normalized coordinate function
/// per declared variable. Immutable after construction.
class DynamicalSystem {
 public:
  /// Throws Error(structural) unless there is exactly one coordinate per
  /// variable, every coordinate is over that variable list, and the names
  /// are distinct identifiers.
  DynamicalSystem(std::vector<std::string> variables, std::vector<RationalFunction> coords,
                  std::string name = {});

  static DynamicalSystem identity(std::vector<std::string> variables, std::string name = "identity");

  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<RationalFunction>& coords() const noexcept { return coords_; }
  const RationalFunction& coord(std::size_t i) const { return coords_.at(i); }

  DynamicalSystem renamed(std::string name) const;

  /// Same map, same variable names.
  friend bool operator==(const DynamicalSystem& a, const DynamicalSystem& b) {
    return a.variables_ == b.variables_ && a.coords_ == b.coords_;
  }

 private:
  std::string name_;
  std::vector<std::string> variables_;
  std::vector<RationalFunction> coords_;
};

enum class Dominance { dominant, not_dominant, inconclusive };

std::string_view to_string(Dominance d) noexcept;

/// Decides whether the Jacobian determinant vanishes identically. Up to
/// `trials` random points may certify dominance early; the exact rank
/// computation decides otherwise, so `inconclusive` is never returned.
Dominance validate_dominant(const DynamicalSystem& sys, int trials = 4,
                            std::uint64_t seed = kDefaultSeed);

/// outer o inner: coordinates of outer evaluated at the coordinates of inner.
/// Throws Error(indeterminacy) when a composed denominator vanishes.
DynamicalSystem compose(const DynamicalSystem& outer, const DynamicalSystem& inner);

/// phi^m with normalized coordinates; phi^0 is the identity.
DynamicalSystem iterate(const DynamicalSystem& sys, unsigned m);

/// Memoized iterates of one system. Thread-safe; entries are computed
/// from phi^(m-1) when present, otherwise by binary powering.
class IterateCache {
 public:
  explicit IterateCache(DynamicalSystem base);

  const DynamicalSystem& base() const noexcept { return base_; }
  DynamicalSystem get(unsigned m);

 private:
  DynamicalSystem compute(unsigned m);

  DynamicalSystem base_;
  std::mutex mutex_;
  std::map<unsigned, DynamicalSystem> cache_;
};

/// The product map acting coordinate-wise on the concatenated variables.
/// Names of b that clash with names of a receive a numeric suffix.
DynamicalSystem product(const DynamicalSystem& a, const DynamicalSystem& b);

/// m-fold product of sys with itself; variable v of copy c is named v<c>
/// (for example x1, x2), falling back to v_<c> if that would clash.
DynamicalSystem diagonal_power(const DynamicalSystem& sys, unsigned m);

/// Variable names used by diagonal_power for copy `copy` (1-based).
std::vector<std::string> copy_names(const std::vector<std::string>& names, unsigned copies, unsigned copy);

/// f o phi, normalized.
RationalFunction pullback(const DynamicalSystem& sys, const RationalFunction& f);

/// Exact test of f o phi == f by cross multiplication.
bool is_invariant(const DynamicalSystem& sys, const RationalFunction& f);

/// f viewed on a product: variables of f are moved to positions
/// offset, offset+1, ... of a `total`-variable space.
RationalFunction embed_factor(const RationalFunction& f, std::size_t offset, std::size_t total);

struct SymmetrizedFunction {
  RationalFunction function;
  bool constant = false;
};

/// Elementary symmetric functions e_1..e_m of the orbit
/// {f, phi* f, ..., (phi*)^(m-1) f} of a phi^m-invariant f. Each is
/// phi-invariant. Throws Error(precondition) if f is not phi^m-invariant.
std::vector<SymmetrizedFunction> symmetrize_iterate_invariant(const DynamicalSystem& sys,
                                                              const RationalFunction& f, unsigned m);

}  // namespace ratdyn
