#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ratdyn/exactalg/linalg.hpp"

namespace ratdyn {

enum class NullspaceRoute { automatic, exact, multimodular };

struct NullspaceOptions {
  NullspaceRoute route = NullspaceRoute::automatic;
  int jobs = 1;
};

/// Canonical nullspace basis over Q (see nullspace_exact). The automatic
/// route uses Gauss-Jordan over Q for small systems and otherwise CRT over
/// word-size primes with rational reconstruction; reconstructed vectors are
/// verified exactly before being returned, so both routes agree.
std::vector<Vector> nullspace(const ColumnMatrix& m, const NullspaceOptions& options = {});

/// Nullity over Z/p for the first usable prime: an upper bound for the
/// nullity over Q.
std::size_t nullity_upper_bound(const ColumnMatrix& m, int jobs = 1);

}  // namespace ratdyn
