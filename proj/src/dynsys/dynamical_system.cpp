#include "ratdyn/dynsys/dynamical_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ratdyn/cli/parser.hpp"
#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/jacobian.hpp"
#include "ratdyn/exactalg/linalg.hpp"

namespace ratdyn {

DynamicalSystem::DynamicalSystem(std::vector<std::string> variables, std::vector<RationalFunction> coords,
                                 std::string name)
    : name_(std::move(name)), variables_(std::move(variables)), coords_(std::move(coords)) {
  if (coords_.size() != variables_.size()) {
    throw Error(ErrorCode::structural, "a self-map of affine n-space needs exactly one coordinate per variable (" +
                                           std::to_string(variables_.size()) + " variables, " +
                                           std::to_string(coords_.size()) + " coordinates)");
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v)) throw Error(ErrorCode::structural, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorCode::structural, "duplicate variable name '" + v + "'");
  }
  for (const auto& c : coords_) {
    if (c.nvars() != variables_.size()) {
      throw Error(ErrorCode::structural, "coordinate is not over the declared variables");
    }
  }
}

DynamicalSystem DynamicalSystem::identity(std::vector<std::string> variables, std::string name) {
  const std::size_t n = variables.size();
  std::vector<RationalFunction> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coords.push_back(RationalFunction::variable(n, i));
  return DynamicalSystem(std::move(variables), std::move(coords), std::move(name));
}

DynamicalSystem DynamicalSystem::renamed(std::string name) const {
  DynamicalSystem copy(*this);
  copy.name_ = std::move(name);
  return copy;
}

std::string_view to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::dominant: return "dominant";
    case Dominance::not_dominant: return "not-dominant";
    case Dominance::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Dominance validate_dominant(const DynamicalSystem& sys, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::precondition, "validate_dominant needs at least one trial");
  const std::size_t n = sys.dimension();
  if (n == 0) return Dominance::dominant;
  // Randomized pre-check: a nonzero Jacobian determinant at one point
  // certifies dominance.
  std::vector<std::vector<RationalFunction>> jac(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(sys.coord(i).derivative(j));
  }
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<Scalar> point(n);
    for (auto& x : point) x = rng.pool_value();
    QMatrix m(n, n);
    bool defined = true;
    for (std::size_t i = 0; i < n && defined; ++i) {
      for (std::size_t j = 0; j < n && defined; ++j) {
        auto v = jac[i][j].evaluate(point);
        if (!v) {
          defined = false;
        } else {
          m(i, j) = *v;
        }
      }
    }
    if (defined && rank(std::move(m)) == n) return Dominance::dominant;
  }
  return jacobian_rank_exact(sys.coords()) == n ? Dominance::dominant : Dominance::not_dominant;
}

DynamicalSystem compose(const DynamicalSystem& outer, const DynamicalSystem& inner) {
  if (outer.dimension() != inner.dimension()) {
    throw Error(ErrorCode::structural, "composition of maps on spaces of different dimension");
  }
  std::vector<RationalFunction> coords;
  coords.reserve(outer.dimension());
  for (const auto& c : outer.coords()) coords.push_back(substitute(c, inner.coords()));
  return DynamicalSystem(inner.variables(), std::move(coords), outer.name());
}

DynamicalSystem iterate(const DynamicalSystem& sys, unsigned m) {
  DynamicalSystem result = DynamicalSystem::identity(sys.variables(), sys.name());
  DynamicalSystem base = sys;
  bool first = true;
  while (m > 0) {
    if (m & 1u) {
      result = first ? base : compose(base, result);
      first = false;
    }
    m >>= 1;
    if (m > 0) base = compose(base, base);
  }
  return result;
}

IterateCache::IterateCache(DynamicalSystem base) : base_(std::move(base)) {}

DynamicalSystem IterateCache::get(unsigned m) {
  std::lock_guard<std::mutex> lock(mutex_);
  return compute(m);
}

DynamicalSystem IterateCache::compute(unsigned m) {
  if (auto it = cache_.find(m); it != cache_.end()) return it->second;
  DynamicalSystem value = [&] {
    if (m == 0) return DynamicalSystem::identity(base_.variables(), base_.name());
    if (m == 1) return base_;
    if (auto prev = cache_.find(m - 1); prev != cache_.end()) return compose(base_, prev->second);
    // Binary powering through cached powers of two.
    unsigned top = 1;
    while (top * 2 <= m) top *= 2;
    if (top == m) {
      DynamicalSystem half = compute(m / 2);
      return compose(half, half);
    }
    DynamicalSystem high = compute(top);
    DynamicalSystem low = compute(m - top);
    return compose(high, low);
  }();
  return cache_.emplace(m, std::move(value)).first->second;
}

DynamicalSystem product(const DynamicalSystem& a, const DynamicalSystem& b) {
  std::vector<std::string> names = a.variables();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& v : b.variables()) {
    std::string candidate = v;
    for (int k = 2; used.count(candidate) != 0; ++k) candidate = v + "_" + std::to_string(k);
    used.insert(candidate);
    names.push_back(candidate);
  }
  const std::size_t total = names.size();
  std::vector<RationalFunction> coords;
  coords.reserve(total);
  for (const auto& c : a.coords()) coords.push_back(embed_factor(c, 0, total));
  for (const auto& c : b.coords()) coords.push_back(embed_factor(c, a.dimension(), total));
  std::string name = a.name().empty() && b.name().empty() ? std::string() : a.name() + " x " + b.name();
  return DynamicalSystem(std::move(names), std::move(coords), std::move(name));
}

std::vector<std::string> copy_names(const std::vector<std::string>& names, unsigned copies, unsigned copy) {
  // Plain concatenation unless that produces a collision across copies.
  std::set<std::string> all;
  bool clash = false;
  for (unsigned c = 1; c <= copies && !clash; ++c) {
    for (const auto& v : names) clash = clash || !all.insert(v + std::to_string(c)).second;
  }
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& v : names) out.push_back(clash ? v + "_" + std::to_string(copy) : v + std::to_string(copy));
  return out;
}

DynamicalSystem diagonal_power(const DynamicalSystem& sys, unsigned m) {
  if (m < 1) throw Error(ErrorCode::precondition, "diagonal_power needs m >= 1");
  const std::size_t n = sys.dimension();
  const std::size_t total = n * m;
  std::vector<std::string> names;
  std::vector<RationalFunction> coords;
  names.reserve(total);
  coords.reserve(total);
  for (unsigned c = 1; c <= m; ++c) {
    for (auto& v : copy_names(sys.variables(), m, c)) names.push_back(std::move(v));
    for (const auto& f : sys.coords()) coords.push_back(embed_factor(f, (c - 1) * n, total));
  }
  return DynamicalSystem(std::move(names), std::move(coords),
                         sys.name().empty() ? std::string() : sys.name() + "^" + std::to_string(m));
}

RationalFunction embed_factor(const RationalFunction& f, std::size_t offset, std::size_t total) {
  std::vector<std::size_t> index(f.nvars());
  std::iota(index.begin(), index.end(), offset);
  return f.remap(total, index);
}

RationalFunction pullback(const DynamicalSystem& sys, const RationalFunction& f) {
  if (f.nvars() != sys.dimension()) {
    throw Error(ErrorCode::structural, "function is not over the system's variables");
  }
  return substitute(f, sys.coords());
}

bool is_invariant(const DynamicalSystem& sys, const RationalFunction& f) {
  if (f.nvars() != sys.dimension()) {
    throw Error(ErrorCode::structural, "function is not over the system's variables");
  }
  auto [num, den] = substitute_unreduced(f, sys.coords());
  return same_function(num, den, f.num(), f.den());
}

std::vector<SymmetrizedFunction> symmetrize_iterate_invariant(const DynamicalSystem& sys,
                                                              const RationalFunction& f, unsigned m) {
  if (m < 1) throw Error(ErrorCode::precondition, "symmetrization needs m >= 1");
  if (!is_invariant(iterate(sys, m), f)) {
    throw Error(ErrorCode::precondition, "function is not invariant under the m-th iterate");
  }
  const std::size_t n = sys.dimension();
  // Coefficients of prod (X - f_j) up to sign: e[k] is the k-th elementary
  // symmetric function of the orbit seen so far.
  std::vector<RationalFunction> e{RationalFunction::constant(n, 1)};
  RationalFunction current = f;
  for (unsigned j = 0; j < m; ++j) {
    e.push_back(RationalFunction(n));
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] = e[k] + current * e[k - 1];
    if (j + 1 < m) current = pullback(sys, current);
  }
  std::vector<SymmetrizedFunction> out;
  out.reserve(m);
  for (unsigned k = 1; k <= m; ++k) out.push_back({e[k], e[k].is_constant()});
  return out;
}

}  // namespace ratdyn
