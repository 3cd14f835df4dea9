#include "ratdyn/parallel/nullspace.hpp"

#include <algorithm>

#include "ratdyn/error.hpp"
#include "ratdyn/parallel/modular.hpp"

namespace ratdyn {

namespace {

using modular::Word;

constexpr std::size_t kExactRouteCells = 6000;

std::optional<modular::ModMatrix> reduce_matrix(const ColumnMatrix& m, Word p) {
  modular::ModMatrix out(m.rows(), m.cols(), p);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) {
      auto x = modular::reduce(v, p);
      if (!x) return std::nullopt;
      out.at(r, c) = *x;
    }
  }
  return out;
}

struct ModularKernel {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;
  // residues[k][i]: entry of kernel vector k at pivot column pivots[i].
  std::vector<std::vector<Word>> residues;
};

ModularKernel modular_kernel(modular::ModMatrix& mm, int jobs) {
  ModularKernel k;
  k.pivots = jobs == 1 ? modular::rref_serial(mm) : modular::rref_parallel(mm, jobs);
  std::vector<bool> is_pivot(mm.cols, false);
  for (auto p : k.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < mm.cols; ++c) {
    if (!is_pivot[c]) k.free.push_back(c);
  }
  const Word p = mm.prime;
  for (auto f : k.free) {
    std::vector<Word> v(k.pivots.size());
    for (std::size_t i = 0; i < k.pivots.size(); ++i) v[i] = mm.at(i, f) == 0 ? 0 : p - mm.at(i, f);
    k.residues.push_back(std::move(v));
  }
  return k;
}

bool lexicographically_earlier(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vector> multimodular_nullspace(const ColumnMatrix& m, int jobs) {
  const std::size_t cols = m.cols();
  std::optional<ModularKernel> best;
  Integer modulus = 1;
  std::vector<std::vector<Integer>> crt;  // same shape as residues

  for (Word p : modular::primes()) {
    auto mm = reduce_matrix(m, p);
    if (!mm) continue;
    ModularKernel k = modular_kernel(*mm, jobs);
    bool reset = !best;
    if (best) {
      if (k.pivots.size() < best->pivots.size()) continue;
      if (k.pivots.size() > best->pivots.size() || lexicographically_earlier(k.pivots, best->pivots)) {
        reset = true;
      } else if (k.pivots != best->pivots) {
        continue;
      }
    }
    if (reset) {
      modulus = 1;
      crt.assign(k.residues.size(), std::vector<Integer>(k.pivots.size(), 0));
    }
    // Chinese remaindering of every pivot entry.
    const Word m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const Word m_inv = modular::inv_mod(m_mod_p, p);
    for (std::size_t v = 0; v < k.residues.size(); ++v) {
      for (std::size_t i = 0; i < k.pivots.size(); ++i) {
        Integer& acc = crt[v][i];
        const Word a = mpz_fdiv_ui(acc.get_mpz_t(), p);
        const Word delta = modular::mul_mod(modular::sub_mod(k.residues[v][i], a, p), m_inv, p);
        acc += modulus * static_cast<unsigned long>(delta);
      }
    }
    modulus *= static_cast<unsigned long>(p);
    best = std::move(k);

    // Try to lift.
    std::vector<Vector> lifted;
    bool ok = true;
    for (std::size_t v = 0; v < crt.size() && ok; ++v) {
      Vector vec(cols);
      vec[best->free[v]] = 1;
      for (std::size_t i = 0; i < best->pivots.size(); ++i) {
        auto q = modular::rational_reconstruct(crt[v][i], modulus);
        if (!q) {
          ok = false;
          break;
        }
        vec[best->pivots[i]] = std::move(*q);
      }
      if (ok) lifted.push_back(std::move(vec));
    }
    if (!ok) continue;
    bool verified = true;
    for (const auto& vec : lifted) {
      auto image = m.apply(vec);
      if (std::any_of(image.begin(), image.end(), [](const Scalar& x) { return sgn(x) != 0; })) {
        verified = false;
        break;
      }
    }
    if (!verified) continue;
    // Canonical exactly when every vector is supported on its free column
    // and earlier pivots.
    bool canonical = true;
    for (std::size_t v = 0; v < lifted.size() && canonical; ++v) {
      for (std::size_t i = 0; i < best->pivots.size(); ++i) {
        if (best->pivots[i] > best->free[v] && sgn(lifted[v][best->pivots[i]]) != 0) {
          canonical = false;
          break;
        }
      }
    }
    if (!canonical) return canonical_kernel_basis(std::move(lifted), cols);
    return lifted;
  }
  // Reconstruction did not converge within the prime table.
  return nullspace_exact(m.to_dense());
}

}  // namespace

std::vector<Vector> nullspace(const ColumnMatrix& m, const NullspaceOptions& options) {
  if (m.cols() == 0) return {};
  NullspaceRoute route = options.route;
  if (route == NullspaceRoute::automatic) {
    route = m.rows() * m.cols() <= kExactRouteCells ? NullspaceRoute::exact : NullspaceRoute::multimodular;
  }
  if (route == NullspaceRoute::exact) return nullspace_exact(m.to_dense());
  return multimodular_nullspace(m, options.jobs);
}

std::size_t nullity_upper_bound(const ColumnMatrix& m, int jobs) {
  for (Word p : modular::primes()) {
    auto mm = reduce_matrix(m, p);
    if (!mm) continue;
    auto pivots = jobs == 1 ? modular::rref_serial(*mm) : modular::rref_parallel(*mm, jobs);
    return m.cols() - pivots.size();
  }
  throw Error(ErrorCode::precondition, "no usable prime for modular rank");
}

}  // namespace ratdyn
