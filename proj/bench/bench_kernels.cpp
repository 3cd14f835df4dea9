// Serial vs OpenMP timings for the modular rref and the invariant search.
//
//   ratdyn_bench [--sizes 200,400,800] [--jobs N] [--reps R]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "ratdyn/cli/system_file.hpp"
#include "ratdyn/cli/regression.hpp"
#include "ratdyn/invsearch/invariant_search.hpp"
#include "ratdyn/parallel/modular.hpp"

using namespace ratdyn;
using Clock = std::chrono::steady_clock;

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

int main(int argc, char** argv) {
  CLI::App app{"Kernel benchmarks"};
  std::vector<std::size_t> sizes{200, 400, 800};
  int jobs = 0;
  int reps = 3;
  app.add_option("--sizes", sizes)->delimiter(',');
  app.add_option("--jobs", jobs, "0 = all cores");
  app.add_option("--reps", reps)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

  std::printf("rref mod p, threads=%d\n%8s %12s %12s %8s %s\n", threads, "n", "serial_ms", "omp_ms", "speedup", "same");
  const modular::Word p = modular::primes().front();
  std::mt19937_64 gen(7);
  for (std::size_t n : sizes) {
    modular::ModMatrix base(n, n + n / 2, p);
    for (auto& w : base.data) w = gen() % p;
    modular::ModMatrix a = base, b = base;
    std::vector<std::size_t> pa, pb;
    const double ts = best_ms(reps, [&] {
      a = base;
      pa = modular::rref_serial(a);
    });
    const double tp = best_ms(reps, [&] {
      b = base;
      pb = modular::rref_parallel(b, threads);
    });
    const bool same = pa == pb && a.data == b.data;
    std::printf("%8zu %12.2f %12.2f %8.2f %s\n", n, ts, tp, ts / tp, same ? "yes" : "NO");
  }

  std::printf("\ninvariant search (default budget)\n%-16s %12s %12s %8s %s\n", "system", "jobs=1_ms", "omp_ms", "speedup",
              "same");
  for (const char* name : {"monomial", "mobius", "henon", "shear"}) {
    const auto sys = to_dynamical_system(read_system_file(default_systems_dir() / (std::string(name) + ".system")));
    std::optional<InvariantReport> rs, rp;
    const double ts = best_ms(reps, [&] { rs.emplace(adim_lower_bound(sys, SearchBudget{}, SearchOptions{1, kDefaultSeed})); });
    const double tp =
        best_ms(reps, [&] { rp.emplace(adim_lower_bound(sys, SearchBudget{}, SearchOptions{threads, kDefaultSeed})); });
    const bool same = rs->invariants == rp->invariants && rs->independence_rank == rp->independence_rank;
    std::printf("%-16s %12.2f %12.2f %8.2f %s\n", name, ts, tp, ts / tp, same ? "yes" : "NO");
  }
  return 0;
}
