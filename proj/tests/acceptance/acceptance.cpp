// Acceptance checks; one PASS/FAIL line per criterion. Exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "helpers.hpp"
#include "json.hpp"
#include "ratdyn/cli/commands.hpp"
#include "ratdyn/cli/regression.hpp"
#include "ratdyn/cli/system_file.hpp"
#include "ratdyn/cli/verify.hpp"
#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/linalg.hpp"
#include "ratdyn/invsearch/corollary_b.hpp"
#include "ratdyn/invsearch/invariant_search.hpp"
#include "ratdyn/translation/classify.hpp"
#include "ratdyn/translation/exponent_matrix.hpp"
#include "ratdyn/translation/leading_normalization.hpp"

using namespace ratdyn;
using namespace ratdyn::testing;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> XY{"x", "y"};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

DynamicalSystem sys(const std::vector<std::string>& vars, const std::vector<std::string>& coords,
                    const std::string& name = {}) {
  std::vector<RationalFunction> cs;
  for (const auto& c : coords) cs.push_back(rf(c, vars));
  return DynamicalSystem(vars, cs, name);
}

bool exact(const DynamicalSystem& s, const RationalFunction& f) {
  return verify_invariant(s, f, VerifyMode::exact).verdict == VerifyVerdict::invariant;
}

struct Bundled {
  std::string file;
  DynamicalSystem system;
};

std::vector<Bundled> bundled_systems() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(default_systems_dir())) {
    const auto ext = e.path().extension();
    if (ext == ".system" || ext == ".json") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<Bundled> out;
  for (const auto& p : paths) out.push_back({p.filename().string(), to_dynamical_system(read_system_file(p))});
  return out;
}

// Square-comparison reports of the dominant bundled systems, shared by 8 and 9.
std::map<std::string, CorollaryBReport>& corollaries() {
  static std::map<std::string, CorollaryBReport> cache;
  if (cache.empty()) {
    for (const auto& b : bundled_systems()) {
      if (validate_dominant(b.system) == Dominance::dominant) {
        cache.emplace(b.file, corollary_b_check(b.system, SearchBudget{}));
      }
    }
  }
  return cache;
}

Outcome shift_regression() {
  Outcome o;
  const auto shift = sys(X, {"x + 1"});
  o.require(adim_lower_bound(shift, SearchBudget{}).independence_rank == 0, "base rank is not 0");
  const auto c = corollary_b_check(shift, SearchBudget{});
  o.require(c.new_invariant_found, "no new invariant on the square");
  o.require(c.witness.has_value(), "no witness");
  if (c.witness) {
    // w = a (x1 - x2) + b with a != 0.
    const std::vector<std::string> sq{"x1", "x2"};
    const auto& w = *c.witness;
    bool ok = w.is_polynomial() && w.num().total_degree() == 1;
    if (ok) {
      const Scalar origin[2] = {0, 0}, e1[2] = {1, 0}, e2[2] = {0, 1};
      const Scalar b = *w.evaluate(origin);
      const Scalar a1 = *w.evaluate(e1) - b, a2 = *w.evaluate(e2) - b;
      ok = sgn(a1) != 0 && a1 == -a2;
    }
    o.require(ok, "witness " + str(w, sq) + " is not a multiple of x1 - x2 plus a constant");
    o.require(exact(c.square.system, w), "witness fails exact verification");
  }
  return o;
}

bool is_ratio(const RationalFunction& f, const std::vector<std::string>& vars, const std::string& a, const std::string& b) {
  return f == rf(a + "/" + b, vars) || f == rf(b + "/" + a, vars);
}

Outcome scaling() {
  Outcome o;
  const auto dbl = sys(XY, {"2*x", "2*y"});
  const auto r = adim_lower_bound(dbl, SearchBudget{1, 1, 2, 3});
  o.require(r.independence_rank == 1, "rank of (2x, 2y) is not 1");
  o.require(r.invariants.size() == 1 && is_ratio(r.invariants[0], XY, "x", "y"), "generator is not x/y");
  for (const auto& f : r.invariants) o.require(exact(dbl, f), "generator fails exact verification");
  const auto c = corollary_b_check(sys(X, {"2*x"}), SearchBudget{});
  const std::vector<std::string> sq{"x1", "x2"};
  o.require(c.witness && is_ratio(*c.witness, sq, "x1", "x2"), "square of (2x) has no witness x1/x2");
  if (c.witness) o.require(exact(c.square.system, *c.witness), "witness fails exact verification");
  return o;
}

Outcome cross_ratio() {
  Outcome o;
  Rng rng(2024);
  const std::vector<std::string> v{"x1", "x2", "x3", "x4"};
  const auto cr = rf("((x1 - x3)*(x2 - x4))/((x1 - x4)*(x2 - x3))", v);
  int maps = 0;
  while (maps < 5) {
    const Scalar a = rng.uniform(-9, 9), b = rng.uniform(-9, 9), c = rng.uniform(-9, 9), d = rng.uniform(-9, 9);
    if (a * d - b * c == 0 || c == 0) continue;
    std::vector<std::string> coords;
    for (const auto& x : v) {
      coords.push_back("(" + a.get_str() + "*" + x + " + " + b.get_str() + ")/(" + c.get_str() + "*" + x + " + " +
                       d.get_str() + ")");
    }
    o.require(exact(sys(v, coords), cr), "cross ratio not invariant for map " + coords[0]);
    ++maps;
  }
  return o;
}

Outcome monomial_oracle() {
  Outcome o;
  Rng rng(404);
  int count = 0;
  while (count < 20) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 1));
    std::vector<std::vector<long>> rows(n, std::vector<long>(n));
    for (auto& r : rows) {
      for (auto& e : r) e = rng.uniform(0, 2);
    }
    const ExponentMatrix a(rows);
    if (a.determinant() == 0) continue;
    ++count;
    const std::vector<std::string> names =
        n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"};
    std::vector<Monomial> from_basis;
    for (const auto& p : polynomial_invariant_basis(a.to_system(names), 6)) {
      if (p.is_monomial()) from_basis.push_back(p.leading_monomial());
    }
    o.require(from_basis == monomial_invariant_lattice(a, 6), "basis and lattice differ for matrix " + std::to_string(count));
  }
  return o;
}

// Integer matrix as a linear map on the named coordinates.
DynamicalSystem linear_map(const QMatrix& m, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  std::vector<RationalFunction> coords;
  for (std::size_t i = 0; i < n; ++i) {
    RationalFunction c(n);
    for (std::size_t j = 0; j < n; ++j) c = c + RationalFunction::variable(n, j) * m(i, j);
    coords.push_back(c);
  }
  return DynamicalSystem(names, coords);
}

Outcome symmetrization() {
  Outcome o;
  const auto neg = sys(X, {"-x"});
  for (const auto& g : symmetrize_iterate_invariant(neg, rf("x", X), 2)) {
    o.require(exact(neg, g.function), "(-x): symmetrized output not invariant");
  }
  const auto swap = sys(XY, {"y", "x"});
  for (const auto& f : {"x", "x - y", "x^2*y + 1"}) {
    for (const auto& g : symmetrize_iterate_invariant(swap, rf(f, XY), 2)) {
      o.require(exact(swap, g.function), "(y, x): symmetrized output not invariant");
    }
  }

  // Conjugates P R P^-1 of integer matrices R of order 2, 3 or 4.
  const std::vector<std::pair<QMatrix, unsigned>> bases = [] {
    std::vector<std::pair<QMatrix, unsigned>> out;
    auto mat = [](std::vector<std::vector<long>> rows) {
      QMatrix m(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
      }
      return m;
    };
    out.emplace_back(mat({{0, -1}, {1, 0}}), 4);
    out.emplace_back(mat({{0, -1}, {1, -1}}), 3);
    out.emplace_back(mat({{-1, 0}, {0, 1}}), 2);
    out.emplace_back(mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), 3);
    out.emplace_back(mat({{0, -1, 0}, {1, 0, 0}, {0, 0, -1}}), 4);
    return out;
  }();
  Rng rng(55);
  for (int k = 0; k < 10; ++k) {
    const auto& [r, order] = bases[static_cast<std::size_t>(k) % bases.size()];
    const std::size_t n = r.rows();
    // Unipotent P = I + strictly lower part, so P^-1 is exact and integral.
    QMatrix p = QMatrix::identity(n), pinv = QMatrix::identity(n);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) p(i, j) = rng.uniform(-2, 2);
    }
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = p(i, j);
      aug(i, n + i) = 1;
    }
    rref_in_place(aug);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) pinv(i, j) = aug(i, n + j);
    }
    const std::vector<std::string> names = n == 2 ? XY : std::vector<std::string>{"x", "y", "z"};
    const auto map = linear_map(p * r * pinv, names);
    o.require(iterate(map, order) == DynamicalSystem::identity(names), "map order differs from its base");
    const Polynomial f = random_polynomial(rng, n, 2, 3);
    for (const auto& g : symmetrize_iterate_invariant(map, RationalFunction(f), order)) {
      o.require(exact(map, g.function), "random finite-order map: symmetrized output not invariant");
    }
  }
  return o;
}

// Rank over Q of rational functions from their values at random points.
std::size_t sampled_rank(const std::vector<RationalFunction>& fs, Rng& rng) {
  if (fs.empty()) return 0;
  const std::size_t points = 3 * fs.size() + 4;
  QMatrix m(points, fs.size());
  for (std::size_t p = 0; p < points;) {
    auto pt = random_point(rng, fs.front().nvars());
    std::vector<Scalar> row;
    for (const auto& f : fs) {
      auto v = f.evaluate(pt);
      if (!v) break;
      row.push_back(*v);
    }
    if (row.size() != fs.size()) continue;
    for (std::size_t j = 0; j < row.size(); ++j) m(p, j) = row[j];
    ++p;
  }
  return rank(m);
}

std::vector<RationalFunction> as_functions(const std::vector<FieldPolynomial>& ps, std::size_t r) {
  std::vector<std::size_t> shift(r);
  for (std::size_t i = 0; i < r; ++i) shift[i] = i;
  const RationalFunction t = RationalFunction::variable(r + 1, r);
  std::vector<RationalFunction> out;
  for (const auto& p : ps) {
    RationalFunction acc(r + 1);
    for (std::size_t k = 0; k < p.size(); ++k) acc = acc + p[k].remap(r + 1, shift) * t.pow(static_cast<unsigned>(k));
    out.push_back(acc);
  }
  return out;
}

Outcome star_normalization() {
  Outcome o;
  Rng rng(66);
  const std::size_t r = 2;
  int inputs = 0;
  while (inputs < 25) {
    const std::size_t count = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
    auto positive = [&] {
      Polynomial q = random_polynomial(rng, r, 1, 2);
      return q * q + Polynomial::constant(r, 1);
    };
    // A shared leading coefficient makes the top blocks dependent.
    const RationalFunction shared =
        ratfunc_normalize(random_polynomial(rng, r, 2, 2) + Polynomial::constant(r, 1), positive());
    std::vector<FieldPolynomial> qs;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t deg = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
      FieldPolynomial p(deg + 1, RationalFunction(r));
      for (std::size_t k = 0; k < deg; ++k) p[k] = ratfunc_normalize(random_polynomial(rng, r, 2, 2), positive());
      p[deg] = shared * Scalar(static_cast<long>(1 + rng.uniform(0, 3)));
      qs.push_back(trimmed(std::move(p)));
    }
    // Inputs must be independent over Q.
    if (sampled_rank(as_functions(qs, r), rng) != count) continue;
    ++inputs;
    const auto out = normalize_leading_sequence(qs, r);
    o.require(out.transition * out.inverse_transition == QMatrix::identity(count), "transitions are not inverse");
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Scalar> row, inv_row;
      for (std::size_t j = 0; j < count; ++j) {
        row.push_back(out.transition(i, j));
        inv_row.push_back(out.inverse_transition(i, j));
      }
      o.require(combine(row, qs, r) == out.polys[i], "output is not T applied to the input");
      o.require(combine(inv_row, out.polys, r) == qs[i], "input is not T^-1 applied to the output");
    }
    o.require(satisfies_star(out.polys), "output violates the leading-coefficient condition");
    std::map<long, std::vector<RationalFunction>> blocks;
    for (const auto& p : out.polys) blocks[degree(p)].push_back(p.back());
    for (const auto& [deg, lead] : blocks) {
      o.require(sampled_rank(lead, rng) == lead.size(), "sampled leading coefficients are dependent");
    }
  }
  return o;
}

Outcome degree_growth() {
  Outcome o;
  o.require(degree_sequence(sys(X, {"x + 1"}), 6).growth_class == GrowthClass::bounded, "(x + 1) not bounded");
  for (const auto& b : bundled_systems()) {
    if (recognize(b.system) == RecognizedClass::affine) {
      o.require(degree_sequence(b.system, 6).growth_class == GrowthClass::bounded, b.file + " not bounded");
    }
  }
  const auto henon = degree_sequence(sys(XY, {"y", "y^2 - x"}), 4);
  o.require(henon.degrees == std::vector<long>{2, 4, 8, 16}, "Henon degrees differ");
  o.require(henon.growth_class == GrowthClass::exponential_suspected, "Henon not exponential-suspected");
  const auto mono = degree_sequence(sys(XY, {"x^2*y", "x*y"}), 4);
  o.require(mono.degrees == std::vector<long>{3, 8, 21, 55}, "monomial degrees differ");
  return o;
}

Outcome soundness() {
  Outcome o;
  std::size_t verified = 0;
  for (const auto& [file, c] : corollaries()) {
    for (const auto* report : {&c.base, &c.square}) {
      for (const auto& f : report->invariants) {
        o.require(exact(report->system, f), file + ": emitted invariant fails verification");
        ++verified;
      }
      for (const auto& f : report->reduction_generators) {
        o.require(exact(report->system, f), file + ": reduction generator fails verification");
      }
    }
  }
  o.detail = o.pass ? std::to_string(verified) + " invariants verified" : o.detail;
  return o;
}

Outcome translation_consistency() {
  Outcome o;
  std::size_t cases = 0;
  auto check = [&](const std::string& label, const DynamicalSystem& s, const CorollaryBReport& c) {
    if (classify_system(s).verdict != Verdict::translational_proven || c.base_rank != 0) return;
    ++cases;
    o.require(c.square_rank >= s.dimension(), label + ": square rank below dimension");
  };
  for (const auto& b : bundled_systems()) {
    auto it = corollaries().find(b.file);
    if (it != corollaries().end()) check(b.file, b.system, it->second);
  }
  Rng rng(99);
  for (int k = 0; k < 3; ++k) {
    long a = 0;
    while (a == 0 || a == 1 || a == -1) a = rng.uniform(-5, 5);
    long b = 0;
    while (b == 0) b = rng.uniform(-5, 5);
    const auto shear =
        sys(XY, {std::to_string(a) + "*x", std::to_string(a) + "*y + " + std::to_string(b) + "*x"}, "shear");
    check("shear " + std::to_string(a) + "," + std::to_string(b), shear, corollary_b_check(shear, SearchBudget{}));
  }
  o.require(cases >= 6, "too few proven examples with base rank 0");
  if (o.pass) o.detail = std::to_string(cases) + " systems";
  return o;
}

Outcome determinism_and_round_trip() {
  Outcome o;
  const auto dir = default_systems_dir();
  const std::vector<std::vector<std::string>> commands{
      {"square", (dir / "shift.system").string()},
      {"invariants", (dir / "mobius.system").string()},
      {"classify", (dir / "henon.system").string()},
      {"degrees", "--n", "6", (dir / "monomial.system").string()},
      {"verify", "--mode", "randomized", "--function", "x/y", (dir / "double.system").string()},
  };
  for (const auto& args : commands) {
    auto a = nlohmann::json::parse(run_command(args).out);
    auto b = nlohmann::json::parse(run_command(args).out);
    a.erase("timing");
    b.erase("timing");
    o.require(a.dump() == b.dump(), "output differs between runs of " + args[0]);
  }
  const std::vector<std::string> vars{"x", "y", "z"};
  std::ifstream in(dir / "corpus" / "expressions.txt");
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = rf(line, vars);
    o.require(rf(str(f, vars), vars) == f, "round trip fails on " + line);
    ++count;
  }
  o.require(count >= 100, "corpus has fewer than 100 expressions");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "shift regression", 1, shift_regression},
      {2, "scaling system", 1, scaling},
      {3, "cross-ratio regression", 5, cross_ratio},
      {4, "monomial oracle equivalence", 30, monomial_oracle},
      {5, "iterate symmetrization", 5, symmetrization},
      {6, "leading-coefficient normalization", 10, star_normalization},
      {7, "degree-growth classification", 10, degree_growth},
      {8, "soundness sweep", 0, soundness},
      {9, "translation consistency", 0, translation_consistency},
      {10, "determinism and round trip", 0, determinism_and_round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      if (o.pass) o.detail = "over the time limit";
      o.pass = false;
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << std::fixed
         << std::setprecision(3) << s << " s";
    if (c.limit_s > 0) line << ", limit " << std::setprecision(0) << c.limit_s << " s";
    line << ")";
    if (!o.detail.empty()) line << " - " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
