#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "ratdyn/error.hpp"
#include "ratdyn/exactalg/gcd.hpp"
#include "ratdyn/exactalg/modular_gcd.hpp"
#include "ratdyn/exactalg/jacobian.hpp"
#include "ratdyn/exactalg/linalg.hpp"
#include "ratdyn/parallel/nullspace.hpp"

using namespace ratdyn;
using namespace ratdyn::testing;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

}  // namespace

TEST_CASE("polynomial printing uses descending grlex order") {
  CHECK(str(poly("1 + y + x^2 - 3/2*x*y", XY), XY) == "x^2 - 3/2*x*y + y + 1");
  CHECK(str(poly("0", XY), XY) == "0");
  CHECK(str(poly("-x", XY), XY) == "-x");
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    Polynomial a = random_polynomial(rng, n, 4, 5);
    Polynomial b = random_polynomial(rng, n, 4, 5);
    Polynomial c = random_polynomial(rng, n, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    // Evaluation is a ring homomorphism.
    auto p = random_point(rng, n);
    CHECK((a * b + c).evaluate(p) == a.evaluate(p) * b.evaluate(p) + c.evaluate(p));
  }
}

TEST_CASE("exact division and its failure") {
  Polynomial a = poly("x^2 - y^2", XY);
  CHECK(exact_divide(a, poly("x - y", XY)) == poly("x + y", XY));
  CHECK_THROWS_AS(exact_divide(a, poly("x + 2", XY)), Error);
  Polynomial q;
  CHECK_FALSE(try_divide(poly("x", XY), poly("y", XY), q));
}

TEST_CASE("poly_gcd examples") {
  // x^2 - y^2 = (x - y)(x + y): trial division by the two linear factors,
  // checked at sample points independently of the multiplication routine.
  Rng rng(3);
  for (int i = 0; i < 5; ++i) {
    auto p = random_point(rng, 2);
    Scalar lhs = p[0] * p[0] - p[1] * p[1];
    CHECK(lhs == (p[0] - p[1]) * (p[0] + p[1]));
  }
  CHECK(poly_gcd(poly("x^2 - y^2", XY), poly("x - y", XY)) == poly("x - y", XY));

  // gcd with zero returns the content-normalized argument.
  CHECK(poly_gcd(poly("-4*x + 6*y", XY), poly("0", XY)) == poly("2*x - 3*y", XY));
  CHECK(poly_gcd(poly("0", XY), poly("1/2*x + 1/3", XY)) == poly("3*x + 2", XY));

  // Resultant of x+1 and x+2 is det [[1,1],[1,2]] = 1, nonzero: coprime.
  CHECK(poly_gcd(poly("x + 1", XY), poly("x + 2", XY)) == poly("1", XY));

  CHECK_THROWS_AS(poly_gcd(poly("x", XY), poly("x", {"x"})), Error);
}

TEST_CASE("poly_gcd recovers planted common factors") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    Polynomial g = random_polynomial(rng, n, 3, 3);
    Polynomial a = random_polynomial(rng, n, 3, 3);
    Polynomial b = random_polynomial(rng, n, 3, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial ga = g * a;
    Polynomial gb = g * b;
    Polynomial h = poly_gcd(ga, gb);
    Polynomial q;
    // The planted factor divides the gcd, which divides both inputs.
    CHECK(try_divide(h, g, q));
    CHECK(try_divide(ga, h, q));
    CHECK(try_divide(gb, h, q));
    // Cofactors are coprime.
    CHECK(poly_gcd(exact_divide(ga, h), exact_divide(gb, h)).is_constant());
  }
}

TEST_CASE("modular gcd agrees with the remainder-sequence reference") {
  Rng rng(31);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    Polynomial g = random_polynomial(rng, n, 3, 3, 40);
    Polynomial a = random_polynomial(rng, n, 3, 4, 40);
    Polynomial b = random_polynomial(rng, n, 3, 4, 40);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    // Squares and shared content exercise the content and unlucky-point paths.
    if (trial % 4 == 0) a = a * g;
    if (trial % 5 == 0) g = g * Polynomial::variable(n, 0);
    Polynomial ga = (g * a).primitive_integer();
    Polynomial gb = (g * b).primitive_integer();
    if (ga.is_constant() || gb.is_constant()) continue;
    auto m = modular_gcd(ga, gb);
    REQUIRE(m.has_value());
    CHECK(*m == prs_gcd_reference(ga, gb));
    ++compared;
  }
  CHECK(compared > 30);
  // Coprime inputs give one.
  auto one = modular_gcd(poly("x^2 + y", XY), poly("x*y + 1", XY));
  REQUIRE(one.has_value());
  CHECK(*one == poly("1", XY));
  // Coefficients larger than one prime.
  Polynomial big = poly("12345678901234567*x^2 - 98765432109876543*y + 3", XY);
  auto h = modular_gcd(big * poly("x + 2*y", XY), big * poly("x - y^2", XY));
  REQUIRE(h.has_value());
  CHECK(*h == big);
}

TEST_CASE("ratfunc_normalize examples") {
  auto f = ratfunc_normalize(poly("x^2 - y^2", XY), poly("x - y", XY));
  CHECK(f == RationalFunction(poly("x + y", XY)));
  auto z = ratfunc_normalize(poly("0", XY), poly("x^3 + 7", XY));
  CHECK(z.is_zero());
  CHECK(z.den() == poly("1", XY));
  auto s = ratfunc_normalize(poly("2*x", XY), poly("-2", XY));
  CHECK(s == RationalFunction(poly("-x", XY)));
  CHECK_THROWS_AS(ratfunc_normalize(poly("x", XY), poly("0", XY)), Error);
}

TEST_CASE("normalization is idempotent and value preserving") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial g = random_polynomial(rng, 2, 2, 3);
    Polynomial n = random_polynomial(rng, 2, 3, 4) * g;
    Polynomial d = random_polynomial(rng, 2, 3, 4) * g;
    if (d.is_zero()) continue;
    auto f = ratfunc_normalize(n, d);
    CHECK(ratfunc_normalize(f.num(), f.den()) == f);
    CHECK(f.den().leading_coeff() == 1);
    for (int k = 0; k < 4; ++k) {
      auto p = random_point(rng, 2);
      Scalar dv = d.evaluate(p);
      auto fv = f.evaluate(p);
      if (sgn(dv) == 0 || !fv) continue;
      CHECK(*fv == n.evaluate(p) / dv);
    }
  }
}

TEST_CASE("substitute examples") {
  std::vector<RationalFunction> shift{rf("x + 1", XY), rf("y + 1", XY)};
  CHECK(substitute(rf("x - y", XY), shift) == rf("x - y", XY));

  std::vector<RationalFunction> identity{rf("x", XY), rf("y", XY)};
  auto f = rf("(x^2 + y)/(x - 3*y^2)", XY);
  CHECK(substitute(f, identity) == f);

  std::vector<RationalFunction> doubling{rf("2*x", XY), rf("2*y", XY)};
  CHECK(substitute(rf("x/y", XY), doubling) == rf("x/y", XY));

  std::vector<RationalFunction> collapse{rf("x", XY), rf("x", XY)};
  CHECK_THROWS_AS(substitute(rf("1/(x - y)", XY), collapse), Error);
  CHECK_THROWS_AS(substitute(rf("x", XY), std::vector<RationalFunction>{rf("x", XY)}), Error);
}

TEST_CASE("substitution commutes with evaluation") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial fden = random_polynomial(rng, 2, 2, 3) + poly("1", XY);
    if (fden.is_zero()) continue;
    RationalFunction f = ratfunc_normalize(random_polynomial(rng, 2, 3, 4), fden);
    std::vector<RationalFunction> images;
    for (int i = 0; i < 2; ++i) {
      Polynomial den = random_polynomial(rng, 2, 2, 2) + poly("y^2 + 1", XY);
      images.push_back(ratfunc_normalize(random_polynomial(rng, 2, 2, 3) + poly("x", XY), den));
    }
    RationalFunction g;
    try {
      g = substitute(f, images);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::indeterminacy);
      continue;
    }
    int compared = 0;
    for (int k = 0; k < 10 && compared < 3; ++k) {
      auto p = random_point(rng, 2);
      auto a = images[0].evaluate(p);
      auto b = images[1].evaluate(p);
      if (!a || !b) continue;
      std::vector<Scalar> q{*a, *b};
      auto lhs = f.evaluate(q);
      auto rhs = g.evaluate(p);
      if (!lhs || !rhs) continue;
      CHECK(*lhs == *rhs);
      ++compared;
    }
  }
}

TEST_CASE("jacobian_rank examples") {
  std::vector<RationalFunction> a{rf("x - y", XY), rf("(x - y)^2", XY)};
  CHECK(jacobian_rank(a) == 1);
  CHECK(jacobian_rank_exact(a) == 1);
  std::vector<RationalFunction> b{rf("x", XY), rf("y", XY)};
  CHECK(jacobian_rank(b) == 2);
  // x^2 + y^2 = (x + y)^2 - 2xy.
  std::vector<RationalFunction> c{rf("x + y", XY), rf("x*y", XY), rf("x^2 + y^2", XY)};
  CHECK(jacobian_rank(c) == 2);
  CHECK(jacobian_rank_exact(c) == 2);
  CHECK(jacobian_rank(std::vector<RationalFunction>{}) == 0);
}

TEST_CASE("jacobian_rank bounds and monotonicity") {
  Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<RationalFunction> fs;
    for (int i = 0; i < 2; ++i) fs.push_back(RationalFunction(random_polynomial(rng, 3, 3, 3)));
    const std::size_t r = jacobian_rank(fs);
    CHECK(r <= std::min<std::size_t>(fs.size(), 3));
    CHECK(r == jacobian_rank_exact(fs));
    // A function of existing entries adds no rank.
    fs.push_back(fs[0] * fs[1] + fs[0].pow(2));
    CHECK(jacobian_rank(fs) == r);
  }
}

TEST_CASE("polynomial determinant by Bareiss") {
  std::vector<std::vector<Polynomial>> m{{poly("x", XY), poly("y", XY)}, {poly("y", XY), poly("x", XY)}};
  CHECK(polynomial_determinant(m) == poly("x^2 - y^2", XY));
  std::vector<std::vector<Polynomial>> s{{poly("x", XY), poly("x*y", XY)}, {poly("1", XY), poly("y", XY)}};
  CHECK(polynomial_determinant(s).is_zero());
}

TEST_CASE("coprime basis and square-free splitting") {
  std::vector<Polynomial> in{poly("x^2*y", XY), poly("x*(x + y)", XY), poly("(x + y)^2*(x - 1)", XY)};
  auto basis = coprime_basis(in);
  std::vector<std::string> printed;
  for (const auto& p : basis) printed.push_back(str(p, XY));
  std::sort(printed.begin(), printed.end());
  CHECK(printed == std::vector<std::string>{"x", "x + y", "x - 1", "y"});
}

TEST_CASE("nullspace routes agree on random matrices") {
  Rng rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t rows = 5 + static_cast<std::size_t>(rng.uniform(0, 30));
    const std::size_t cols = 5 + static_cast<std::size_t>(rng.uniform(0, 30));
    // Low-rank product so that the kernel is nontrivial.
    const std::size_t inner = 1 + static_cast<std::size_t>(rng.uniform(0, 6));
    QMatrix a(rows, inner);
    QMatrix b(inner, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < inner; ++j) a(i, j) = rng.small_rational(9);
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = rng.uniform(-3, 3);
    QMatrix m = a * b;
    std::vector<ColumnMatrix::Column> columns(cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r)
        if (sgn(m(r, c)) != 0) columns[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
    ColumnMatrix cm(rows, columns);
    auto exact = nullspace(cm, {NullspaceRoute::exact, 1});
    auto modular = nullspace(cm, {NullspaceRoute::multimodular, 1});
    auto parallel = nullspace(cm, {NullspaceRoute::multimodular, 0});
    CHECK(exact == modular);
    CHECK(exact == parallel);
    CHECK(exact.size() == cols - rank(m));
    CHECK(nullity_upper_bound(cm) >= exact.size());
    for (const auto& v : exact) {
      auto image = cm.apply(v);
      CHECK(std::all_of(image.begin(), image.end(), [](const Scalar& x) { return sgn(x) == 0; }));
    }
    // Any spanning set canonicalizes to the same basis.
    std::vector<Vector> mixed = exact;
    if (mixed.size() >= 2) {
      for (std::size_t k = 0; k < cols; ++k) mixed[0][k] += mixed[1][k] * 3;
      CHECK(canonical_kernel_basis(mixed, cols) == exact);
    }
  }
}
