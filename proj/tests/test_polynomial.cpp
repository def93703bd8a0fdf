#include <doctest.h>

#include "factorlab/error.hpp"
#include "factorlab/polynomial.hpp"
#include "oracles.hpp"

using namespace factorlab;

namespace {

MultiPoly univariate(const std::vector<Integer>& coeffs) { return MultiPoly::from_univariate(1, 0, coeffs); }

Integer resultant_value(const MultiPoly& f, const MultiPoly& g) {
  const MultiPoly r = resultant(f, g, 0);
  return r.coefficient({0});
}

std::vector<Integer> random_roots(oracle::Rng& rng, std::size_t count) {
  std::vector<Integer> roots;
  for (std::size_t i = 0; i < count; ++i) roots.push_back(rng.range(-9, 9));
  return roots;
}

}  // namespace

TEST_CASE("parsing and printing") {
  const MultiPoly f = parse_poly("3*x^2*y - 5 + y", 2);
  CHECK(f.coefficient({2, 1}) == 3);
  CHECK(f.coefficient({0, 1}) == 1);
  CHECK(f.coefficient({0, 0}) == -5);
  CHECK(f.weight() == 3);
  CHECK(f.to_string() == "3*x1^2*x2 + x2 - 5");
  CHECK(parse_poly(f.to_string(), 2) == f);
  CHECK(parse_poly("x1 - x1", 1).is_zero());
  CHECK(MultiPoly(1).to_string() == "0");
  CHECK_THROWS_AS(parse_poly("x^", 1), Error);
  CHECK_THROWS_AS(parse_poly("w", 1), Error);
}

TEST_CASE("arithmetic, evaluation and degrees") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const MultiPoly f = (x + MultiPoly::constant(2, 2)) * (y - MultiPoly::constant(2, 3));
  CHECK(f == parse_poly("x*y - 3*x + 2*y - 6", 2));
  CHECK(f.evaluate({5, 7}) == 28);
  CHECK(f.degree(0) == 1);
  CHECK(f.total_degree() == 2);
  CHECK(f.substitute(0, 1) == parse_poly("3*y - 9", 2));
  CHECK(f.derivative(1) == parse_poly("x + 2", 2));
  CHECK(f.divide_exact(x + MultiPoly::constant(2, 2)) == y - MultiPoly::constant(2, 3));
  CHECK_THROWS_AS(f.divide_exact(x + MultiPoly::constant(2, 1)), Error);
  CHECK((6 * f).content() == 6);
  CHECK((6 * f).divide_exact(Integer(3)) == 2 * f);
  CHECK_THROWS_AS(f.divide_exact(Integer(4)), Error);
  const auto coeffs = f.coefficients_in(1);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[1] == x + MultiPoly::constant(2, 2));
  CHECK(univariate({1, 0, 3}).univariate_coefficients(0) == std::vector<Integer>{1, 0, 3});
}

TEST_CASE("norms and variable scaling") {
  const MultiPoly f = parse_poly("x*y - 3*x + 2*y - 6", 2);
  const PolyNorms nf = norms(f);
  CHECK(nf.height == 6);
  CHECK(nf.l2_squared == 1 + 9 + 4 + 36);
  CHECK(nf.weight == 4);
  const MultiPoly scaled = scale_vars(f, {10, 100});
  CHECK(scaled == parse_poly("1000*x*y - 30*x + 200*y - 6", 2));
}

TEST_CASE("resultant of linear factors") {
  CHECK(resultant_value(univariate({-2, 1}), univariate({-3, 1})) == -1);
  CHECK(resultant_value(univariate({-3, 1}), univariate({-2, 1})) == 1);
  CHECK_THROWS_AS(resultant(MultiPoly(1), univariate({1, 1}), 0), Error);
}

TEST_CASE("resultant agrees with the product over roots") {
  oracle::Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const auto rf = random_roots(rng, 1 + static_cast<std::size_t>(rng.small(0, 3)));
    const auto rg = random_roots(rng, 1 + static_cast<std::size_t>(rng.small(0, 3)));
    Integer lf = rng.range(1, 4);
    Integer lg = rng.range(-4, -1);
    const MultiPoly f = univariate(oracle::from_roots(lf, rf));
    const MultiPoly g = univariate(oracle::from_roots(lg, rg));
    const Integer expected = oracle::resultant_from_roots(lf, rf, lg, rg);
    const Integer r = resultant_value(f, g);
    CHECK(r == expected);

    bool shared = false;
    for (const auto& a : rf) {
      for (const auto& b : rg) shared = shared || a == b;
    }
    CHECK((r == 0) == shared);

    // Res(g, f) = (-1)^(deg f deg g) Res(f, g)
    const bool odd = (rf.size() * rg.size()) % 2 == 1;
    CHECK(resultant_value(g, f) == (odd ? -r : r));

    // Res(f h, g) = Res(f, g) Res(h, g)
    const auto rh = random_roots(rng, 1 + static_cast<std::size_t>(rng.small(0, 2)));
    const MultiPoly h = univariate(oracle::from_roots(1, rh));
    CHECK(resultant_value(f * h, g) == r * resultant_value(h, g));
  }
}

TEST_CASE("bivariate resultant specialises to the univariate one") {
  oracle::Rng rng(67);
  for (int i = 0; i < 40; ++i) {
    MultiPoly f(2), g(2);
    for (unsigned a = 0; a <= 2; ++a) {
      for (unsigned b = 0; b <= 2; ++b) {
        f.add_term({a, b}, rng.range(-5, 5));
        g.add_term({a, b}, rng.range(-5, 5));
      }
    }
    f.add_term({0, 3}, 1);  // leading coefficient in y is 1 for every x
    g.add_term({0, 3}, 2);
    const MultiPoly r = resultant(f, g, 1);
    CHECK(r.degree(1) == 0);
    for (long x = -3; x <= 3; ++x) {
      const MultiPoly fx = f.substitute(0, x);
      const MultiPoly gx = g.substitute(0, x);
      const MultiPoly direct = resultant(fx, gx, 1);
      CHECK(r.substitute(0, x) == direct);
    }
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(parse_poly("x^3 - 6*x^2 + 11*x - 6", 1), 0) == MultiPoly::constant(1, 4));
  CHECK(discriminant(parse_poly("x^2 - 5*x + 6", 1), 0) == MultiPoly::constant(1, 1));
  CHECK(discriminant(parse_poly("x^2 + 1", 1), 0) == MultiPoly::constant(1, -4));
  CHECK(discriminant(parse_poly("x^2 - 2*x + 1", 1), 0).is_zero());
  CHECK_THROWS_AS(discriminant(parse_poly("2*x^2 + 1", 1), 0), Error);
  CHECK_THROWS_AS(discriminant(parse_poly("x + 1", 1), 0), Error);

  // Monic with known roots: prod_{i<j} (r_i - r_j)^2.
  oracle::Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    const auto roots = random_roots(rng, 2 + static_cast<std::size_t>(i % 3));
    Integer expected = 1;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      for (std::size_t b = a + 1; b < roots.size(); ++b) expected *= (roots[a] - roots[b]) * (roots[a] - roots[b]);
    }
    CHECK(discriminant(univariate(oracle::from_roots(1, roots)), 0) == MultiPoly::constant(1, expected));
  }
}

TEST_CASE("integer roots agree with evaluation at every point") {
  oracle::Rng rng(73);
  for (int i = 0; i < 150; ++i) {
    std::vector<Integer> roots = random_roots(rng, static_cast<std::size_t>(rng.small(1, 4)));
    std::vector<Integer> coeffs = oracle::from_roots(rng.range(1, 3), roots);
    // an irreducible-ish extra factor without integer roots
    if (i % 3 == 0) {
      const MultiPoly extra = univariate({rng.range(2, 7), 0, 1});
      coeffs = (univariate(coeffs) * extra).univariate_coefficients(0);
    }
    const Integer lo = rng.range(-12, 0);
    const Integer hi = rng.range(0, 12);
    std::vector<Integer> expected;
    const MultiPoly f = univariate(coeffs);
    for (Integer x = lo; x <= hi; ++x) {
      if (f.evaluate({x}) == 0) expected.push_back(x);
    }
    CHECK(integer_roots(coeffs, lo, hi) == expected);
  }
  // large roots found by bisection
  const Integer big = Integer(1) << 70;
  const auto coeffs = oracle::from_roots(1, {big, -big + 3, 17});
  CHECK(integer_roots(coeffs, -(Integer(1) << 72), Integer(1) << 72) ==
        std::vector<Integer>{-big + 3, 17, big});
  CHECK(integer_roots({0, 0, 1}, -5, 5) == std::vector<Integer>{0});
  CHECK(integer_roots({5}, -5, 5).empty());
  CHECK_THROWS_AS(integer_roots({0, 0}, -5, 5), Error);
}

TEST_CASE("Howgrave-Graham predicate") {
  const MultiPoly f = parse_poly("x*y + 3*x - 2", 2);
  // scaled by (2, 2): 4xy + 6x - 2, l2^2 = 56, weight 3: 168 < M^2
  CHECK(howgrave_predicate(f, 13, {2, 2}));
  CHECK_FALSE(howgrave_predicate(f, 12, {2, 2}));

  // A root modulo M inside the bounds is an integer root when the bound holds.
  oracle::Rng rng(79);
  for (int i = 0; i < 200; ++i) {
    MultiPoly g(2);
    for (unsigned a = 0; a <= 1; ++a) {
      for (unsigned b = 0; b <= 1; ++b) g.add_term({a, b}, rng.range(-20, 20));
    }
    const Integer X = rng.range(1, 6);
    const Integer Y = rng.range(1, 6);
    const Integer M = rng.range(2, 2000);
    if (!howgrave_predicate(g, M, {X, Y})) continue;
    for (Integer x = -X; x <= X; ++x) {
      for (Integer y = -Y; y <= Y; ++y) {
        const Integer v = g.evaluate({x, y});
        if (mod(v, M) == 0) CHECK(v == 0);
      }
    }
  }
}

TEST_CASE("multiple bound predicate") {
  const MultiPoly a = parse_poly("1000000*x + 1", 1);
  CHECK(multiple_bound_predicate(a, parse_poly("x + 1", 1), 1));
  CHECK_FALSE(multiple_bound_predicate(a, a, 1));
}
