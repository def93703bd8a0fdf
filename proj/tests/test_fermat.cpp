#include <doctest.h>

#include <string>
#include <vector>

#include "factorlab/error.hpp"
#include "factorlab/fermat.hpp"
#include "oracles.hpp"

using namespace factorlab;

namespace {

// Steps of the standard scan computed from the factors: every x from the
// first x with x^2 >= 4N up to p + q.
Integer scan_steps(const Integer& p, const Integer& q) {
  const Integer n4 = 4 * p * q;
  Integer x0 = isqrt(n4);
  if (x0 * x0 < n4) ++x0;
  return p + q - x0 + 1;
}

}  // namespace

TEST_CASE("standard scan on 2599") {
  const FermatOutcome out = fermat_standard(2599);
  REQUIRE(out.found());
  CHECK(out.steps == 35);
  CHECK(out.result->x == 136);
  CHECK(out.result->y == 90);
  CHECK(out.result->p == 23);
  CHECK(out.result->q == 113);
  CHECK(predict_steps(23, 2599) == 35);
}

TEST_CASE("triangular scan on 2599") {
  const auto terms = triangular_sequence(2599, 3);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].k == 14);
  CHECK(terms[0].x == 105);
  CHECK(terms[1].x == 120);
  CHECK(terms[2].x == 136);
  for (const auto& t : terms) CHECK(t.x_squared == t.x * t.x);

  const FermatOutcome out = fermat_triangular(2599);
  REQUIRE(out.found());
  CHECK(out.steps == 3);
  CHECK(out.result->x == 136);
  CHECK(out.result->y == 90);
  CHECK(out.result->method == FermatMethod::triangular);
}

TEST_CASE("triangular x values are triangular numbers reached by cubes") {
  for (long n : {2599L, 10807L, 1000001L, 999999937L * 3}) {
    const auto terms = triangular_sequence(n, 40);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      CHECK(terms[i].x * 2 == terms[i].k * (terms[i].k + 1));
      CHECK(terms[i].x_squared == terms[i].x * terms[i].x);
      if (i > 0) CHECK(terms[i].x_squared - terms[i - 1].x_squared == pow(terms[i].k, 3));
    }
  }
}

TEST_CASE("standard scan step count matches the factor-based count") {
  oracle::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Integer p = next_prime(rng.range(1000, 50000));
    const Integer q = next_prime(p + 1 + rng.below(p / 8 + 1));
    const Integer n = p * q;
    const FermatOutcome out = fermat_standard(n);
    REQUIRE(out.found());
    CHECK(out.result->p == p);
    CHECK(out.result->q == q);
    CHECK(Integer(static_cast<unsigned long>(out.steps)) == scan_steps(p, q));
    const Integer predicted = predict_steps(p, n);
    CHECK(abs(predicted - scan_steps(p, q)) <= 1);
  }
}

TEST_CASE("budget exhaustion and trivial representations") {
  const FermatOutcome capped = fermat_standard(2599, SearchBudget{34});
  CHECK(capped.status == SearchStatus::exhausted);
  CHECK(capped.steps == 34);
  CHECK_FALSE(capped.result);

  const FermatOutcome prime = fermat_standard(101);
  CHECK(prime.status == SearchStatus::trivial_only);

  const FermatOutcome tri_prime = fermat_triangular(10007);
  CHECK_FALSE(tri_prime.found());

  CHECK(fermat_standard(9).found());  // 3 * 3: y = 0
  CHECK(fermat_standard(9).result->p == 3);
  CHECK_THROWS_AS(fermat_standard(2600), Error);
  CHECK_THROWS_AS(fermat_standard(1), Error);
  CHECK_THROWS_AS(predict_steps(7, 2599), Error);
}

TEST_CASE("ratio scan factors q near 2p faster than the standard scan") {
  oracle::Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const Integer p = next_prime(rng.range(20000, 200000));
    const Integer q = next_prime(2 * p + rng.below(40));
    const Integer n = p * q;
    const FermatOutcome ratio = fermat_ratio(n, 2);
    REQUIRE(ratio.found());
    CHECK(ratio.result->p * ratio.result->q == n);
    CHECK(ratio.result->p == p);
    CHECK(ratio.result->method == FermatMethod::ratio);
    CHECK(ratio.steps < fermat_standard(n).steps);
  }
  CHECK_THROWS_AS(fermat_ratio(2599, Rational(1, 2)), Error);
  CHECK_THROWS_AS(fermat_ratio(2599, Rational(100001, 10)), Error);
}

TEST_CASE("ratio grid on [0.707, 1] with 21 points") {
  // Published table, read column-wise.
  const std::vector<std::pair<std::string, std::string>> table = {
      {"0.707", "1.414427"},    {"0.720952", "1.387054"}, {"0.734905", "1.360721"}, {"0.748857", "1.335368"},
      {"0.76281", "1.310943"},  {"0.776762", "1.287396"}, {"0.790714", "1.264679"}, {"0.804667", "1.242751"},
      {"0.818619", "1.221569"}, {"0.832571", "1.201098"}, {"0.846524", "1.181302"}, {"0.860476", "1.162147"},
      {"0.874429", "1.143604"}, {"0.888381", "1.125643"}, {"0.902333", "1.108238"}, {"0.916286", "1.091363"},
      {"0.930238", "1.074994"}, {"0.94419", "1.059108"},  {"0.958143", "1.043686"}, {"0.972095", "1.028706"},
      {"0.986048", "1.01415"}};
  const auto grid = ratio_grid(Rational(707, 1000), 1, 21);
  REQUIRE(grid.size() == 21);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(grid[i].index == i);
    CHECK(grid[i].r * grid[i].s == 1);
    CHECK(to_fixed_trimmed(grid[i].r, 6) == table[i].first);
    CHECK(to_fixed_trimmed(grid[i].s, 6) == table[i].second);
  }
  CHECK_THROWS_AS(ratio_grid(1, Rational(1, 2), 3), Error);
  CHECK_THROWS_AS(ratio_grid(Rational(1, 2), 1, 0), Error);
}

TEST_CASE("fixed-point rendering rounds half to even") {
  CHECK(to_fixed(Rational(1, 8), 2) == "0.12");
  CHECK(to_fixed(Rational(3, 8), 2) == "0.38");
  CHECK(to_fixed(Rational(5, 2), 0) == "2");
  CHECK(to_fixed(Rational(7, 2), 0) == "4");
  CHECK(to_fixed(Rational(-1, 8), 2) == "-0.12");
  CHECK(to_fixed(Rational(1, 3), 6) == "0.333333");
  CHECK(to_fixed(Rational(2), 3) == "2.000");
  CHECK(to_fixed_trimmed(Rational(2), 3) == "2");
  CHECK(to_fixed_trimmed(Rational(101415, 100000), 6) == "1.01415");
}

TEST_CASE("ratio bounds for balanced factors") {
  CHECK(ratio_bounds_check(101, 103, 101 * 103).all());
  CHECK(ratio_bounds_check(101, 199, 101 * 199).all());
  CHECK_THROWS_AS(ratio_bounds_check(23, 113, 2599), Error);
  CHECK_THROWS_AS(ratio_bounds_check(23, 113, 2600), Error);
  oracle::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const Integer p = rng.range(1000, 100000);
    const Integer q = rng.range(p, 2 * p);
    CHECK(ratio_bounds_check(p, q, p * q).all());
  }
}
