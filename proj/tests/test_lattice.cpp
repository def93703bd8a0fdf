#include <doctest.h>

#include "factorlab/error.hpp"
#include "factorlab/lattice.hpp"
#include "oracles.hpp"

using namespace factorlab;

namespace {

IntMatrix random_rows(oracle::Rng& rng, std::size_t n, const Integer& bound) {
  for (;;) {
    IntMatrix rows(n, IntVector(n));
    for (auto& row : rows) {
      for (auto& v : row) v = rng.range(-bound, bound);
    }
    if (oracle::determinant(rows) != 0) return rows;
  }
}

// Size reduction and the Lovasz condition, from the oracle projection.
bool reduced_by_projection(const IntMatrix& rows, const Rational& delta) {
  const auto gs = oracle::project(rows);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (2 * abs(gs.mu[i][j]) > 1) return false;
    }
    const Rational mu = gs.mu[i][i - 1];
    if (gs.norms_sq[i] < (delta - mu * mu) * gs.norms_sq[i - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("basis shape and dependence") {
  CHECK_THROWS_AS(Basis(IntMatrix{{1, 2}}), Error);
  CHECK_THROWS_AS(gram_schmidt(Basis(IntMatrix{{1, 2}, {2, 4}})), Error);
  CHECK_THROWS_AS(lll_reduce(Basis(IntMatrix{{1, 2}, {2, 4}})), Error);
  CHECK(Basis::identity(3).rows() == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(dot({1, 2, 3}, {4, 5, 6}) == 32);
  CHECK(norm_sq({3, 4}) == 25);
}

TEST_CASE("Gram-Schmidt agrees with direct projection") {
  oracle::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
    const IntMatrix rows = random_rows(rng, n, 1000);
    const auto gs = gram_schmidt(Basis(rows));
    const auto ref = oracle::project(rows);
    CHECK(gs.norms_sq == ref.norms_sq);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < a; ++b) CHECK(gs.mu[a][b] == ref.mu[a][b]);
    }
    // v*_i pairwise orthogonal
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        Rational s = 0;
        for (std::size_t t = 0; t < n; ++t) s += gs.ortho[a][t] * gs.ortho[b][t];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("determinants") {
  oracle::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 7);
    IntMatrix rows(n, IntVector(n));
    for (auto& row : rows) {
      for (auto& v : row) v = rng.range(-50, 50);
    }
    if (i % 10 == 0 && n > 1) rows[1] = rows[0];
    const Rational ref = oracle::determinant(rows);
    CHECK(Rational(signed_determinant(rows)) == ref);
    if (ref != 0) CHECK(Rational(determinant(Basis(rows))) == abs(ref));
  }
  CHECK(signed_determinant({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("LLL on the worked two-dimensional basis") {
  const LllResult r = lll_reduce_with_transform(Basis(IntMatrix{{4, 1}, {7, 2}}));
  CHECK(r.reduced.rows() == IntMatrix{{-1, 0}, {0, 1}});
  CHECK(oracle::multiply(r.transform, IntMatrix{{4, 1}, {7, 2}}) == r.reduced.rows());
  CHECK(is_lll_reduced(r.reduced, Rational(3, 4)));
}

TEST_CASE("LLL contract on random bases") {
  oracle::Rng rng(47);
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const IntMatrix rows = random_rows(rng, n, Integer(1) << 20);
    const Rational delta = i % 2 ? Rational(3, 4) : Rational(99, 100);
    const LllResult r = lll_reduce_with_transform(Basis(rows), delta);
    CHECK(reduced_by_projection(r.reduced.rows(), delta));
    CHECK(is_lll_reduced(r.reduced, delta));
    CHECK(oracle::multiply(r.transform, rows) == r.reduced.rows());
    CHECK(abs(oracle::determinant(r.transform)) == 1);
    CHECK(determinant(r.reduced) == determinant(Basis(rows)));
    CHECK(hadamard_check(r.reduced));
    CHECK(lll_reduce(Basis(rows), delta) == r.reduced);
  }
}

TEST_CASE("first reduced vector within 2^((n-1)/2) of the shortest") {
  oracle::Rng rng(53);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const IntMatrix rows = random_rows(rng, n, Integer(1) << 12);
    const Basis reduced = lll_reduce(Basis(rows));
    const auto lambda_sq = oracle::shortest_norm_sq(reduced.rows());
    if (!lambda_sq) continue;
    ++checked;
    CHECK(norm_sq(reduced[0]) <= (Integer(1) << (n - 1)) * *lambda_sq);
    // |v|^(2n) <= gamma_n^n det^2
    Rational lhs = 1;
    for (std::size_t k = 0; k < n; ++k) lhs *= *lambda_sq;
    CHECK(lhs <= hermite_bound(reduced));
  }
  CHECK(checked >= 60);
}

TEST_CASE("exhaustive shortest vector agrees with the enumeration oracle") {
  oracle::Rng rng(59);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const Basis reduced = lll_reduce(Basis(random_rows(rng, n, 300)));
    const auto lambda_sq = oracle::shortest_norm_sq(reduced.rows());
    REQUIRE(lambda_sq);
    CHECK(norm_sq(shortest_vector_exhaustive(reduced, 4)) == *lambda_sq);
  }
  CHECK_THROWS_AS(shortest_vector_exhaustive(Basis::identity(6), 1), Error);
}

TEST_CASE("Hermite constants") {
  CHECK(hermite_constant_power(1) == 1);
  CHECK(hermite_constant_power(2) == Rational(4, 3));
  CHECK(hermite_constant_power(3) == 2);
  CHECK(hermite_constant_power(4) == 4);
  CHECK(hermite_constant_power(5) == 8);
  CHECK(hermite_constant_power(6) == Rational(64, 3));
  CHECK(hermite_constant_power(7) == 64);
  CHECK(hermite_constant_power(8) == 256);
  CHECK_THROWS_AS(hermite_constant_power(9), Error);
  CHECK_THROWS_AS(hermite_constant_power(0), Error);
}

TEST_CASE("delta outside (1/4, 1] is rejected") {
  const Basis b(IntMatrix{{4, 1}, {7, 2}});
  CHECK_THROWS_AS(lll_reduce(b, Rational(1, 4)), Error);
  CHECK_THROWS_AS(lll_reduce(b, Rational(11, 10)), Error);
  CHECK_NOTHROW(lll_reduce(b, Rational(1)));
}
