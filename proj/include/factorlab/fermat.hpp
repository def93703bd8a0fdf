#pragma once

// Difference-of-squares factoring: 4N = x^2 - y^2 with x = p + q, y = q - p.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "factorlab/arith.hpp"

namespace factorlab {

enum class FermatMethod { standard, triangular, ratio };

const char* to_string(FermatMethod method);

struct FermatResult {
  Integer x;  // p + q
  Integer y;  // q - p
  Integer p;
  Integer q;
  std::uint64_t steps = 0;
  FermatMethod method = FermatMethod::standard;
};

// Caller-chosen cap on the number of tested x values.
struct SearchBudget {
  std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max();
};

enum class SearchStatus { found, exhausted, trivial_only, multiplier_collision };

const char* to_string(SearchStatus status);

struct FermatOutcome {
  SearchStatus status = SearchStatus::exhausted;
  std::uint64_t steps = 0;
  std::optional<FermatResult> result;

  bool found() const { return status == SearchStatus::found; }
};

// Scans x = ceil(2 sqrt N), ceil(2 sqrt N) + 1, ... Every x with x^2 >= 4N
// counts as one step, including the hit.
FermatOutcome fermat_standard(const Integer& n, SearchBudget budget = {});

// max(0, p + N/p - isqrt(4N)).
Integer predict_steps(const Integer& p, const Integer& n);

struct TriangularTerm {
  Integer k;          // m + i
  Integer x;          // k (k + 1) / 2
  Integer x_squared;  // accumulated by cube increments
};

// The first `count` terms of x_i^2 = x_{i-1}^2 + (m + i)^3, m = floor(2 N^(1/4)).
std::vector<TriangularTerm> triangular_sequence(const Integer& n, std::size_t count);

// Tests only triangular x values. Without an explicit budget the scan stops
// once x exceeds (N + 4) / 2.
FermatOutcome fermat_triangular(const Integer& n, std::optional<SearchBudget> budget = std::nullopt);

struct RatioGridEntry {
  std::size_t index = 0;
  Rational r;
  Rational s;  // 1 / r
};

std::vector<RatioGridEntry> ratio_grid(const Rational& lower, const Rational& upper, std::size_t count);

// Fixed-point rendering with round-half-to-even at `places` digits.
std::string to_fixed(const Rational& value, unsigned places);
// Same, with trailing fractional zeros removed ("1.014150" -> "1.01415").
std::string to_fixed_trimmed(const Rational& value, unsigned places);

// Factors N when q/p is close to r = a/b (a, b <= 10^4) by running the
// standard scan on a*b*N and stripping the multipliers with gcds.
FermatOutcome fermat_ratio(const Integer& n, const Rational& r, SearchBudget budget = {});

struct RatioBounds {
  bool factor_range = false;      // sqrt(N/2) <= p <= sqrt(N) <= q <= sqrt(2N)
  bool sum_range = false;         // 2 sqrt(N) <= p + q <= (3 sqrt 2 / 2) sqrt(N)
  bool difference_range = false;  // 0 <= q - p <= (sqrt 2 / 2) sqrt(N)

  bool all() const { return factor_range && sum_range && difference_range; }
};

RatioBounds ratio_bounds_check(const Integer& p, const Integer& q, const Integer& n);

}  // namespace factorlab
