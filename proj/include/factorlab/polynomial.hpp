#pragma once

// Sparse multivariate integer polynomials, their norms, and elimination by
// resultants.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "factorlab/arith.hpp"

namespace factorlab {

using Exponents = std::vector<unsigned>;

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Integer>;

  explicit MultiPoly(std::size_t nvars = 1);

  static MultiPoly constant(std::size_t nvars, const Integer& c);
  // The variable x_{index}, 0-based.
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Exponents& exps, const Integer& c);
  // c_0 + c_1 x + ... in variable `var`.
  static MultiPoly from_univariate(std::size_t nvars, std::size_t var, const std::vector<Integer>& coeffs);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t weight() const { return terms_.size(); }

  Integer coefficient(const Exponents& exps) const;
  void add_term(const Exponents& exps, const Integer& c);

  unsigned degree(std::size_t var) const;
  unsigned total_degree() const;
  // Coefficients of var^0, var^1, ... as polynomials without var.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  // Ascending integer coefficients; requires every other variable absent.
  std::vector<Integer> univariate_coefficients(std::size_t var) const;

  MultiPoly derivative(std::size_t var) const;
  MultiPoly substitute(std::size_t var, const Integer& value) const;
  Integer evaluate(const std::vector<Integer>& point) const;

  Integer content() const;
  // Exact division by a nonzero integer; throws if any coefficient is not divisible.
  MultiPoly divide_exact(const Integer& c) const;
  // Exact division by a polynomial (lexicographic long division).
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Integer& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& other) const { return nvars_ == other.nvars_ && terms_ == other.terms_; }
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  // Terms in descending lexicographic order, e.g. "3*x1^2*x2 - 5".
  std::string to_string() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// Parses sums of terms `c*x1^e1*...*xn^en`; `x`, `y`, `z` alias x1, x2, x3.
MultiPoly parse_poly(const std::string& text, std::size_t nvars);

struct PolyNorms {
  Integer height;      // max |coefficient|
  Integer l2_squared;  // sum of squared coefficients
  std::size_t weight;  // number of nonzero terms
};

PolyNorms norms(const MultiPoly& f);

// Coefficient of exponent e multiplied by prod bounds[i]^e[i].
MultiPoly scale_vars(const MultiPoly& f, const std::vector<Integer>& bounds);

// Determinant of the Sylvester matrix with respect to `var` (rows of f
// coefficients first, highest degree leftmost).
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// (-1)^(k(k-1)/2) Res(f, f') for f monic of degree k >= 2 in var.
MultiPoly discriminant(const MultiPoly& f, std::size_t var);

// |f(x1 X1, ..., xn Xn)|_2^2 * w < modulus^2: a root modulo `modulus` inside
// the bounds is then a root over the integers.
bool howgrave_predicate(const MultiPoly& f, const Integer& modulus, const std::vector<Integer>& bounds);

// |b|_2 < 2^(-(d+1)^n + 1) |a|_inf, compared on squares: b cannot be an
// integer multiple of a.
bool multiple_bound_predicate(const MultiPoly& a, const MultiPoly& b, unsigned max_deg);

// Distinct integer roots in [lo, hi] of the univariate polynomial with
// ascending coefficients, in ascending order. Throws ZeroPolynomial on 0.
std::vector<Integer> integer_roots(const std::vector<Integer>& coeffs, const Integer& lo, const Integer& hi);

}  // namespace factorlab
