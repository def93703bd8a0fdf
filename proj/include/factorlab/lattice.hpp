#pragma once

// Exact integer lattices. Basis vectors are rows; unimodular transforms act
// on the left.

#include <cstddef>
#include <vector>

#include "factorlab/arith.hpp"

namespace factorlab {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;

class Basis {
 public:
  Basis() = default;
  // Rows must form a square matrix.
  explicit Basis(IntMatrix rows);

  static Basis identity(std::size_t n);

  std::size_t dim() const { return rows_.size(); }
  const IntMatrix& rows() const { return rows_; }
  const IntVector& operator[](std::size_t i) const { return rows_[i]; }

  bool operator==(const Basis& other) const { return rows_ == other.rows_; }

 private:
  IntMatrix rows_;
};

struct GramSchmidtData {
  std::vector<RatVector> ortho;  // v*_i
  std::vector<RatVector> mu;     // mu[i][j] for j < i
  RatVector norms_sq;            // |v*_i|^2
};

Integer dot(const IntVector& a, const IntVector& b);
Integer norm_sq(const IntVector& v);

GramSchmidtData gram_schmidt(const Basis& b);

// |det| by fraction-free elimination.
Integer determinant(const Basis& b);
// Signed determinant of an arbitrary square integer matrix; zero allowed.
Integer signed_determinant(IntMatrix m);

struct LllResult {
  Basis reduced;
  IntMatrix transform;  // reduced = transform * input
  std::size_t swaps = 0;
};

// Integral LLL (all quantities kept as integers d_i, lambda_ij).
// delta must lie in (1/4, 1].
LllResult lll_reduce_with_transform(const Basis& b, const Rational& delta = Rational(3, 4));
Basis lll_reduce(const Basis& b, const Rational& delta = Rational(3, 4));

// Checks size reduction and the Lovasz condition exactly.
bool is_lll_reduced(const Basis& b, const Rational& delta);

// det^2 <= prod |v_i|^2.
bool hadamard_check(const Basis& b);

// Nonzero lattice vector of minimal norm among coefficient vectors with
// |x_i| <= coeff_bound; ties go to the lexicographically smallest vector.
// Only for n <= 5.
IntVector shortest_vector_exhaustive(const Basis& b, const Integer& coeff_bound);

// gamma_n^n for n = 1..8.
Rational hermite_constant_power(std::size_t n);

// gamma_n^n * det^2: any shortest vector v satisfies |v|^(2n) <= this value.
Rational hermite_bound(const Basis& b);

}  // namespace factorlab
