#pragma once

// Small integer roots of f(x, y) = (m x + P0)(n y + Q0) - N by lattice
// reduction. A root inside the bounds gives the split N = p q with
// p = m x0 + P0 and q = n y0 + Q0.
//
// Each box is handled by one lattice: a polynomial h with h(x0, y0) = 0 over
// the integers is read off the reduced basis, and the integer roots of
// Res_y(f, h) give x0. The Howgrave-Graham bound is checked exactly for every
// h used, so a solved box never loses a root. Boxes too large for the
// lattice are halved, and the other coordinate is narrowed through
// y = (N / (m x + P0) - Q0) / n.

#include <cstddef>
#include <optional>
#include <vector>

#include "factorlab/arith.hpp"
#include "factorlab/polynomial.hpp"
#include "factorlab/residue.hpp"

namespace factorlab {

struct BivariateProblem {
  Integer N;
  Integer P0;
  Integer Q0;
  Integer X;  // |x0| <= X
  Integer Y;  // |y0| <= Y
  Integer m{1};
  Integer n{1};
};

// (m x + P0)(n y + Q0) - N in variables x = x1, y = x2.
MultiPoly factoring_polynomial(const BivariateProblem& prob);

struct RootSolution {
  Integer x0;
  Integer y0;
  std::optional<Integer> z0;
  Integer p;
  Integer q;

  bool trivial() const { return p == 1 || q == 1; }
  bool operator==(const RootSolution& other) const {
    return x0 == other.x0 && y0 == other.y0 && z0 == other.z0 && p == other.p && q == other.q;
  }
};

struct LatticeStats {
  std::size_t lattice_dim = 0;        // largest lattice built
  std::size_t boxes = 0;              // boxes visited after narrowing
  std::size_t lattice_boxes = 0;      // boxes settled by a lattice
  std::size_t enumerated_boxes = 0;   // boxes thin enough to scan directly
  std::size_t lll_calls = 0;
  double lll_ms = 0.0;
  unsigned max_level = 0;             // highest shift level that succeeded
  std::size_t multiple_bound_hits = 0;  // accepted h that also met the size-based non-multiple bound
};

struct SolveReport {
  std::vector<RootSolution> roots;  // ascending x0
  bool certified = false;           // (XY)^3 <= W^2 on the top-level box
  LatticeStats stats;

  // First root with p, q > 1, if any.
  std::optional<RootSolution> nontrivial() const;
};

struct SolverOptions {
  unsigned base_level = 1;
  // Levels above base_level are tried on a box before splitting it. A level-2
  // lattice costs about as much as thirty level-1 lattices, so by default a
  // box that fails at level 1 is split instead.
  unsigned max_level = 1;
  unsigned max_split_depth = 64;
  Rational delta{99, 100};
  // Boxes at most this many points wide in x or y are scanned directly.
  Integer scan_width{8};
};

// (X Y)^3 <= W^2 with W the height of f(xX, yY).
bool certified_regime(const BivariateProblem& prob);

struct IndependentPolynomial {
  MultiPoly h;                 // h(x0, y0) = 0 for every root in the box
  Integer modulus;             // lattice modulus; h satisfies the Howgrave-Graham bound for it
  std::size_t lattice_dim = 0;
  MultiPoly resultant;         // Res_y(f, h), nonzero, in x only
  bool multiple_bound_holds = false;
};

// One lattice at the given shift level (dimension (level + 2)^2). Requires
// f(0, 0) != 0. Empty when no reduced vector is both small enough and
// independent of f.
std::optional<IndependentPolynomial> find_independent_polynomial(const BivariateProblem& prob, unsigned level,
                                                                 const Rational& delta = Rational(99, 100),
                                                                 LatticeStats* stats = nullptr);

// Roots from a single lattice over the whole box, without splitting; empty
// optional when the lattice yields no usable polynomial.
std::optional<std::vector<RootSolution>> solve_single_lattice(const BivariateProblem& prob, unsigned level,
                                                              const Rational& delta = Rational(99, 100),
                                                              LatticeStats* stats = nullptr);

// All roots with |x| <= X, |y| <= Y and positive factors.
SolveReport solve_bivariate(const BivariateProblem& prob, const SolverOptions& opts = {});

// p = low_bits (mod 2^k), p < q < 2p.
SolveReport solve_lsb_known(const Integer& N, const Integer& low_bits, unsigned k, const SolverOptions& opts = {});

// Number of leading bits of p treated as known: ceil(bitlen(N) / 4).
unsigned known_quarter_bits(const Integer& N);
// 2^(ceil(b/2) - ceil(b/4)) for b = bitlen(N): the unknown low part of p.
Integer msb_default_bound(const Integer& N);

// The narrowed box for p within X of P0 as one recentred problem; empty when
// no q >= 1 fits.
std::optional<BivariateProblem> msb_top_problem(const Integer& N, const Integer& P0, const Integer& X);

// p within X of P0; Q0 = floor(N / P0).
SolveReport solve_msb_known(const Integer& N, const Integer& P0, const std::optional<Integer>& X = std::nullopt,
                            const SolverOptions& opts = {});

// Factors p = c (mod m), q = d (mod n), gcd(m, n) = 1, balanced
// (p < q < 2p or q < p < 2q).
SolveReport solve_coprime_moduli(const Integer& N, const Integer& m, const Integer& n, const Integer& c,
                                 const Integer& d, const SolverOptions& opts = {});

struct TrivariateProblem {
  Integer N;
  Integer P0;
  Integer M;
  Integer a_lo{0};
  Integer a_hi{0};
  Integer z_lo;
  Integer z_hi;
  Integer X;
  Integer Y;
};

// Longest z range accepted: bitlen(N)^2.
Integer trivariate_z_cap(const Integer& N);

// Tries Q0 = M z0 - a for ascending z0, then ascending a; the first pair whose
// bivariate problem has a root wins.
SolveReport solve_trivariate(const TrivariateProblem& prob, const SolverOptions& opts = {});

struct ResidueDivisorOutcome {
  std::optional<Factorization> factors;
  std::optional<ResiduePair> pair;  // absent when gcd(N, m) exposed the factor
  LatticeStats stats;
};

// Tries every divisor pair (c, d) of N mod m and N mod m + m as p = m x + c,
// q = m y + d with p < q < 2p.
ResidueDivisorOutcome factor_by_residue_divisors(const Integer& N, const Integer& m, const SolverOptions& opts = {});

}  // namespace factorlab
