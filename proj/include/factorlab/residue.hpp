#pragma once

// Residue classes of the factors: p = c (mod m), q = d (mod m).

#include <optional>
#include <vector>

#include "factorlab/arith.hpp"

namespace factorlab {

struct ResiduePair {
  Integer c;
  Integer d;
  Integer m;

  bool operator==(const ResiduePair& other) const { return c == other.c && d == other.d && m == other.m; }
  bool operator<(const ResiduePair& other) const {
    if (c != other.c) return c < other.c;
    if (d != other.d) return d < other.d;
    return m < other.m;
  }
};

// Pairs with c <= d, sorted and deduplicated.
struct ResidueClassSet {
  Integer n;
  Integer m;
  std::vector<ResiduePair> pairs;

  bool contains(const Integer& c, const Integer& d) const;
};

// Every (c, d), c <= d, with c*d = N (mod m) and gcd(c, m) = 1.
// Throws GcdFactorFound when gcd(N, m) > 1.
ResidueClassSet enumerate_pairs(const Integer& n, const Integer& m);

// Probable residue classes modulo a prime m from the integer solutions of
// x^2 - 4cd = y^2 with cd = (N mod m) + r1*m < m^2 and x < 2m. Requires m < 2^30.
ResidueClassSet probable_residue_pairs(const Integer& n, const Integer& m);

struct LandryPepinHit {
  Factorization factors;
  Integer t;
  Integer z;             // signed scaled sum d p + c q
  Integer discriminant;  // z^2 -/+ 4 c d N
};

// Scans z = +/-(z0 + m n t), z0 = (N + c d) mod (m n), t = 0..t_bound, for a
// square discriminant of d X^2 - z X +/- c N.
std::optional<LandryPepinHit> landry_pepin(const Integer& n, const Integer& m, const Integer& mod_n,
                                           const Integer& c, const Integer& d, const Integer& t_bound);

// ceil(3 sqrt(N) * max(c, d, 1) / (m n)): the scan length that covers
// |d p + c q| < 3 N^(1/2 + beta) with N^beta = max(c, d).
Integer landry_pepin_t_bound(const Integer& n, const Integer& m, const Integer& mod_n, const Integer& c,
                             const Integer& d);

// Ordered divisor pairs (c, d) of r = N mod m and of r + m.
std::vector<ResiduePair> residue_divisor_pairs(const Integer& n, const Integer& m);

}  // namespace factorlab
