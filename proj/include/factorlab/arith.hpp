#pragma once

// Exact integer primitives shared by every other module. Integers are GMP
// values; a Nat is an Integer that callers keep nonnegative.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace factorlab {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  Integer prime;
  unsigned multiplicity = 0;

  bool operator==(const PrimePower& other) const { return prime == other.prime && multiplicity == other.multiplicity; }
};

// n = (prod prime^multiplicity) * cofactor. `cofactor` is 1 for a complete
// factorization; otherwise it is the part trial division could not resolve
// (prime or composite, unknown).
struct Factorization {
  Integer n;
  std::vector<PrimePower> parts;
  Integer cofactor{1};

  bool complete() const { return cofactor == 1; }
  Integer product() const;
  std::string to_string() const;
};

// Builds the two-part factorization n = p * q without testing primality of
// the parts. Equal parts are merged.
Factorization make_split(const Integer& p, const Integer& q);

Integer isqrt(const Integer& n);
// Largest r with r^k <= n.
Integer iroot(const Integer& n, unsigned long k);
// r with r*r == n, if n is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);
inline bool is_perfect_square(const Integer& n) { return exact_sqrt(n).has_value(); }

// Miller-Rabin. Deterministic below 2^64 (first twelve prime bases);
// above that the same test with additional bases is probabilistic.
bool is_probable_prime(const Integer& n);
// Smallest probable prime >= n.
Integer next_prime(const Integer& n);

// All y in [0, m) with y^2 = a (mod m), ascending. Tonelli-Shanks.
std::vector<Integer> mod_sqrt(const Integer& a, const Integer& m);

Integer divisor_count(const Integer& n);

Factorization trial_factor(const Integer& n, const Integer& bound);

Integer gcd(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;
  Integer s;
  Integer t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Inverse of a modulo m in [0, m); empty when gcd(a, m) != 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
// Nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

std::size_t bit_length(const Integer& n);

Integer pow(const Integer& base, unsigned long exponent);

Integer parse_integer(const std::string& text);
// Parses "a/b", "a", or a plain decimal such as "0.707" exactly.
Rational parse_rational(const std::string& text);

}  // namespace factorlab
