#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace factorlab {

enum class Errc {
  precondition_violated,
  non_prime_modulus,
  not_a_divisor,
  gcd_factor_found,
  dependent_basis,
  dimension_too_large,
  zero_polynomial,
  zero_degree,
  not_monic,
  not_coprime,
  non_invertible_residue,
  no_independent_polynomial,
  parse_error,
};

const char* to_string(Errc code);

// Contract violations and unrecoverable inputs. Search outcomes such as
// "exhausted" are reported through return values, not through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// gcd(N, m) > 1 found while setting up a residue computation; the gcd is a
// divisor of N and is handed back to the caller.
class GcdFactorFound : public Error {
 public:
  explicit GcdFactorFound(const mpz_class& factor)
      : Error(Errc::gcd_factor_found, "gcd = " + factor.get_str()), factor_(factor) {}

  const mpz_class& factor() const noexcept { return factor_; }

 private:
  mpz_class factor_;
};

}  // namespace factorlab
