#include "factorlab/arith.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cctype>
#include <sstream>

#include "factorlab/error.hpp"

namespace factorlab {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::non_prime_modulus: return "NonPrimeModulus";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::gcd_factor_found: return "GcdFactorFound";
    case Errc::dependent_basis: return "DependentBasis";
    case Errc::dimension_too_large: return "DimensionTooLarge";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::zero_degree: return "ZeroDegree";
    case Errc::not_monic: return "NotMonic";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::non_invertible_residue: return "NonInvertibleResidue";
    case Errc::no_independent_polynomial: return "NoIndependentPolynomial";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {

// Quadratic residues modulo 64 and 63, as bit masks.
struct SquareFilter {
  std::bitset<64> mod64;
  std::bitset<63> mod63;

  SquareFilter() {
    for (unsigned i = 0; i < 64; ++i) mod64.set((i * i) % 64);
    for (unsigned i = 0; i < 63; ++i) mod63.set((i * i) % 63);
  }
};

const SquareFilter& square_filter() {
  static const SquareFilter filter;
  return filter;
}

constexpr std::array<unsigned, 12> kDeterministicBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned, 8> kExtraBases = {41, 43, 47, 53, 59, 61, 67, 71};

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, const Integer& base) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_one = n - 1;
  if (x == 1 || x == n_minus_one) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_one) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Integer Factorization::product() const {
  Integer result = cofactor;
  for (const auto& part : parts) result *= pow(part.prime, part.multiplicity);
  return result;
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& part : parts) {
    if (!first) out << " * ";
    first = false;
    out << part.prime.get_str();
    if (part.multiplicity > 1) out << '^' << part.multiplicity;
  }
  if (cofactor != 1) {
    if (!first) out << " * ";
    out << '[' << cofactor.get_str() << ']';
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

Factorization make_split(const Integer& p, const Integer& q) {
  Factorization f;
  f.n = p * q;
  const Integer& lo = p < q ? p : q;
  const Integer& hi = p < q ? q : p;
  if (lo == hi) {
    f.parts.push_back({lo, 2});
  } else {
    if (lo != 1) f.parts.push_back({lo, 1});
    f.parts.push_back({hi, 1});
  }
  return f;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(Errc::precondition_violated, "isqrt of negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer iroot(const Integer& n, unsigned long k) {
  if (n < 0 || k == 0) throw Error(Errc::precondition_violated, "iroot needs n >= 0 and k >= 1");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  const auto& filter = square_filter();
  if (!filter.mod64.test(mpz_fdiv_ui(n.get_mpz_t(), 64))) return std::nullopt;
  if (!filter.mod63.test(mpz_fdiv_ui(n.get_mpz_t(), 63))) return std::nullopt;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned p : kDeterministicBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned base : kDeterministicBases) {
    if (!miller_rabin_round(n, d, s, Integer(base))) return false;
  }
  if (bit_length(n) <= 64) return true;
  for (unsigned base : kExtraBases) {
    if (!miller_rabin_round(n, d, s, Integer(base))) return false;
  }
  return true;
}

Integer next_prime(const Integer& n) {
  if (n <= 2) return 2;
  Integer c = n;
  if (mpz_even_p(c.get_mpz_t())) ++c;
  while (!is_probable_prime(c)) c += 2;
  return c;
}

std::vector<Integer> mod_sqrt(const Integer& a, const Integer& m) {
  if (!is_probable_prime(m)) throw Error(Errc::non_prime_modulus, "modulus " + m.get_str() + " is not prime");
  const Integer r = mod(a, m);
  if (r == 0) return {Integer(0)};
  if (m == 2) return {r};

  const Integer half = (m - 1) / 2;
  Integer euler;
  mpz_powm(euler.get_mpz_t(), r.get_mpz_t(), half.get_mpz_t(), m.get_mpz_t());
  if (euler != 1) return {};

  // m - 1 = q * 2^s with q odd.
  Integer q = m - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

  Integer z = 2;
  for (;;) {
    mpz_powm(euler.get_mpz_t(), z.get_mpz_t(), half.get_mpz_t(), m.get_mpz_t());
    if (euler == m - 1) break;
    ++z;
  }

  Integer c, t, root;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
  mpz_powm(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
  const Integer q_half = (q + 1) / 2;
  mpz_powm(root.get_mpz_t(), r.get_mpz_t(), q_half.get_mpz_t(), m.get_mpz_t());
  unsigned long order = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer probe = t;
    while (probe != 1) {
      probe = (probe * probe) % m;
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + 1 < order - i; ++j) b = (b * b) % m;
    order = i;
    c = (b * b) % m;
    t = (t * c) % m;
    root = (root * b) % m;
  }

  Integer other = m - root;
  if (other == root) return {root};
  if (other < root) std::swap(other, root);
  return {root, other};
}

Integer divisor_count(const Integer& n) {
  if (n < 1) throw Error(Errc::precondition_violated, "divisor_count needs n >= 1");
  if (n == 1) return 1;
  const Factorization f = trial_factor(n, isqrt(n) + 1);
  Integer count = 1;
  for (const auto& part : f.parts) count *= part.multiplicity + 1;
  if (!f.complete()) count *= 2;
  return count;
}

Factorization trial_factor(const Integer& n, const Integer& bound) {
  if (n < 2) throw Error(Errc::precondition_violated, "trial_factor needs n >= 2");
  Factorization f;
  f.n = n;
  Integer rest = n;

  auto strip = [&](const Integer& d) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
      ++e;
    }
    if (e > 0) f.parts.push_back({d, e});
  };

  Integer d = 2;
  bool rest_is_prime = false;
  while (d <= bound && rest > 1) {
    if (d * d > rest) {
      rest_is_prime = true;
      break;
    }
    strip(d);
    d += (d == 2) ? 1 : 2;
  }
  if (rest > 1) {
    if (rest_is_prime && rest <= bound) {
      f.parts.push_back({rest, 1});
    } else {
      f.cofactor = rest;
    }
  }
  return f;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  if (m <= 0) throw Error(Errc::precondition_violated, "modulus must be positive");
  if (m == 1) return Integer(0);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return inv;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(Errc::precondition_violated, "division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(Errc::precondition_violated, "division by zero");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod(const Integer& a, const Integer& m) {
  if (m <= 0) throw Error(Errc::precondition_violated, "modulus must be positive");
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer parse_integer(const std::string& text) {
  std::string trimmed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
  }
  Integer value;
  if (trimmed.empty() || value.set_str(trimmed, 10) != 0) {
    throw Error(Errc::parse_error, "not an integer: '" + text + "'");
  }
  return value;
}

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::parse_error, "bad decimal '" + text + "'");
    }
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    Integer num = parse_integer(whole + frac);
    if (negative) num = -num;
    Rational r(num, pow(Integer(10), frac.size()));
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text));
}

}  // namespace factorlab
