#include "factorlab/residue.hpp"

#include <algorithm>
#include <cstdint>

#include "factorlab/error.hpp"

namespace factorlab {

namespace {

void require_coprime(const Integer& n, const Integer& m) {
  if (m < 2) throw Error(Errc::precondition_violated, "modulus must be >= 2");
  const Integer g = gcd(n, m);
  if (g > 1) throw GcdFactorFound(g);
}

void canonicalize(std::vector<ResiduePair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

}  // namespace

bool ResidueClassSet::contains(const Integer& c, const Integer& d) const {
  const ResiduePair key{c < d ? c : d, c < d ? d : c, m};
  return std::binary_search(pairs.begin(), pairs.end(), key);
}

ResidueClassSet enumerate_pairs(const Integer& n, const Integer& m) {
  require_coprime(n, m);
  ResidueClassSet set{n, m, {}};
  const Integer r = mod(n, m);
  for (Integer c = 1; c < m; ++c) {
    const auto inv = mod_inverse(c, m);
    if (!inv) continue;
    const Integer d = mod(r * *inv, m);
    if (c <= d) set.pairs.push_back({c, d, m});
  }
  canonicalize(set.pairs);
  return set;
}

ResidueClassSet probable_residue_pairs(const Integer& n, const Integer& m) {
  if (!is_probable_prime(m)) throw Error(Errc::non_prime_modulus, "modulus " + m.get_str() + " is not prime");
  require_coprime(n, m);

  ResidueClassSet set{n, m, {}};
  auto record = [&](const Integer& x, const Integer& y) {
    // x^2 - 4cd = y^2 forces x = y (mod 2).
    const Integer c = (x + y) / 2;
    const Integer d = (x - y) / 2;
    if (d > 0 && c < m) set.pairs.push_back({d, c, m});
  };

  // The search visits O(m^2) points; past 2^30 it could not finish anyway, and
  // below it x < 2m keeps x^2 under 2^62.
  if (m >= (Integer(1) << 30)) throw Error(Errc::precondition_violated, "modulus must be below 2^30");
  const std::int64_t mm = m.get_si();
  for (std::int64_t cd = mod(n, m).get_si(); cd < mm * mm; cd += mm) {
    std::int64_t x = isqrt(Integer(static_cast<long>(4 * cd))).get_si();
    if (x * x < 4 * cd) ++x;
    std::int64_t y = 0;
    for (; x < 2 * mm; ++x) {
      const std::int64_t target = x * x - 4 * cd;
      while ((y + 1) * (y + 1) <= target) ++y;
      if (y * y == target) record(Integer(static_cast<long>(x)), Integer(static_cast<long>(y)));
    }
  }
  canonicalize(set.pairs);
  return set;
}

Integer landry_pepin_t_bound(const Integer& n, const Integer& m, const Integer& mod_n, const Integer& c,
                             const Integer& d) {
  Integer beta_scale = std::max<Integer>(std::max<Integer>(abs(c), abs(d)), 1);
  return ceil_div(3 * (isqrt(n) + 1) * beta_scale, m * mod_n);
}

std::optional<LandryPepinHit> landry_pepin(const Integer& n, const Integer& m, const Integer& mod_n,
                                           const Integer& c, const Integer& d, const Integer& t_bound) {
  if (m < 1 || mod_n < 1 || n < 2) throw Error(Errc::precondition_violated, "moduli must be positive");
  if (gcd(c, m) != 1 || gcd(d, mod_n) != 1) {
    throw Error(Errc::precondition_violated, "requires gcd(c, m) = gcd(d, n) = 1");
  }
  if (d == 0) throw Error(Errc::precondition_violated, "d must be nonzero");

  const Integer mn = m * mod_n;
  const Integer z0 = mod(n + c * d, mn);
  const Integer four_cdn = 4 * c * d * n;

  // The roots (z +/- s) / 2d of d X^2 - z X +/- c N are p and c q / d, so
  // the numerators are 2 d p and 2 c q and their gcd with N exposes the split.
  auto try_root = [&](const Integer& numerator) -> std::optional<Factorization> {
    const Integer g = gcd(numerator, n);
    if (g <= 1 || g >= n) return std::nullopt;
    return make_split(g, n / g);
  };

  for (Integer t = 0; t <= t_bound; ++t) {
    const Integer magnitude = z0 + mn * t;
    for (const Integer& z : {magnitude, Integer(-magnitude)}) {
      for (const Integer& disc : {Integer(z * z - four_cdn), Integer(z * z + four_cdn)}) {
        const auto s = exact_sqrt(disc);
        if (!s) continue;
        for (const Integer& num : {Integer(z + *s), Integer(z - *s)}) {
          if (auto f = try_root(num)) return LandryPepinHit{std::move(*f), t, z, disc};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<ResiduePair> residue_divisor_pairs(const Integer& n, const Integer& m) {
  require_coprime(n, m);
  std::vector<ResiduePair> pairs;
  const Integer r = mod(n, m);
  for (const Integer& cd : {r, Integer(r + m)}) {
    for (Integer c = 1; c * c <= cd; ++c) {
      if (!mpz_divisible_p(cd.get_mpz_t(), c.get_mpz_t())) continue;
      const Integer d = cd / c;
      pairs.push_back({c, d, m});
      if (c != d) pairs.push_back({d, c, m});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const ResiduePair& lhs, const ResiduePair& rhs) {
    const Integer a = lhs.c * lhs.d;
    const Integer b = rhs.c * rhs.d;
    return a != b ? a < b : lhs.c < rhs.c;
  });
  return pairs;
}

}  // namespace factorlab
