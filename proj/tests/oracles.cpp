#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

Integer smallest_factor(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

Rng::Rng(unsigned long seed) : state_(gmp_randinit_mt) { state_.seed(seed); }

Integer Rng::below(const Integer& bound) { return state_.get_z_range(bound); }

Integer Rng::range(const Integer& lo, const Integer& hi) { return lo + below(hi - lo + 1); }

Integer Rng::prime_bits(unsigned bits) {
  const Integer top = Integer(1) << (bits - 1);
  for (;;) {
    Integer p = factorlab::next_prime(top + below(top));
    if (factorlab::bit_length(p) == bits) return p;
  }
}

Semiprime balanced_semiprime(Rng& rng, unsigned bits) {
  for (;;) {
    Integer p = rng.prime_bits(bits / 2);
    Integer q = rng.prime_bits(bits - bits / 2);
    if (q < p) std::swap(p, q);
    if (p == q || q >= 2 * p) continue;
    return {p * q, p, q};
  }
}

std::vector<factorlab::ResiduePair> residue_pairs_exhaustive(const Integer& n, const Integer& m) {
  std::vector<factorlab::ResiduePair> out;
  const Integer target = ((n % m) + m) % m;
  for (Integer c = 0; c < m; ++c) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (g != 1) continue;
    for (Integer d = c; d < m; ++d) {
      if ((c * d) % m == target) out.push_back({c, d, m});
    }
  }
  return out;
}

std::vector<std::pair<Integer, Integer>> box_roots(const factorlab::BivariateProblem& prob) {
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer x = -prob.X; x <= prob.X; ++x) {
    const Integer p = prob.m * x + prob.P0;
    if (p < 1 || prob.N % p != 0) continue;
    const Integer diff = prob.N / p - prob.Q0;
    if (diff % prob.n != 0) continue;
    const Integer y = diff / prob.n;
    if (abs(y) <= prob.Y) out.emplace_back(x, y);
  }
  return out;
}

std::vector<std::pair<Integer, Integer>> top_bits_roots(const Integer& n, const Integer& p0, const Integer& X) {
  std::vector<std::pair<Integer, Integer>> out;
  const Integer q0 = n / p0;
  for (Integer x = -X; x <= X; ++x) {
    const Integer p = p0 + x;
    if (p >= 1 && n % p == 0) out.emplace_back(x, n / p - q0);
  }
  return out;
}

std::vector<std::pair<Integer, Integer>> low_bits_roots(const Integer& n, const Integer& low, unsigned k) {
  std::vector<std::pair<Integer, Integer>> out;
  const Integer mod = Integer(1) << k;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), low.get_mpz_t(), mod.get_mpz_t());
  const Integer high = (n * inv) % mod;
  Integer hi;
  mpz_sqrt(hi.get_mpz_t(), n.get_mpz_t());
  Integer lo;
  mpz_sqrt(lo.get_mpz_t(), Integer(n / 2).get_mpz_t());
  while (2 * lo * lo < n) ++lo;
  if (lo < 2) lo = 2;
  // first p = low (mod 2^k) with p >= lo
  Integer p = low;
  if (p < lo) p += ((lo - p + mod - 1) / mod) * mod;
  for (; p <= hi; p += mod) {
    if (n % p == 0) out.emplace_back((p - low) / mod, (n / p - high) / mod);
  }
  return out;
}

namespace {

std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& v : m[i]) out[i].emplace_back(v);
  }
  return out;
}

// Inverse by Gauss-Jordan; the matrix must be nonsingular.
std::vector<std::vector<Rational>> inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  auto a = to_rational(m);
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

Rational determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  auto a = to_rational(m);
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), IntVector(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Projection project(const IntMatrix& rows) {
  const std::size_t n = rows.size();
  auto v = to_rational(rows);
  std::vector<std::vector<Rational>> star;
  Projection out;
  out.mu.assign(n, std::vector<Rational>(n, 0));
  auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> w = v[i];
    for (std::size_t j = 0; j < i; ++j) {
      out.mu[i][j] = dot(v[i], star[j]) / out.norms_sq[j];
      for (std::size_t t = 0; t < w.size(); ++t) w[t] -= out.mu[i][j] * star[j][t];
    }
    out.norms_sq.push_back(dot(w, w));
    star.push_back(std::move(w));
  }
  return out;
}

std::optional<Integer> shortest_norm_sq(const IntMatrix& rows, std::uint64_t limit) {
  const std::size_t n = rows.size();
  Integer best = -1;
  for (const auto& r : rows) {
    Integer s = 0;
    for (const auto& v : r) s += v * v;
    if (best < 0 || s < best) best = s;
  }
  const auto inv = inverse(rows);
  std::vector<Integer> bound(n);
  Rational combos = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational col = 0;
    for (std::size_t j = 0; j < n; ++j) col += inv[j][i] * inv[j][i];
    const Rational sq = col * best;
    const Integer fl = sq.get_num() / sq.get_den();
    mpz_sqrt(bound[i].get_mpz_t(), fl.get_mpz_t());
    combos *= 2 * bound[i] + 1;
    if (combos > limit) return std::nullopt;
  }

  std::vector<Integer> x(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; })) return;
      Integer s = 0;
      for (std::size_t col = 0; col < rows.front().size(); ++col) {
        Integer e = 0;
        for (std::size_t r = 0; r < n; ++r) e += x[r] * rows[r][col];
        s += e * e;
      }
      if (s < best) best = s;
      return;
    }
    for (Integer v = -bound[i]; v <= bound[i]; ++v) {
      x[i] = v;
      walk(i + 1);
    }
    x[i] = 0;
  };
  walk(0);
  return best;
}

std::vector<Integer> from_roots(const Integer& lead, const std::vector<Integer>& roots) {
  std::vector<Integer> c{lead};
  for (const auto& r : roots) {
    std::vector<Integer> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

Integer resultant_from_roots(const Integer& lead_f, const std::vector<Integer>& rf, const Integer& lead_g,
                             const std::vector<Integer>& rg) {
  Integer out = 1;
  for (std::size_t i = 0; i < rg.size(); ++i) out *= lead_f;
  for (std::size_t i = 0; i < rf.size(); ++i) out *= lead_g;
  for (const auto& a : rf) {
    for (const auto& b : rg) out *= a - b;
  }
  return out;
}

}  // namespace oracle
