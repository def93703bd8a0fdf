#include "factorlab/lattice.hpp"

#include <array>
#include <utility>

#include "factorlab/error.hpp"

namespace factorlab {

Basis::Basis(IntMatrix rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) {
      throw Error(Errc::precondition_violated, "basis must be square");
    }
  }
}

Basis Basis::identity(std::size_t n) {
  IntMatrix rows(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return Basis(std::move(rows));
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Integer norm_sq(const IntVector& v) { return dot(v, v); }

GramSchmidtData gram_schmidt(const Basis& b) {
  const std::size_t n = b.dim();
  GramSchmidtData gs;
  gs.ortho.resize(n);
  gs.mu.assign(n, RatVector(n, 0));
  gs.norms_sq.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector v(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Rational inner = 0;
      for (std::size_t k = 0; k < n; ++k) inner += Rational(b[i][k]) * gs.ortho[j][k];
      gs.mu[i][j] = inner / gs.norms_sq[j];
      for (std::size_t k = 0; k < n; ++k) v[k] -= gs.mu[i][j] * gs.ortho[j][k];
    }
    Rational norm = 0;
    for (const auto& x : v) norm += x * x;
    if (norm == 0) throw Error(Errc::dependent_basis, "Gram-Schmidt vector " + std::to_string(i) + " vanishes");
    gs.ortho[i] = std::move(v);
    gs.norms_sq[i] = norm;
  }
  return gs;
}

Integer signed_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer determinant(const Basis& b) {
  Integer det = abs(signed_determinant(b.rows()));
  if (det == 0) throw Error(Errc::dependent_basis, "determinant is zero");
  return det;
}

namespace {

// Integral LLL state, 1-based as in the textbook formulation: b[1..n],
// d[0..n] with d[0] = 1, lambda[i][j] = d[j] * mu[i][j].
class IntegralLll {
 public:
  IntegralLll(const Basis& input, const Rational& delta)
      : n_(input.dim()),
        delta_num_(delta.get_num()),
        delta_den_(delta.get_den()),
        b_(n_ + 1),
        h_(n_ + 1),
        d_(n_ + 1, 0),
        lambda_(n_ + 1, IntVector(n_ + 1, 0)) {
    for (std::size_t i = 1; i <= n_; ++i) {
      b_[i] = input[i - 1];
      h_[i].assign(n_, 0);
      h_[i][i - 1] = 1;
    }
  }

  LllResult run() {
    LllResult result;
    if (n_ == 0) return result;
    d_[0] = 1;
    d_[1] = norm_sq(b_[1]);
    if (d_[1] == 0) throw Error(Errc::dependent_basis, "first basis vector is zero");

    std::size_t k = 2;
    std::size_t k_max = 1;
    while (k <= n_) {
      if (k > k_max) {
        k_max = k;
        incremental_gram_schmidt(k);
      }
      for (;;) {
        reduce(k, k - 1);
        const Integer& lam = lambda_[k][k - 1];
        const Integer lhs = delta_den_ * (d_[k] * d_[k - 2] + lam * lam);
        const Integer rhs = delta_num_ * d_[k - 1] * d_[k - 1];
        if (lhs < rhs) {
          swap(k, k_max);
          ++result.swaps;
          k = std::max<std::size_t>(2, k - 1);
          continue;
        }
        for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
        ++k;
        break;
      }
    }

    IntMatrix rows(b_.begin() + 1, b_.end());
    result.reduced = Basis(std::move(rows));
    result.transform.assign(h_.begin() + 1, h_.end());
    return result;
  }

 private:
  void incremental_gram_schmidt(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      Integer u = dot(b_[k], b_[j]);
      for (std::size_t i = 1; i < j; ++i) {
        Integer t = d_[i] * u - lambda_[k][i] * lambda_[j][i];
        mpz_divexact(u.get_mpz_t(), t.get_mpz_t(), d_[i - 1].get_mpz_t());
      }
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        d_[k] = u;
        if (d_[k] == 0) throw Error(Errc::dependent_basis, "basis vectors are linearly dependent");
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    Integer& lam = lambda_[k][l];
    if (2 * abs(lam) <= d_[l]) return;
    const Integer q = floor_div(2 * lam + d_[l], 2 * d_[l]);
    for (std::size_t c = 0; c < n_; ++c) {
      b_[k][c] -= q * b_[l][c];
      h_[k][c] -= q * h_[l][c];
    }
    lam -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t k_max) {
    std::swap(b_[k], b_[k - 1]);
    std::swap(h_[k], h_[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const Integer lam = lambda_[k][k - 1];
    Integer big_b = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(big_b.get_mpz_t(), big_b.get_mpz_t(), d_[k - 1].get_mpz_t());
    for (std::size_t i = k + 1; i <= k_max; ++i) {
      const Integer t = lambda_[i][k];
      Integer a = d_[k] * lambda_[i][k - 1] - lam * t;
      mpz_divexact(lambda_[i][k].get_mpz_t(), a.get_mpz_t(), d_[k - 1].get_mpz_t());
      Integer c = big_b * t + lam * lambda_[i][k];
      mpz_divexact(lambda_[i][k - 1].get_mpz_t(), c.get_mpz_t(), d_[k].get_mpz_t());
    }
    d_[k - 1] = big_b;
  }

  std::size_t n_;
  Integer delta_num_;
  Integer delta_den_;
  std::vector<IntVector> b_;
  std::vector<IntVector> h_;
  IntVector d_;
  std::vector<IntVector> lambda_;
};

}  // namespace

LllResult lll_reduce_with_transform(const Basis& b, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta > 1) {
    throw Error(Errc::precondition_violated, "LLL delta must lie in (1/4, 1]");
  }
  return IntegralLll(b, delta).run();
}

Basis lll_reduce(const Basis& b, const Rational& delta) { return lll_reduce_with_transform(b, delta).reduced; }

bool is_lll_reduced(const Basis& b, const Rational& delta) {
  const GramSchmidtData gs = gram_schmidt(b);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(gs.mu[i][j]) > half) return false;
    }
    if (i > 0) {
      const Rational& mu = gs.mu[i][i - 1];
      if (gs.norms_sq[i] < (delta - mu * mu) * gs.norms_sq[i - 1]) return false;
    }
  }
  return true;
}

bool hadamard_check(const Basis& b) {
  const Integer det = determinant(b);
  Integer product = 1;
  for (const auto& row : b.rows()) product *= norm_sq(row);
  return det * det <= product;
}

IntVector shortest_vector_exhaustive(const Basis& b, const Integer& coeff_bound) {
  const std::size_t n = b.dim();
  if (n > 5) throw Error(Errc::dimension_too_large, "exhaustive search is limited to n <= 5");
  if (n == 0 || coeff_bound < 1) throw Error(Errc::precondition_violated, "need n >= 1 and coeff_bound >= 1");
  const long bound = coeff_bound.get_si();

  std::vector<long> coeffs(n, -bound);
  IntVector best;
  Integer best_norm = -1;
  for (;;) {
    bool nonzero = false;
    IntVector v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs[i] == 0) continue;
      nonzero = true;
      for (std::size_t k = 0; k < n; ++k) v[k] += coeffs[i] * b[i][k];
    }
    if (nonzero) {
      // v and -v are both candidates; keep the one whose first nonzero entry
      // is positive.
      for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0) {
          for (auto& y : v) y = -y;
        }
        break;
      }
      const Integer len = norm_sq(v);
      if (len != 0 && (best_norm < 0 || len < best_norm || (len == best_norm && v < best))) {
        best_norm = len;
        best = v;
      }
    }
    std::size_t i = 0;
    while (i < n && coeffs[i] == bound) coeffs[i++] = -bound;
    if (i == n) break;
    ++coeffs[i];
  }
  if (best_norm < 0) throw Error(Errc::dependent_basis, "no nonzero lattice vector found");
  return best;
}

Rational hermite_constant_power(std::size_t n) {
  static const std::array<Rational, 8> table = {Rational(1),  Rational(4, 3), Rational(2),  Rational(4),
                                                Rational(8),  Rational(64, 3), Rational(64), Rational(256)};
  if (n == 0 || n > table.size()) {
    throw Error(Errc::dimension_too_large, "Hermite constants are tabulated for n = 1..8");
  }
  return table[n - 1];
}

Rational hermite_bound(const Basis& b) {
  const Rational gamma_power = hermite_constant_power(b.dim());
  const Integer det = determinant(b);
  return gamma_power * Rational(det * det);
}

}  // namespace factorlab
