#include "factorlab/fermat.hpp"

#include <stdexcept>

#include "factorlab/error.hpp"

namespace factorlab {

const char* to_string(FermatMethod method) {
  switch (method) {
    case FermatMethod::standard: return "standard";
    case FermatMethod::triangular: return "triangular";
    case FermatMethod::ratio: return "ratio";
  }
  return "unknown";
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::trivial_only: return "trivial_only";
    case SearchStatus::multiplier_collision: return "multiplier_collision";
  }
  return "unknown";
}

namespace {

void require_odd(const Integer& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t())) {
    throw Error(Errc::precondition_violated, "N must be odd and >= 3, got " + n.get_str());
  }
}

FermatResult checked_result(const Integer& n, Integer p, Integer q, std::uint64_t steps, FermatMethod method) {
  if (p > q) std::swap(p, q);
  FermatResult r{p + q, q - p, std::move(p), std::move(q), steps, method};
  if (r.x * r.x - r.y * r.y != 4 * n || r.p * r.q != n) {
    throw std::logic_error("difference-of-squares result does not reproduce N");
  }
  return r;
}

// Largest x = u + M/u with u a nontrivial divisor of M. Past it only the
// trivial representation x = M + 1 remains.
Integer nontrivial_limit(const Integer& m) {
  const unsigned smallest = mpz_even_p(m.get_mpz_t()) ? 2 : 3;
  return smallest + m / smallest;
}

// Walks x = ceil(2 sqrt M), +1, ... and hands every square x^2 - 4M = y^2 to
// `on_square`, which returns true to stop.
template <class OnSquare>
SearchStatus scan_squares(const Integer& m, std::uint64_t max_steps, std::uint64_t& steps, OnSquare on_square) {
  const Integer four_m = 4 * m;
  Integer x = isqrt(four_m);
  if (x * x < four_m) ++x;
  Integer residual = x * x - four_m;
  const Integer limit = nontrivial_limit(m);
  for (;;) {
    if (x > limit) return SearchStatus::trivial_only;
    if (steps == max_steps) return SearchStatus::exhausted;
    ++steps;
    if (auto y = exact_sqrt(residual)) {
      if (on_square(x, *y)) return SearchStatus::found;
    }
    residual += 2 * x + 1;
    ++x;
  }
}

}  // namespace

FermatOutcome fermat_standard(const Integer& n, SearchBudget budget) {
  require_odd(n);
  FermatOutcome out;
  out.status = scan_squares(n, budget.max_steps, out.steps, [&](const Integer& x, const Integer& y) {
    const Integer p = (x - y) / 2;
    if (p == 1) return false;
    out.result = checked_result(n, p, (x + y) / 2, out.steps, FermatMethod::standard);
    return true;
  });
  return out;
}

Integer predict_steps(const Integer& p, const Integer& n) {
  if (p <= 0 || !mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    throw Error(Errc::not_a_divisor, p.get_str() + " does not divide " + n.get_str());
  }
  if (p > isqrt(n)) throw Error(Errc::precondition_violated, "p must not exceed isqrt(N)");
  Integer steps = p + n / p - isqrt(4 * n);
  return steps < 0 ? Integer(0) : steps;
}

std::vector<TriangularTerm> triangular_sequence(const Integer& n, std::size_t count) {
  std::vector<TriangularTerm> terms;
  terms.reserve(count);
  Integer k = iroot(16 * n, 4);
  Integer x = k * (k + 1) / 2;
  Integer x_squared = x * x;
  for (std::size_t i = 0; i < count; ++i) {
    terms.push_back({k, x, x_squared});
    ++k;
    x += k;
    x_squared += k * k * k;
  }
  return terms;
}

FermatOutcome fermat_triangular(const Integer& n, std::optional<SearchBudget> budget) {
  require_odd(n);
  const std::uint64_t max_steps = budget ? budget->max_steps : std::numeric_limits<std::uint64_t>::max();
  const Integer four_n = 4 * n;
  const Integer end = (n + 4) / 2;

  FermatOutcome out;
  Integer k = iroot(16 * n, 4);
  Integer x = k * (k + 1) / 2;
  Integer x_squared = x * x;
  for (;;) {
    if (x > end || out.steps == max_steps) {
      out.status = SearchStatus::exhausted;
      return out;
    }
    ++out.steps;
    if (x_squared >= four_n) {
      if (auto y = exact_sqrt(x_squared - four_n)) {
        const Integer p = (x - *y) / 2;
        if (p == 1) {
          out.status = SearchStatus::trivial_only;
          return out;
        }
        out.result = checked_result(n, p, (x + *y) / 2, out.steps, FermatMethod::triangular);
        out.status = SearchStatus::found;
        return out;
      }
    }
    ++k;
    x += k;
    x_squared += k * k * k;
  }
}

std::vector<RatioGridEntry> ratio_grid(const Rational& lower, const Rational& upper, std::size_t count) {
  if (lower <= 0 || upper <= lower || count == 0) {
    throw Error(Errc::precondition_violated, "ratio_grid needs 0 < lower < upper and count >= 1");
  }
  std::vector<RatioGridEntry> grid;
  grid.reserve(count);
  const Rational step = (upper - lower) / Rational(static_cast<unsigned long>(count));
  for (std::size_t i = 0; i < count; ++i) {
    Rational r = lower + step * Rational(static_cast<unsigned long>(i));
    r.canonicalize();
    Rational s = 1 / r;
    s.canonicalize();
    grid.push_back({i, r, s});
  }
  return grid;
}

std::string to_fixed(const Rational& value, unsigned places) {
  const bool negative = value < 0;
  const Integer scale = pow(Integer(10), places);
  const Integer num = abs(value.get_num()) * scale;
  const Integer& den = value.get_den();
  Integer q = num / den;
  const Integer twice_rem = 2 * (num - q * den);
  if (twice_rem > den || (twice_rem == den && mpz_odd_p(q.get_mpz_t()))) ++q;

  std::string digits = q.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string text = digits.substr(0, digits.size() - places);
  if (places > 0) text += "." + digits.substr(digits.size() - places);
  if (negative && q != 0) text.insert(0, "-");
  return text;
}

std::string to_fixed_trimmed(const Rational& value, unsigned places) {
  std::string text = to_fixed(value, places);
  if (text.find('.') == std::string::npos) return text;
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return text;
}

FermatOutcome fermat_ratio(const Integer& n, const Rational& r, SearchBudget budget) {
  if (n < 3 || mpz_even_p(n.get_mpz_t())) {
    throw Error(Errc::precondition_violated, "N must be odd and >= 3, got " + n.get_str());
  }
  const Integer& a = r.get_num();
  const Integer& b = r.get_den();
  if (r < 1 || a > 10000 || b > 10000) {
    throw Error(Errc::precondition_violated, "ratio must be a/b >= 1 with a, b <= 10^4");
  }

  // q ~ (a/b) p makes a*p and b*q the near-balanced divisor pair of a*b*N.
  const Integer m = a * b * n;
  bool collided = false;
  FermatOutcome out;
  out.status = scan_squares(m, budget.max_steps, out.steps, [&](const Integer& x, const Integer& y) {
    for (const Integer& part : {Integer((x - y) / 2), Integer((x + y) / 2)}) {
      const Integer g = gcd(part, n);
      if (g > 1 && g < n) {
        out.result = checked_result(n, g, n / g, out.steps, FermatMethod::ratio);
        return true;
      }
    }
    collided = true;
    return false;
  });
  if (out.status == SearchStatus::exhausted && collided) out.status = SearchStatus::multiplier_collision;
  return out;
}

RatioBounds ratio_bounds_check(const Integer& p, const Integer& q, const Integer& n) {
  if (p <= 0 || p * q != n) throw Error(Errc::precondition_violated, "p * q must equal N");
  if (q < p || q > 2 * p) throw Error(Errc::precondition_violated, "requires p <= q <= 2p");

  const Integer sum = p + q;
  const Integer diff = q - p;
  RatioBounds b;
  b.factor_range = 2 * p * p >= n && p * p <= n && q * q >= n && q * q <= 2 * n;
  b.sum_range = sum * sum >= 4 * n && 2 * sum * sum <= 9 * n;
  b.difference_range = diff >= 0 && 2 * diff * diff <= n;
  return b;
}

}  // namespace factorlab
