#include "factorlab/coppersmith.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "factorlab/error.hpp"
#include "factorlab/lattice.hpp"

namespace factorlab {

namespace {

constexpr std::size_t kX = 0;
constexpr std::size_t kY = 1;

double log2_of(const Integer& v) {
  if (v <= 0) return 0.0;
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

void require_positive_bounds(const BivariateProblem& prob) {
  if (prob.X < 1 || prob.Y < 1) throw Error(Errc::precondition_violated, "bounds X, Y must be >= 1");
  if (prob.m < 1 || prob.n < 1) throw Error(Errc::precondition_violated, "moduli m, n must be >= 1");
  if (prob.N < 1) throw Error(Errc::precondition_violated, "N must be positive");
}

MultiPoly primitive_factoring_polynomial(const BivariateProblem& prob) {
  const MultiPoly f = factoring_polynomial(prob);
  return f.divide_exact(f.content());
}

Integer height_scaled(const MultiPoly& f, const Integer& X, const Integer& Y) {
  return norms(scale_vars(f, {X, Y})).height;
}

// p = m x + P0, q = n y + Q0 with p q = N.
class Family {
 public:
  Family(Integer N, Integer m, Integer n, Integer P0, Integer Q0)
      : N_(std::move(N)), m_(std::move(m)), n_(std::move(n)), P0_(std::move(P0)), Q0_(std::move(Q0)) {}

  const Integer& N() const { return N_; }
  const Integer& m() const { return m_; }
  const Integer& n() const { return n_; }
  const Integer& P0() const { return P0_; }
  const Integer& Q0() const { return Q0_; }

  Integer p_at(const Integer& x) const { return m_ * x + P0_; }
  Integer q_at(const Integer& y) const { return n_ * y + Q0_; }

  std::optional<RootSolution> root_at_x(const Integer& x) const {
    const Integer p = p_at(x);
    if (p <= 0 || !mpz_divisible_p(N_.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    const Integer q = N_ / p;
    const Integer diff = q - Q0_;
    if (!mpz_divisible_p(diff.get_mpz_t(), n_.get_mpz_t())) return std::nullopt;
    return make_root(x, diff / n_);
  }

  std::optional<RootSolution> root_at_y(const Integer& y) const {
    const Integer q = q_at(y);
    if (q <= 0 || !mpz_divisible_p(N_.get_mpz_t(), q.get_mpz_t())) return std::nullopt;
    const Integer p = N_ / q;
    const Integer diff = p - P0_;
    if (!mpz_divisible_p(diff.get_mpz_t(), m_.get_mpz_t())) return std::nullopt;
    return make_root(diff / m_, y);
  }

  RootSolution make_root(const Integer& x, const Integer& y) const {
    RootSolution r{x, y, std::nullopt, p_at(x), q_at(y)};
    if (r.p * r.q != N_) throw std::logic_error("root does not factor N");
    return r;
  }

  BivariateProblem centered(const Integer& xc, const Integer& yc, const Integer& X, const Integer& Y) const {
    return BivariateProblem{N_, p_at(xc), q_at(yc), X, Y, m_, n_};
  }

 private:
  Integer N_, m_, n_, P0_, Q0_;
};

struct Box {
  Integer xl, xh, yl, yh;

  bool empty() const { return xl > xh || yl > yh; }
  Integer x_width() const { return xh - xl + 1; }
  Integer y_width() const { return yh - yl + 1; }
};

// Shrinks the box to the points that can carry a root with p, q >= 1, using
// that y decreases as x grows along p q = N.
bool narrow(const Family& fam, Box& b) {
  for (int round = 0; round < 2; ++round) {
    b.xl = std::max<Integer>(b.xl, ceil_div(1 - fam.P0(), fam.m()));
    b.yl = std::max<Integer>(b.yl, ceil_div(1 - fam.Q0(), fam.n()));
    if (b.empty()) return false;

    const Integer p_lo = fam.p_at(b.xl);
    const Integer p_hi = fam.p_at(b.xh);
    b.yh = std::min<Integer>(b.yh, floor_div(fam.N() - fam.Q0() * p_lo, fam.n() * p_lo));
    b.yl = std::max<Integer>(b.yl, ceil_div(fam.N() - fam.Q0() * p_hi, fam.n() * p_hi));
    if (b.empty()) return false;

    const Integer q_lo = fam.q_at(b.yl);
    const Integer q_hi = fam.q_at(b.yh);
    b.xh = std::min<Integer>(b.xh, floor_div(fam.N() - fam.P0() * q_lo, fam.m() * q_lo));
    b.xl = std::max<Integer>(b.xl, ceil_div(fam.N() - fam.P0() * q_hi, fam.m() * q_hi));
    if (b.empty()) return false;
  }
  return true;
}

// Bit-size estimate of whether the shortest reduced vector can beat the
// modulus at this level; LLL's practical factor is taken as 1.02^dim.
bool lattice_looks_feasible(const BivariateProblem& prob, unsigned level) {
  const MultiPoly f = primitive_factoring_polynomial(prob);
  const double lx = log2_of(prob.X);
  const double ly = log2_of(prob.Y);
  const double lw = log2_of(height_scaled(f, prob.X, prob.Y));
  const double ln = lw + level * (lx + ly);
  const unsigned side = level + 2;
  const double dim = static_cast<double>(side * side);
  double log_det = static_cast<double>((level + 1) * (level + 1)) * level * (lx + ly);
  for (unsigned i = 0; i < side; ++i) {
    for (unsigned j = 0; j < side; ++j) {
      if (i <= level && j <= level) continue;
      log_det += ln + i * lx + j * ly;
    }
  }
  return log_det / dim + 0.5 * std::log2(dim) + 0.03 * dim < ln + 1.0;
}

Integer reduce_symmetric(const Integer& v, const Integer& modulus) {
  Integer r = mod(v, modulus);
  if (2 * r > modulus) r -= modulus;
  return r;
}

}  // namespace

MultiPoly factoring_polynomial(const BivariateProblem& prob) {
  const MultiPoly x = MultiPoly::variable(2, kX);
  const MultiPoly y = MultiPoly::variable(2, kY);
  const MultiPoly p = prob.m * x + MultiPoly::constant(2, prob.P0);
  const MultiPoly q = prob.n * y + MultiPoly::constant(2, prob.Q0);
  return p * q - MultiPoly::constant(2, prob.N);
}

std::optional<RootSolution> SolveReport::nontrivial() const {
  for (const auto& r : roots) {
    if (!r.trivial()) return r;
  }
  return std::nullopt;
}

bool certified_regime(const BivariateProblem& prob) {
  require_positive_bounds(prob);
  const Integer w = height_scaled(primitive_factoring_polynomial(prob), prob.X, prob.Y);
  const Integer xy = prob.X * prob.Y;
  return xy * xy * xy <= w * w;
}

std::optional<IndependentPolynomial> find_independent_polynomial(const BivariateProblem& prob, unsigned level,
                                                                 const Rational& delta, LatticeStats* stats) {
  require_positive_bounds(prob);
  if (level < 1) throw Error(Errc::precondition_violated, "shift level must be >= 1");
  const MultiPoly f = primitive_factoring_polynomial(prob);
  const Integer p00 = f.coefficient({0, 0});
  if (p00 == 0) throw Error(Errc::precondition_violated, "f(0, 0) must be nonzero");

  const Integer& X = prob.X;
  const Integer& Y = prob.Y;
  const Integer w = height_scaled(f, X, Y);

  // Modulus n >= W (XY)^level, coprime to f(0, 0); q = f / f(0, 0) mod n has
  // constant term 1, which puts (XY)^level on the diagonal of its rows.
  Integer modulus = w * pow(X * Y, level);
  while (gcd(modulus, p00) != 1) ++modulus;
  const Integer inv = *mod_inverse(mod(p00, modulus), modulus);
  MultiPoly q(2);
  for (const auto& [e, c] : f.terms()) q.add_term(e, reduce_symmetric(c * inv, modulus));

  const unsigned side = level + 2;
  const std::size_t dim = side * side;
  auto column = [side](unsigned a, unsigned b) { return a * side + b; };
  std::vector<Integer> x_pow(side), y_pow(side);
  for (unsigned i = 0; i < side; ++i) {
    x_pow[i] = pow(X, i);
    y_pow[i] = pow(Y, i);
  }

  IntMatrix rows;
  rows.reserve(dim);
  for (unsigned i = 0; i < side; ++i) {
    for (unsigned j = 0; j < side; ++j) {
      IntVector row(dim, 0);
      if (i <= level && j <= level) {
        // x^i y^j X^(level-i) Y^(level-j) q(x, y), evaluated at (xX, yY).
        const Integer shift = x_pow[level - i] * y_pow[level - j];
        for (const auto& [e, c] : q.terms()) {
          const unsigned a = e[kX] + i;
          const unsigned b = e[kY] + j;
          row[column(a, b)] = c * shift * x_pow[a] * y_pow[b];
        }
      } else {
        row[column(i, j)] = modulus * x_pow[i] * y_pow[j];
      }
      rows.push_back(std::move(row));
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const Basis reduced = lll_reduce(Basis(std::move(rows)), delta);
  if (stats) {
    ++stats->lll_calls;
    stats->lll_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    stats->lattice_dim = std::max(stats->lattice_dim, dim);
  }

  for (std::size_t r = 0; r < dim; ++r) {
    MultiPoly h(2);
    for (unsigned a = 0; a < side; ++a) {
      for (unsigned b = 0; b < side; ++b) {
        const Integer& v = reduced[r][column(a, b)];
        if (v == 0) continue;
        Integer coeff;
        mpz_divexact(coeff.get_mpz_t(), v.get_mpz_t(), Integer(x_pow[a] * y_pow[b]).get_mpz_t());
        h.add_term({a, b}, coeff);
      }
    }
    if (h.is_zero() || !howgrave_predicate(h, modulus, {X, Y})) continue;
    MultiPoly res = h.degree(kY) == 0 ? h : resultant(f, h, kY);
    if (res.is_zero()) continue;
    const bool bound = multiple_bound_predicate(scale_vars(f, {X, Y}), scale_vars(h, {X, Y}), level + 1);
    return IndependentPolynomial{std::move(h), modulus, dim, std::move(res), bound};
  }
  return std::nullopt;
}

namespace {

std::optional<std::vector<RootSolution>> roots_from_lattice(const Family& fam, const BivariateProblem& prob,
                                                            unsigned level, const Rational& delta,
                                                            LatticeStats* stats) {
  const auto found = find_independent_polynomial(prob, level, delta, stats);
  if (!found) return std::nullopt;
  if (stats && found->multiple_bound_holds) ++stats->multiple_bound_hits;
  std::vector<RootSolution> roots;
  for (const Integer& x : integer_roots(found->resultant.univariate_coefficients(kX), -prob.X, prob.X)) {
    const auto root = fam.root_at_x(x);
    if (root && abs(root->y0) <= prob.Y) roots.push_back(*root);
  }
  return roots;
}

class BoxSolver {
 public:
  BoxSolver(const Family& fam, const SolverOptions& opts, LatticeStats& stats)
      : fam_(fam), opts_(opts), stats_(stats) {
    if (opts.base_level < 1 || opts.max_level < opts.base_level) {
      throw Error(Errc::precondition_violated, "need 1 <= base_level <= max_level");
    }
    if (opts.scan_width < 1) throw Error(Errc::precondition_violated, "scan_width must be >= 1");
  }

  void solve(Box box, unsigned depth, std::vector<RootSolution>& out) {
    if (!narrow(fam_, box)) return;
    ++stats_.boxes;
    if (box.x_width() <= opts_.scan_width || box.y_width() <= opts_.scan_width) {
      ++stats_.enumerated_boxes;
      scan(box, out);
      return;
    }

    Integer xc = floor_div(box.xl + box.xh, 2);
    Integer yc = floor_div(box.yl + box.yh, 2);
    if (fam_.p_at(xc) * fam_.q_at(yc) == fam_.N()) ++yc;  // keep f(0, 0) != 0 after recentring
    const Integer X = std::max<Integer>(box.xh - xc, xc - box.xl);
    const Integer Y = std::max<Integer>(box.yh - yc, yc - box.yl);
    const BivariateProblem local = fam_.centered(xc, yc, X, Y);
    const Family local_fam(fam_.N(), fam_.m(), fam_.n(), local.P0, local.Q0);

    // Higher levels cost far more than two halves at the base level, so they
    // are only tried after a base-level lattice that looked feasible failed.
    for (unsigned level = opts_.base_level; level <= opts_.max_level; ++level) {
      if (!lattice_looks_feasible(local, level)) {
        if (level == opts_.base_level) break;
        continue;
      }
      const auto roots = roots_from_lattice(local_fam, local, level, opts_.delta, &stats_);
      if (!roots) continue;
      ++stats_.lattice_boxes;
      stats_.max_level = std::max(stats_.max_level, level);
      for (const auto& r : *roots) {
        const Integer x = r.x0 + xc;
        const Integer y = r.y0 + yc;
        if (x < box.xl || x > box.xh || y < box.yl || y > box.yh) continue;
        out.push_back(fam_.make_root(x, y));
      }
      return;
    }

    if (depth >= opts_.max_split_depth) {
      throw Error(Errc::no_independent_polynomial, "no usable lattice polynomial within the split depth");
    }
    if (box.x_width() >= box.y_width()) {
      solve({box.xl, xc, box.yl, box.yh}, depth + 1, out);
      solve({xc + 1, box.xh, box.yl, box.yh}, depth + 1, out);
    } else {
      const Integer mid = floor_div(box.yl + box.yh, 2);
      solve({box.xl, box.xh, box.yl, mid}, depth + 1, out);
      solve({box.xl, box.xh, mid + 1, box.yh}, depth + 1, out);
    }
  }

 private:
  void scan(const Box& box, std::vector<RootSolution>& out) const {
    if (box.x_width() <= box.y_width()) {
      for (Integer x = box.xl; x <= box.xh; ++x) {
        const auto r = fam_.root_at_x(x);
        if (r && r->y0 >= box.yl && r->y0 <= box.yh) out.push_back(*r);
      }
    } else {
      for (Integer y = box.yl; y <= box.yh; ++y) {
        const auto r = fam_.root_at_y(y);
        if (r && r->x0 >= box.xl && r->x0 <= box.xh) out.push_back(*r);
      }
    }
  }

  const Family& fam_;
  const SolverOptions& opts_;
  LatticeStats& stats_;
};

void merge_stats(LatticeStats& into, const LatticeStats& from) {
  into.lattice_dim = std::max(into.lattice_dim, from.lattice_dim);
  into.boxes += from.boxes;
  into.lattice_boxes += from.lattice_boxes;
  into.enumerated_boxes += from.enumerated_boxes;
  into.lll_calls += from.lll_calls;
  into.lll_ms += from.lll_ms;
  into.max_level = std::max(into.max_level, from.max_level);
  into.multiple_bound_hits += from.multiple_bound_hits;
}

void sort_roots(std::vector<RootSolution>& roots) {
  std::sort(roots.begin(), roots.end(), [](const RootSolution& a, const RootSolution& b) {
    return a.x0 != b.x0 ? a.x0 < b.x0 : a.y0 < b.y0;
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

// Solves over an arbitrary box; `certified` is judged on the narrowed box
// recentred at its midpoint.
SolveReport solve_box(const Family& fam, Box box, const SolverOptions& opts) {
  SolveReport report;
  Box top = box;
  if (narrow(fam, top)) {
    const Integer xc = floor_div(top.xl + top.xh, 2);
    const Integer yc = floor_div(top.yl + top.yh, 2);
    const Integer X = std::max<Integer>(std::max<Integer>(top.xh - xc, xc - top.xl), 1);
    const Integer Y = std::max<Integer>(std::max<Integer>(top.yh - yc, yc - top.yl), 1);
    report.certified = certified_regime(fam.centered(xc, yc, X, Y));
  }
  BoxSolver(fam, opts, report.stats).solve(std::move(box), 0, report.roots);
  sort_roots(report.roots);
  return report;
}

// Smallest p with 2 p^2 >= N.
Integer balanced_lower(const Integer& N) {
  Integer s = isqrt(N / 2);
  while (2 * s * s < N) ++s;
  return s;
}

// Balanced box for the factor written m x + c: its range of x when that factor
// is the smaller one (p in [sqrt(N/2), sqrt(N)]) or the larger one
// (q in [sqrt(N), sqrt(2N)]).
Box balanced_box(const Integer& N, const Integer& m, const Integer& c, bool smaller) {
  const Integer lo = smaller ? balanced_lower(N) : isqrt(N);
  const Integer hi = smaller ? isqrt(N) : isqrt(2 * N);
  const Integer lo_clamped = std::max<Integer>(lo, 2);
  return Box{ceil_div(lo_clamped - c, m), floor_div(hi - c, m), 0, 0};
}

SolveReport solve_residue_box(const Integer& N, const Integer& m, const Integer& n, const Integer& c,
                              const Integer& d, bool smaller, const SolverOptions& opts) {
  const Family fam(N, m, n, c, d);
  Box box = balanced_box(N, m, c, smaller);
  // y is narrowed from x; start from everything with q >= 2.
  box.yl = ceil_div(2 - d, n);
  box.yh = floor_div(N - d, n);
  return solve_box(fam, box, opts);
}

}  // namespace

std::optional<std::vector<RootSolution>> solve_single_lattice(const BivariateProblem& prob, unsigned level,
                                                              const Rational& delta, LatticeStats* stats) {
  const Family fam(prob.N, prob.m, prob.n, prob.P0, prob.Q0);
  auto roots = roots_from_lattice(fam, prob, level, delta, stats);
  if (roots) sort_roots(*roots);
  return roots;
}

SolveReport solve_bivariate(const BivariateProblem& prob, const SolverOptions& opts) {
  require_positive_bounds(prob);
  const Family fam(prob.N, prob.m, prob.n, prob.P0, prob.Q0);
  SolveReport report;
  report.certified = certified_regime(prob);
  BoxSolver(fam, opts, report.stats).solve(Box{-prob.X, prob.X, -prob.Y, prob.Y}, 0, report.roots);
  sort_roots(report.roots);
  return report;
}

SolveReport solve_lsb_known(const Integer& N, const Integer& low_bits, unsigned k, const SolverOptions& opts) {
  if (N < 3 || mpz_even_p(N.get_mpz_t())) throw Error(Errc::precondition_violated, "N must be odd and >= 3");
  if (k < 1) throw Error(Errc::precondition_violated, "need k >= 1 known bits");
  const Integer modulus = pow(Integer(2), k);
  if (low_bits < 0 || low_bits >= modulus) throw Error(Errc::precondition_violated, "low bits must lie in [0, 2^k)");
  const auto inv = mod_inverse(low_bits, modulus);
  if (!inv) throw Error(Errc::non_invertible_residue, "low bits " + low_bits.get_str() + " are not invertible mod 2^k");
  const Integer high_bits = mod(N * *inv, modulus);

  if (modulus > isqrt(N)) {
    // p <= sqrt(N) < 2^k, so p is the known residue itself.
    SolveReport report;
    report.certified = true;
    if (low_bits > 1 && mpz_divisible_p(N.get_mpz_t(), low_bits.get_mpz_t())) {
      const Family fam(N, modulus, modulus, low_bits, high_bits);
      if (auto r = fam.root_at_x(0)) report.roots.push_back(*r);
    }
    return report;
  }
  return solve_residue_box(N, modulus, modulus, low_bits, high_bits, true, opts);
}

unsigned known_quarter_bits(const Integer& N) { return static_cast<unsigned>((bit_length(N) + 3) / 4); }

Integer msb_default_bound(const Integer& N) {
  const std::size_t b = bit_length(N);
  return pow(Integer(2), static_cast<unsigned long>((b + 1) / 2 - (b + 3) / 4));
}

std::optional<BivariateProblem> msb_top_problem(const Integer& N, const Integer& P0, const Integer& X) {
  if (N < 2 || P0 < 1 || X < 1) throw Error(Errc::precondition_violated, "need N >= 2, P0 >= 1, X >= 1");
  const Integer Q0 = N / P0;
  const Family fam(N, 1, 1, P0, Q0);
  Box box{-X, X, 1 - Q0, N - Q0};
  if (!narrow(fam, box)) return std::nullopt;
  const Integer xc = floor_div(box.xl + box.xh, 2);
  const Integer yc = floor_div(box.yl + box.yh, 2);
  return fam.centered(xc, yc, std::max<Integer>(std::max<Integer>(box.xh - xc, xc - box.xl), 1),
                      std::max<Integer>(std::max<Integer>(box.yh - yc, yc - box.yl), 1));
}

SolveReport solve_msb_known(const Integer& N, const Integer& P0, const std::optional<Integer>& X,
                            const SolverOptions& opts) {
  if (N < 2 || P0 < 1) throw Error(Errc::precondition_violated, "need N >= 2 and P0 >= 1");
  const Integer bound = X ? *X : msb_default_bound(N);
  if (bound < 1) throw Error(Errc::precondition_violated, "bound X must be >= 1");
  const Integer Q0 = N / P0;
  const Family fam(N, 1, 1, P0, Q0);
  // y is recovered from x by narrowing; the initial range is every q >= 1.
  return solve_box(fam, Box{-bound, bound, 1 - Q0, N - Q0}, opts);
}

SolveReport solve_coprime_moduli(const Integer& N, const Integer& m, const Integer& n, const Integer& c,
                                 const Integer& d, const SolverOptions& opts) {
  if (m < 1 || n < 1) throw Error(Errc::precondition_violated, "moduli must be positive");
  if (gcd(m, n) != 1) throw Error(Errc::not_coprime, "gcd(m, n) = " + gcd(m, n).get_str());
  SolveReport report = solve_residue_box(N, m, n, c, d, true, opts);
  SolveReport larger = solve_residue_box(N, m, n, c, d, false, opts);
  report.certified = report.certified && larger.certified;
  report.roots.insert(report.roots.end(), larger.roots.begin(), larger.roots.end());
  merge_stats(report.stats, larger.stats);
  sort_roots(report.roots);
  return report;
}

Integer trivariate_z_cap(const Integer& N) {
  const Integer b = static_cast<unsigned long>(bit_length(N));
  return std::max<Integer>(b * b, 64);
}

SolveReport solve_trivariate(const TrivariateProblem& prob, const SolverOptions& opts) {
  if (prob.z_lo < 1 || prob.z_hi < prob.z_lo) throw Error(Errc::precondition_violated, "z range must be positive and nonempty");
  if (prob.a_hi < prob.a_lo) throw Error(Errc::precondition_violated, "a range must be nonempty");
  if (prob.M < 1) throw Error(Errc::precondition_violated, "M must be positive");
  if (prob.z_hi - prob.z_lo + 1 > trivariate_z_cap(prob.N)) {
    throw Error(Errc::precondition_violated, "z range exceeds the polylog cap " + trivariate_z_cap(prob.N).get_str());
  }

  SolveReport last;
  LatticeStats total;
  for (Integer z = prob.z_lo; z <= prob.z_hi; ++z) {
    for (Integer a = prob.a_lo; a <= prob.a_hi; ++a) {
      const Integer Q0 = prob.M * z - a;
      if (Q0 < 1) continue;
      SolveReport report = solve_bivariate(BivariateProblem{prob.N, prob.P0, Q0, prob.X, prob.Y}, opts);
      merge_stats(total, report.stats);
      if (!report.roots.empty()) {
        for (auto& r : report.roots) r.z0 = z;
        report.stats = total;
        return report;
      }
      last = std::move(report);
    }
  }
  last.roots.clear();
  last.stats = total;
  return last;
}

ResidueDivisorOutcome factor_by_residue_divisors(const Integer& N, const Integer& m, const SolverOptions& opts) {
  ResidueDivisorOutcome outcome;
  std::vector<ResiduePair> pairs;
  try {
    pairs = residue_divisor_pairs(N, m);
  } catch (const GcdFactorFound& hit) {
    if (hit.factor() < N) outcome.factors = make_split(hit.factor(), N / hit.factor());
    return outcome;
  }
  for (const auto& pair : pairs) {
    const SolveReport report = solve_residue_box(N, m, m, pair.c, pair.d, true, opts);
    merge_stats(outcome.stats, report.stats);
    if (const auto root = report.nontrivial()) {
      outcome.factors = make_split(root->p, root->q);
      outcome.pair = pair;
      return outcome;
    }
  }
  return outcome;
}

}  // namespace factorlab
