#include "factorlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "factorlab/error.hpp"

namespace factorlab {

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw Error(Errc::precondition_violated, "polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Integer& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(Errc::precondition_violated, "variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const Integer& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::from_univariate(std::size_t nvars, std::size_t var, const std::vector<Integer>& coeffs) {
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    e[var] = static_cast<unsigned>(i);
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Integer MultiPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Integer& c) {
  if (exps.size() != nvars_) throw Error(Errc::precondition_violated, "exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

unsigned MultiPoly::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned sum = 0;
    for (unsigned x : e) sum += x;
    d = std::max(d, sum);
  }
  return d;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<MultiPoly> out(degree(var) + 1, MultiPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    out[e[var]].add_term(rest, c);
  }
  return out;
}

std::vector<Integer> MultiPoly::univariate_coefficients(std::size_t var) const {
  std::vector<Integer> out(degree(var) + 1, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != var && e[i] != 0) throw Error(Errc::precondition_violated, "polynomial is not univariate");
    }
    out[e[var]] = c;
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Integer& value) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    out.add_term(rest, c * pow(value, e[var]));
  }
  return out;
}

Integer MultiPoly::evaluate(const std::vector<Integer>& point) const {
  if (point.size() != nvars_) throw Error(Errc::precondition_violated, "point has wrong dimension");
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= pow(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

Integer MultiPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return g;
}

MultiPoly MultiPoly::divide_exact(const Integer& c) const {
  if (c == 0) throw Error(Errc::precondition_violated, "division by zero");
  MultiPoly out(nvars_);
  for (const auto& [e, coeff] : terms_) {
    if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t())) {
      throw Error(Errc::not_a_divisor, "coefficient " + coeff.get_str() + " not divisible by " + c.get_str());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
    out.terms_.emplace(e, q);
  }
  return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::zero_polynomial, "division by the zero polynomial");
  if (divisor.nvars_ != nvars_) throw Error(Errc::precondition_violated, "variable count mismatch");
  if (divisor.weight() == 1 && divisor.terms_.begin()->first == Exponents(nvars_, 0)) {
    return divide_exact(divisor.terms_.begin()->second);
  }
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  MultiPoly quotient(nvars_);
  MultiPoly rest = *this;
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms_.rbegin();
    Exponents shift(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] < lead_e[i]) throw Error(Errc::not_a_divisor, "polynomial division is not exact");
      shift[i] = e[i] - lead_e[i];
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) {
      throw Error(Errc::not_a_divisor, "polynomial division is not exact");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lead_c.get_mpz_t());
    const MultiPoly t = monomial(shift, q);
    quotient += t;
    rest -= t * divisor;
  }
  return quotient;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw Error(Errc::precondition_violated, "variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw Error(Errc::precondition_violated, "variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(Errc::precondition_violated, "variable count mismatch");
  MultiPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer magnitude = abs(c);
    bool need_star = false;
    if (magnitude != 1 || constant_term) {
      out << magnitude.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      out << 'x' << (i + 1);
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, std::size_t nvars) : nvars_(nvars) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
    }
  }

  MultiPoly parse() {
    if (text_.empty()) fail("empty polynomial");
    MultiPoly out(nvars_);
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      out.add_term(e, sign * c);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::pair<Exponents, Integer> term() {
    Exponents e(nvars_, 0);
    Integer c = 1;
    for (;;) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= Integer(digits());
      } else if (peek() == 'x' || peek() == 'y' || peek() == 'z') {
        const char name = peek();
        ++pos_;
        std::size_t index;
        if (name == 'x' && std::isdigit(static_cast<unsigned char>(peek()))) {
          index = std::stoul(digits());
          if (index == 0) fail("variables are numbered from x1");
          --index;
        } else {
          index = static_cast<std::size_t>(name - 'x');
        }
        if (index >= nvars_) fail("variable index exceeds " + std::to_string(nvars_));
        unsigned power = 1;
        if (peek() == '^') {
          ++pos_;
          power = static_cast<unsigned>(std::stoul(digits()));
        }
        e[index] += power;
      } else {
        fail("expected coefficient or variable");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return {e, c};
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, std::size_t nvars) { return PolyParser(text, nvars).parse(); }

PolyNorms norms(const MultiPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "norms of the zero polynomial");
  PolyNorms out{0, 0, f.weight()};
  for (const auto& [e, c] : f.terms()) {
    const Integer a = abs(c);
    if (a > out.height) out.height = a;
    out.l2_squared += c * c;
  }
  return out;
}

MultiPoly scale_vars(const MultiPoly& f, const std::vector<Integer>& bounds) {
  if (bounds.size() != f.nvars()) throw Error(Errc::precondition_violated, "one bound per variable required");
  for (const auto& b : bounds) {
    if (b < 1) throw Error(Errc::precondition_violated, "bounds must be >= 1");
  }
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Integer scaled = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) scaled *= pow(bounds[i], e[i]);
    }
    out.add_term(e, scaled);
  }
  return out;
}

namespace {

// Fraction-free elimination over the polynomial ring: every division is exact.
MultiPoly polynomial_determinant(std::vector<std::vector<MultiPoly>> m, std::size_t nvars) {
  const std::size_t n = m.size();
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return MultiPoly(nvars);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (f.nvars() != g.nvars()) throw Error(Errc::precondition_violated, "variable count mismatch");
  if (var >= f.nvars()) throw Error(Errc::precondition_violated, "variable index out of range");
  if (f.is_zero() || g.is_zero()) throw Error(Errc::zero_polynomial, "resultant of the zero polynomial");
  const std::size_t k = f.degree(var);
  const std::size_t m = g.degree(var);
  if (k == 0 || m == 0) throw Error(Errc::zero_degree, "resultant needs positive degree in the eliminated variable");

  const auto fc = f.coefficients_in(var);
  const auto gc = g.coefficients_in(var);
  const std::size_t size = k + m;
  std::vector<std::vector<MultiPoly>> sylvester(size, std::vector<MultiPoly>(size, MultiPoly(f.nvars())));
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= k; ++i) sylvester[row][row + i] = fc[k - i];
  }
  for (std::size_t row = 0; row < k; ++row) {
    for (std::size_t i = 0; i <= m; ++i) sylvester[m + row][row + i] = gc[m - i];
  }
  return polynomial_determinant(std::move(sylvester), f.nvars());
}

MultiPoly discriminant(const MultiPoly& f, std::size_t var) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "discriminant of the zero polynomial");
  const unsigned k = f.degree(var);
  if (k < 2) throw Error(Errc::zero_degree, "discriminant needs degree >= 2");
  const MultiPoly lead = f.coefficients_in(var)[k];
  if (lead != MultiPoly::constant(f.nvars(), 1)) throw Error(Errc::not_monic, "discriminant requires a monic polynomial");
  MultiPoly res = resultant(f, f.derivative(var), var);
  return (k * (k - 1) / 2) % 2 == 1 ? -res : res;
}

bool howgrave_predicate(const MultiPoly& f, const Integer& modulus, const std::vector<Integer>& bounds) {
  const PolyNorms n = norms(scale_vars(f, bounds));
  return n.l2_squared * n.weight < modulus * modulus;
}

bool multiple_bound_predicate(const MultiPoly& a, const MultiPoly& b, unsigned max_deg) {
  const PolyNorms na = norms(a);
  const PolyNorms nb = norms(b);
  unsigned long cells = 1;
  for (std::size_t i = 0; i < a.nvars(); ++i) cells *= max_deg + 1;
  // |b|^2 * 2^(2((d+1)^n - 1)) < |a|_inf^2
  Integer lhs = nb.l2_squared;
  mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), 2 * (cells - 1));
  return lhs < na.height * na.height;
}

namespace {

// Dense univariate polynomials over Q, ascending coefficients, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly remainder(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly quotient(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return d;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_at(const QPoly& p, const Integer& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return sgn(v);
}

class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& p) {
    chain_.push_back(p);
    chain_.push_back(derivative(p));
    while (chain_.back().size() > 1) {
      QPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
  }

  int variations(const Integer& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

 private:
  std::vector<QPoly> chain_;
};

Integer eval_integer(const std::vector<Integer>& coeffs, const Integer& x) {
  Integer v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

}  // namespace

std::vector<Integer> integer_roots(const std::vector<Integer>& coeffs, const Integer& lo, const Integer& hi) {
  std::vector<Integer> p = coeffs;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw Error(Errc::zero_polynomial, "root search on the zero polynomial");
  std::vector<Integer> roots;
  if (lo > hi || p.size() == 1) return roots;

  // Factor out x^j: 0 is a root iff the constant term vanishes.
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) {
    if (lo <= 0 && 0 <= hi) roots.push_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  }

  if (p.size() > 1) {
    // Squarefree part, so that every root is simple and Sturm counts apply.
    const QPoly q(p.begin(), p.end());
    QPoly sf = quotient(q, poly_gcd(q, derivative(q)));
    const SturmSequence sturm(sf);
    const Integer& constant = p[0];

    // Roots in (a, b] number variations(a) - variations(b).
    std::vector<std::pair<Integer, Integer>> stack{{lo - 1, hi}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const int count = sturm.variations(a) - sturm.variations(b);
      if (count <= 0) continue;
      if (b - a <= 16) {
        for (Integer x = a + 1; x <= b; ++x) {
          if (x == 0 || !mpz_divisible_p(constant.get_mpz_t(), x.get_mpz_t())) continue;
          if (eval_integer(p, x) == 0) roots.push_back(x);
        }
        continue;
      }
      const Integer mid = floor_div(a + b, 2);
      stack.push_back({mid, b});
      stack.push_back({a, mid});
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace factorlab
