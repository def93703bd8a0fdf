#include "factorlab/cli/run.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "factorlab/cli/bench.hpp"
#include "factorlab/coppersmith.hpp"
#include "factorlab/error.hpp"
#include "factorlab/fermat.hpp"
#include "factorlab/lattice.hpp"
#include "factorlab/residue.hpp"

namespace factorlab::cli {

namespace {

using Json = nlohmann::ordered_json;

void set_split(RunReport& report, const Integer& p, const Integer& q) {
  if (p <= 1 || q <= 1) return;
  if (p * q != report.n) throw std::logic_error("factor pair does not multiply to N");
  report.factors = make_split(std::min<Integer>(p, q), std::max<Integer>(p, q));
  report.outcome = "factored";
}

void run_fermat(const RunConfig& config, RunReport& report) {
  const SearchBudget budget = config.budget ? SearchBudget{*config.budget} : SearchBudget{};
  FermatOutcome outcome;
  switch (config.method) {
    case Method::standard:
      outcome = fermat_standard(config.n, budget);
      break;
    case Method::triangular:
      outcome = fermat_triangular(config.n, config.budget ? std::optional<SearchBudget>(budget) : std::nullopt);
      break;
    default:
      outcome = fermat_ratio(config.n, *config.r, budget);
      break;
  }
  report.steps = outcome.steps;
  report.outcome = to_string(outcome.status);
  if (outcome.found()) set_split(report, outcome.result->p, outcome.result->q);
}

// Every probable class pair, under both assignments of (c, d) to (p, q).
void run_residue(const RunConfig& config, RunReport& report) {
  const Integer& n = config.n;
  const Integer& m = *config.m;
  std::uint64_t steps = 0;
  ResidueClassSet classes;
  try {
    classes = probable_residue_pairs(n, m);
  } catch (const GcdFactorFound& hit) {
    report.steps = 0;
    if (hit.factor() < n) set_split(report, hit.factor(), n / hit.factor());
    if (!report.factors) report.outcome = "trivial_only";
    return;
  }
  for (const auto& pair : classes.pairs) {
    for (const auto& [c, d] : {std::pair{pair.c, pair.d}, std::pair{pair.d, pair.c}}) {
      const Integer t_bound = config.t_bound ? *config.t_bound : landry_pepin_t_bound(n, m, m, c, d);
      const auto hit = landry_pepin(n, m, m, c, d, t_bound);
      if (hit) {
        steps += hit->t.get_ui() + 1;
        report.steps = steps;
        set_split(report, hit->factors.parts.front().prime, n / hit->factors.parts.front().prime);
        return;
      }
      steps += t_bound.get_ui() + 1;
    }
  }
  report.steps = steps;
  report.outcome = "exhausted";
}

void run_landry_pepin(const RunConfig& config, RunReport& report) {
  const Integer& n = config.n;
  const Integer& m = *config.m;
  const Integer mod_n = config.mod_n ? *config.mod_n : m;
  const Integer t_bound = config.t_bound ? *config.t_bound : landry_pepin_t_bound(n, m, mod_n, *config.c, *config.d);
  const auto hit = landry_pepin(n, m, mod_n, *config.c, *config.d, t_bound);
  if (!hit) {
    report.steps = t_bound.get_ui() + 1;
    report.outcome = "exhausted";
    return;
  }
  report.steps = hit->t.get_ui() + 1;
  const Integer p = hit->factors.parts.front().prime;
  set_split(report, p, n / p);
}

void apply_lattice(RunReport& report, const SolveReport& solved) {
  report.lattice_dim = solved.stats.lattice_dim;
  report.certified = solved.certified;
  report.steps = solved.stats.boxes;
  report.outcome = "no_root";
  if (const auto root = solved.nontrivial()) set_split(report, root->p, root->q);
}

void run_lattice_method(const RunConfig& config, RunReport& report) {
  const Integer& n = config.n;
  switch (config.method) {
    case Method::coppersmith_msb:
      apply_lattice(report, solve_msb_known(n, *config.p0, config.x_bound));
      break;
    case Method::coppersmith_lsb:
      apply_lattice(report, solve_lsb_known(n, *config.low_bits, *config.k_bits));
      break;
    case Method::trivariate: {
      const Integer X = config.x_bound ? *config.x_bound : msb_default_bound(n);
      const Integer Y = config.y_bound ? *config.y_bound : X;
      TrivariateProblem prob{n,
                             *config.p0,
                             *config.big_m,
                             config.a_min ? *config.a_min : Integer(0),
                             config.a_max ? *config.a_max : Integer(0),
                             *config.z_min,
                             *config.z_max,
                             X,
                             Y};
      apply_lattice(report, solve_trivariate(prob));
      break;
    }
    default: {
      const ResidueDivisorOutcome outcome = factor_by_residue_divisors(n, *config.m);
      report.lattice_dim = outcome.stats.lattice_dim;
      report.steps = outcome.stats.boxes;
      report.outcome = "exhausted";
      if (outcome.factors) {
        const Integer p = outcome.factors->parts.front().prime;
        set_split(report, p, n / p);
      }
      break;
    }
  }
}

std::string factors_text(const Factorization& f) {
  std::string out;
  for (const auto& part : f.parts) {
    for (unsigned i = 0; i < part.multiplicity; ++i) {
      if (!out.empty()) out += " * ";
      out += part.prime.get_str();
    }
  }
  return out;
}

}  // namespace

RunReport run(const RunConfig& config) {
  validate(config);
  RunReport report;
  report.n = config.n;
  report.method = config.method;
  report.params = method_params(config);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (config.method) {
      case Method::standard:
      case Method::triangular:
      case Method::ratio:
        run_fermat(config, report);
        break;
      case Method::residue:
        run_residue(config, report);
        break;
      case Method::landry_pepin:
        run_landry_pepin(config, report);
        break;
      default:
        run_lattice_method(config, report);
        break;
    }
  } catch (const Error& e) {
    // Search failures are outcomes; bad inputs remain usage errors.
    if (e.code() != Errc::no_independent_polynomial) throw;
    report.outcome = to_string(e.code());
  }
  report.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json_line(const RunReport& report) {
  Json j;
  j["n"] = report.n.get_str();
  j["method"] = to_string(report.method);
  j["params"] = Json::object();
  for (const auto& [k, v] : report.params) j["params"][k] = v;
  j["outcome"] = report.outcome;
  j["factors"] = nullptr;
  if (report.factors) {
    j["factors"] = Json::array();
    for (const auto& part : report.factors->parts) {
      for (unsigned i = 0; i < part.multiplicity; ++i) j["factors"].push_back(part.prime.get_str());
    }
  }
  j["steps"] = report.steps ? Json(std::to_string(*report.steps)) : Json(nullptr);
  j["lattice_dim"] = report.lattice_dim ? Json(std::to_string(*report.lattice_dim)) : Json(nullptr);
  j["certified"] = report.certified ? Json(*report.certified) : Json(nullptr);
  j["time_ms"] = report.time_ms;
  return j.dump();
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << "N = " << report.n << "\n";
  out << "method: " << to_string(report.method) << "\n";
  for (const auto& [k, v] : report.params) out << "  " << k << " = " << v << "\n";
  out << "outcome: " << report.outcome << "\n";
  if (report.factors) out << "factors: " << factors_text(*report.factors) << "\n";
  if (report.steps) out << "steps: " << *report.steps << "\n";
  if (report.lattice_dim) out << "lattice dimension: " << *report.lattice_dim << "\n";
  if (report.certified) out << "certified regime: " << (*report.certified ? "yes" : "no") << "\n";
  out << "time: " << std::fixed << std::setprecision(3) << report.time_ms << " ms\n";
  return out.str();
}

void print_grid(const RunConfig& config, std::ostream& out) {
  validate(config);
  const auto grid = ratio_grid(config.lower, config.upper, config.count);
  if (config.format == OutputFormat::json_lines) {
    for (const auto& e : grid) {
      Json j;
      j["index"] = std::to_string(e.index);
      j["r"] = to_fixed_trimmed(e.r, 6);
      j["s"] = to_fixed_trimmed(e.s, 6);
      out << j.dump() << "\n";
    }
    return;
  }
  out << std::left << std::setw(6) << "i" << std::setw(12) << "r" << "s = 1/r\n";
  for (const auto& e : grid) {
    out << std::left << std::setw(6) << e.index << std::setw(12) << to_fixed_trimmed(e.r, 6)
        << to_fixed_trimmed(e.s, 6) << "\n";
  }
}

namespace {

std::string vector_text(const IntVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + "]";
}

Json vector_json(const IntVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

void print_envelope(const RunConfig& config, std::ostream& out) {
  const unsigned bits = config.bits;
  std::vector<unsigned> unknown;
  for (unsigned u = 4; u <= bits / 4 + 4; u += 2) unknown.push_back(u);
  const std::size_t per_row = config.bench_count;
  const auto rows = envelope_report(config.seed, per_row, bits, unknown);
  if (config.format == OutputFormat::json_lines) {
    Json head;
    head["envelope"] = true;
    head["note"] = "only rows with certified instances ((XY)^3 <= W^2) carry a recovery guarantee; other rows are measurements";
    out << head.dump() << "\n";
    for (const auto& row : rows) out << to_json_line(row) << "\n";
    return;
  }
  out << "Recovery of p from its top bits, " << bits << "-bit N, " << per_row << " instances per row.\n";
  out << "Only certified instances ((XY)^3 <= W^2) carry a guarantee; the rest is measured.\n";
  out << "unknown  certified  log2(XY)  log2(W)  1-lattice(k=1)  1-lattice(k=2)  split  boxes  ms\n";
  for (const auto& row : rows) {
    out << std::setw(7) << row.unknown_bits << std::setw(11) << row.certified << std::fixed << std::setprecision(1)
        << std::setw(10) << row.mean_log2_xy << std::setw(9) << row.mean_log2_w << std::setw(16) << row.single_level1
        << std::setw(16) << row.single_level2 << std::setw(7) << row.split_success << std::setw(7) << row.mean_boxes
        << std::setw(8) << row.mean_ms << "\n";
  }
}

}  // namespace

void print_lattice(const RunConfig& config, std::ostream& out) {
  validate(config);
  if (config.envelope) {
    print_envelope(config, out);
    return;
  }
  const Basis basis(parse_basis(config.basis));
  const LllResult result = lll_reduce_with_transform(basis, config.delta);
  const Integer det = determinant(basis);
  const bool reduced_ok = is_lll_reduced(result.reduced, config.delta);
  const bool hadamard = hadamard_check(result.reduced);
  const std::optional<Rational> hermite =
      basis.dim() <= 8 ? std::optional<Rational>(hermite_bound(basis)) : std::nullopt;

  if (config.format == OutputFormat::json_lines) {
    Json j;
    j["dimension"] = std::to_string(basis.dim());
    j["delta"] = config.delta.get_str();
    j["reduced"] = Json::array();
    for (const auto& row : result.reduced.rows()) j["reduced"].push_back(vector_json(row));
    j["transform"] = Json::array();
    for (const auto& row : result.transform) j["transform"].push_back(vector_json(row));
    j["swaps"] = std::to_string(result.swaps);
    j["determinant"] = det.get_str();
    j["lll_reduced"] = reduced_ok;
    j["hadamard"] = hadamard;
    j["hermite_bound"] = hermite ? Json(hermite->get_str()) : Json(nullptr);
    out << j.dump() << "\n";
    return;
  }
  out << "reduced basis (delta = " << config.delta << "):\n";
  for (const auto& row : result.reduced.rows()) out << "  " << vector_text(row) << "\n";
  out << "transform:\n";
  for (const auto& row : result.transform) out << "  " << vector_text(row) << "\n";
  out << "swaps: " << result.swaps << "\n";
  out << "|det|: " << det << "\n";
  out << "LLL-reduced: " << (reduced_ok ? "yes" : "no") << "\n";
  out << "Hadamard bound holds: " << (hadamard ? "yes" : "no") << "\n";
  if (hermite) out << "Hermite bound on |v|^(2n): " << *hermite << "\n";
}

void print_demo(const RunConfig& config, std::ostream& out) {
  const Integer n = 2599;
  const auto terms = triangular_sequence(n, 3);
  const auto tri = fermat_triangular(n);
  const auto std_run = fermat_standard(n);
  if (config.format == OutputFormat::json_lines) {
    Json j;
    j["n"] = n.get_str();
    j["triangular"] = Json::array();
    for (const auto& t : terms) {
      Json term;
      term["x"] = t.x.get_str();
      term["x_squared"] = t.x_squared.get_str();
      term["x_squared_minus_4n"] = Integer(t.x_squared - 4 * n).get_str();
      j["triangular"].push_back(term);
    }
    j["triangular_steps"] = std::to_string(tri.steps);
    j["y"] = tri.result->y.get_str();
    j["factors"] = {tri.result->p.get_str(), tri.result->q.get_str()};
    j["standard_start"] = isqrt(4 * n).get_str();
    j["standard_steps"] = std::to_string(std_run.steps);
    out << j.dump() << "\n";
    return;
  }
  out << "N = 2599: search for 4N = x^2 - y^2 over triangular x = k(k+1)/2,\n";
  out << "with x^2 advanced by the cube of the next k.\n";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Integer diff = terms[i].x_squared - 4 * n;
    out << "  x" << i << " = " << terms[i].x << "   x^2 - 4N = " << diff;
    if (const auto y = exact_sqrt(diff); diff >= 0 && y) out << " = " << *y << "^2";
    out << "\n";
  }
  out << "  p = (x - y)/2 = " << tri.result->p << ", q = (x + y)/2 = " << tri.result->q << " after " << tri.steps
      << " steps\n";
  out << "The standard scan from x = " << isqrt(4 * n) << " needs " << std_run.steps << " steps to reach x = "
      << std_run.result->x << ".\n";
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::grid:
        print_grid(config, out);
        return 0;
      case Command::lattice:
        print_lattice(config, out);
        return 0;
      case Command::demo:
        print_demo(config, out);
        return 0;
      case Command::bench:
        validate(config);
        return bench(config, out);
      case Command::factor: {
        const RunReport report = run(config);
        out << (config.format == OutputFormat::json_lines ? to_json_line(report) + "\n" : to_text(report));
        return report.exit_code();
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace factorlab::cli
