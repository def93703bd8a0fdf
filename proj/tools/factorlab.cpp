// factorlab: Fermat variants, residue-class searches and lattice small-root
// factoring from the command line.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "factorlab/arith.hpp"
#include "factorlab/cli/config.hpp"
#include "factorlab/cli/run.hpp"
#include "factorlab/error.hpp"

using namespace factorlab;
using namespace factorlab::cli;

namespace {

// Raw flag text; converted after parsing so that errors name the flag.
struct RawFlags {
  std::string n, method = "standard", format = "text", budget;
  std::string r, m, m2, c, d, t_bound;
  std::string p0, low_bits, k, big_m, z_min, z_max, a_min, a_max, x_bound, y_bound;
  std::string lower = "0.707", upper = "1", count = "21";
  std::string basis, delta = "3/4";
  bool envelope = false;
  std::string profile = "gap", bench_count, bits, seed = "1";  // count/bits default per command
};

std::optional<Integer> integer_flag(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_integer(text);
  } catch (const Error&) {
    throw Error(Errc::parse_error, std::string(flag) + " expects an integer, got '" + text + "'");
  }
}

std::uint64_t count_flag(const std::string& text, const char* flag) {
  const auto v = integer_flag(text, flag);
  if (!v || *v < 0 || !v->fits_ulong_p()) throw Error(Errc::parse_error, std::string(flag) + " expects a nonnegative count");
  return v->get_ui();
}

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw Error(Errc::parse_error, std::string(flag) + " expects a rational such as 0.707 or 3/4, got '" + text + "'");
  }
}

RunConfig to_config(const std::string& command, const RawFlags& raw) {
  static const std::map<std::string, Command> commands = {{"factor", Command::factor},
                                                          {"bench", Command::bench},
                                                          {"grid", Command::grid},
                                                          {"lattice", Command::lattice},
                                                          {"demo", Command::demo}};
  RunConfig config;
  config.command = commands.at(command);
  const auto method = parse_method(raw.method);
  if (!method) throw Error(Errc::parse_error, "unknown --method '" + raw.method + "'");
  config.method = *method;
  if (raw.format == "json-lines") {
    config.format = OutputFormat::json_lines;
  } else if (raw.format != "text") {
    throw Error(Errc::parse_error, "--format must be text or json-lines");
  }
  if (const auto n = integer_flag(raw.n, "--n")) config.n = *n;
  if (!raw.budget.empty()) config.budget = count_flag(raw.budget, "--budget");
  if (!raw.r.empty()) config.r = rational_flag(raw.r, "--r");
  config.m = integer_flag(raw.m, "--m");
  config.mod_n = integer_flag(raw.m2, "--m2");
  config.c = integer_flag(raw.c, "--c");
  config.d = integer_flag(raw.d, "--d");
  config.t_bound = integer_flag(raw.t_bound, "--t-bound");
  config.p0 = integer_flag(raw.p0, "--p0");
  config.low_bits = integer_flag(raw.low_bits, "--low-bits");
  if (!raw.k.empty()) config.k_bits = static_cast<unsigned>(count_flag(raw.k, "--k"));
  config.big_m = integer_flag(raw.big_m, "--M");
  config.z_min = integer_flag(raw.z_min, "--z-min");
  config.z_max = integer_flag(raw.z_max, "--z-max");
  config.a_min = integer_flag(raw.a_min, "--a-min");
  config.a_max = integer_flag(raw.a_max, "--a-max");
  config.x_bound = integer_flag(raw.x_bound, "--x-bound");
  config.y_bound = integer_flag(raw.y_bound, "--y-bound");
  config.lower = rational_flag(raw.lower, "--lower");
  config.upper = rational_flag(raw.upper, "--upper");
  config.count = count_flag(raw.count, "--count");
  config.basis = raw.basis;
  config.delta = rational_flag(raw.delta, "--delta");
  config.envelope = raw.envelope;
  if (raw.profile == "ratio") {
    config.profile = BenchProfile::ratio;
  } else if (raw.profile != "gap") {
    throw Error(Errc::parse_error, "--profile must be gap or ratio");
  }
  const bool envelope_run = config.command == Command::lattice;
  config.bench_count = raw.bench_count.empty() ? (envelope_run ? 8 : 100) : count_flag(raw.bench_count, "--count");
  config.bits = raw.bits.empty() ? (envelope_run ? 64 : 48) : static_cast<unsigned>(count_flag(raw.bits, "--bits"));
  config.seed = count_flag(raw.seed, "--seed");
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorlab: Fermat, residue-class and lattice factoring toolkit"};
  app.require_subcommand(1);
  RawFlags raw;

  auto add_format = [&raw](CLI::App* sub) {
    sub->add_option("--format", raw.format, "text or json-lines")->capture_default_str();
  };
  auto add_method_flags = [&raw](CLI::App* sub) {
    std::string names;
    for (const auto& name : method_names()) names += (names.empty() ? "" : ", ") + name;
    sub->add_option("--method", raw.method, "one of: " + names)->capture_default_str();
    sub->add_option("--budget", raw.budget, "maximum steps for the Fermat scans");
    sub->add_option("--r", raw.r, "ratio guess q/p for method ratio (e.g. 2 or 3/2)");
    sub->add_option("--m", raw.m, "modulus of p's residue class");
    sub->add_option("--m2", raw.m2, "modulus of q's residue class (defaults to --m)");
    sub->add_option("--c", raw.c, "residue of p");
    sub->add_option("--d", raw.d, "residue of q");
    sub->add_option("--t-bound", raw.t_bound, "scan length for landry-pepin / residue");
    sub->add_option("--p0", raw.p0, "approximation of p (coppersmith-msb, trivariate)");
    sub->add_option("--low-bits", raw.low_bits, "p mod 2^k (coppersmith-lsb)");
    sub->add_option("--k", raw.k, "number of known low bits (coppersmith-lsb)");
    sub->add_option("--M", raw.big_m, "multiplier with q near M z (trivariate)");
    sub->add_option("--z-min", raw.z_min, "first z tried (trivariate)");
    sub->add_option("--z-max", raw.z_max, "last z tried (trivariate)");
    sub->add_option("--a-min", raw.a_min, "first offset a, Q0 = M z - a (trivariate)");
    sub->add_option("--a-max", raw.a_max, "last offset a (trivariate)");
    sub->add_option("--x-bound", raw.x_bound, "bound X on |p - P0|");
    sub->add_option("--y-bound", raw.y_bound, "bound Y on |q - Q0| (trivariate)");
  };

  CLI::App* factor = app.add_subcommand("factor", "factor one integer");
  factor->add_option("--n", raw.n, "the integer to factor")->required();
  add_method_flags(factor);
  add_format(factor);

  CLI::App* bench = app.add_subcommand("bench", "run a method over a generated semiprime population");
  add_method_flags(bench);
  bench->add_option("--profile", raw.profile, "gap (|q - p| <= N^(1/4)) or ratio (q near 2p)")->capture_default_str();
  bench->add_option("--count", raw.bench_count, "number of instances (default 100)");
  bench->add_option("--bits", raw.bits, "size of N in bits (default 48)");
  bench->add_option("--seed", raw.seed, "generator seed")->capture_default_str();
  add_format(bench);

  CLI::App* grid = app.add_subcommand("grid", "uniform grid of ratios r and 1/r");
  grid->add_option("--lower", raw.lower, "lower end")->capture_default_str();
  grid->add_option("--upper", raw.upper, "upper end")->capture_default_str();
  grid->add_option("--count", raw.count, "number of points")->capture_default_str();
  add_format(grid);

  CLI::App* lattice = app.add_subcommand("lattice", "LLL-reduce a basis, or print the recovery envelope");
  lattice->add_option("--basis", raw.basis, "rows separated by ';', entries by ',' (e.g. \"4,1;7,2\")");
  lattice->add_option("--delta", raw.delta, "Lovasz parameter in (1/4, 1]")->capture_default_str();
  lattice->add_flag("--envelope", raw.envelope, "measure top-bits recovery against unknown bits");
  lattice->add_option("--bits", raw.bits, "envelope: size of N in bits (default 64)");
  lattice->add_option("--count", raw.bench_count, "envelope: instances per row (default 8)");
  lattice->add_option("--seed", raw.seed, "envelope: generator seed")->capture_default_str();
  add_format(lattice);

  CLI::App* demo = app.add_subcommand("demo", "walk through N = 2599");
  add_format(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  try {
    return execute(to_config(chosen->get_name(), raw), std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
