#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factorlab/arith.hpp"
#include "factorlab/lattice.hpp"

namespace factorlab::cli {

enum class Command { factor, bench, grid, lattice, demo };

enum class Method {
  standard,
  triangular,
  ratio,
  residue,
  landry_pepin,
  coppersmith_msb,
  coppersmith_lsb,
  trivariate,
  residue_divisors,
};

enum class OutputFormat { text, json_lines };

enum class BenchProfile { gap, ratio };

const char* to_string(Method method);
std::optional<Method> parse_method(const std::string& name);
// Names accepted by --method, in declaration order.
std::vector<std::string> method_names();

const char* to_string(BenchProfile profile);

struct RunConfig {
  Command command = Command::factor;
  Method method = Method::standard;
  OutputFormat format = OutputFormat::text;

  Integer n;
  std::optional<std::uint64_t> budget;

  // ratio
  std::optional<Rational> r;
  // residue classes: p = c (mod m), q = d (mod mod_n)
  std::optional<Integer> m;
  std::optional<Integer> mod_n;
  std::optional<Integer> c;
  std::optional<Integer> d;
  std::optional<Integer> t_bound;
  // lattice methods
  std::optional<Integer> p0;
  std::optional<Integer> low_bits;
  std::optional<unsigned> k_bits;
  std::optional<Integer> big_m;
  std::optional<Integer> z_min;
  std::optional<Integer> z_max;
  std::optional<Integer> a_min;
  std::optional<Integer> a_max;
  std::optional<Integer> x_bound;
  std::optional<Integer> y_bound;

  // grid
  Rational lower{707, 1000};
  Rational upper{1};
  std::size_t count = 21;

  // lattice
  std::string basis;
  Rational delta{3, 4};
  bool envelope = false;

  // bench
  BenchProfile profile = BenchProfile::gap;
  std::size_t bench_count = 100;
  unsigned bits = 48;
  std::uint64_t seed = 1;
};

// Throws Error(parse_error) naming the missing or bad flag.
void validate(const RunConfig& config);

// The method parameters that were supplied, as decimal strings.
std::map<std::string, std::string> method_params(const RunConfig& config);

// "4,1;7,2" -> rows {4, 1} and {7, 2}.
IntMatrix parse_basis(const std::string& text);

}  // namespace factorlab::cli
