#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "factorlab/arith.hpp"
#include "factorlab/cli/config.hpp"

namespace factorlab::cli {

struct RunReport {
  Integer n;
  Method method = Method::standard;
  std::map<std::string, std::string> params;
  // factored, exhausted, trivial_only, multiplier_collision, no_root, or an
  // error code name for solver failures.
  std::string outcome;
  std::optional<Factorization> factors;  // nontrivial split, verified against n
  std::optional<std::uint64_t> steps;
  std::optional<std::size_t> lattice_dim;
  std::optional<bool> certified;
  double time_ms = 0.0;

  bool success() const { return factors.has_value(); }
  int exit_code() const { return success() ? 0 : 2; }
};

RunReport run(const RunConfig& config);

// One json object, keys {n, method, params, outcome, factors, steps,
// lattice_dim, certified, time_ms}; integers are decimal strings.
std::string to_json_line(const RunReport& report);
std::string to_text(const RunReport& report);

void print_grid(const RunConfig& config, std::ostream& out);
void print_lattice(const RunConfig& config, std::ostream& out);
void print_demo(const RunConfig& config, std::ostream& out);

// Runs any command, writing to `out`; returns the process exit code
// (0 factored, 2 search failed, 1 usage error with the message on `err`).
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace factorlab::cli
