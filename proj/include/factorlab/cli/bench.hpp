#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "factorlab/arith.hpp"
#include "factorlab/cli/config.hpp"

namespace factorlab::cli {

struct BenchInstance {
  std::size_t index = 0;
  Integer n;
  Integer p;
  Integer q;
  std::string label;  // construction parameters, enough to rebuild the instance
};

// gap: |q - p| <= N^(1/4). ratio: |q - 2p| <= (2N)^(1/4). Deterministic in seed.
std::vector<BenchInstance> generate_population(BenchProfile profile, std::size_t count, unsigned bits,
                                               std::uint64_t seed);

// Worker count: hardware threads, capped by FACTORLAB_THREADS when set.
unsigned bench_workers(std::size_t jobs);

// One line per instance in index order, then a summary line. Returns 0.
int bench(const RunConfig& config, std::ostream& out);

struct EnvelopeRow {
  unsigned bits = 0;
  unsigned unknown_bits = 0;
  std::size_t instances = 0;
  std::size_t certified = 0;      // instances with (XY)^3 <= W^2
  double mean_log2_xy = 0.0;
  double mean_log2_w = 0.0;
  std::size_t single_level1 = 0;  // one lattice, no splitting
  std::size_t single_level2 = 0;
  std::size_t split_success = 0;  // full solver with box splitting
  std::size_t certified_split_success = 0;
  double mean_boxes = 0.0;
  double mean_ms = 0.0;
};

// Measures recovery of p from its top bits against the number of unknown
// low bits, on balanced semiprimes of the given size.
std::vector<EnvelopeRow> envelope_report(std::uint64_t seed, std::size_t per_row, unsigned bits,
                                         const std::vector<unsigned>& unknown_bits);

std::string to_json_line(const EnvelopeRow& row);

}  // namespace factorlab::cli
