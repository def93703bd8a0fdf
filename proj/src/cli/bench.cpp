#include "factorlab/cli/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "factorlab/cli/run.hpp"
#include "factorlab/coppersmith.hpp"
#include "factorlab/error.hpp"
#include "factorlab/fermat.hpp"

namespace factorlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultBenchBudget = 1'000'000;

Integer random_prime(gmp_randclass& rng, unsigned bits) {
  const Integer top = pow(Integer(2), bits - 1);
  return next_prime(top + rng.get_z_bits(bits - 1));
}

}  // namespace

std::vector<BenchInstance> generate_population(BenchProfile profile, std::size_t count, unsigned bits,
                                               std::uint64_t seed) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  std::vector<BenchInstance> out;
  out.reserve(count);
  while (out.size() < count) {
    BenchInstance inst;
    inst.index = out.size();
    if (profile == BenchProfile::gap) {
      inst.p = random_prime(rng, bits / 2);
      const Integer spread = std::max<Integer>(iroot(inst.p * inst.p, 4) / 2, 1);
      inst.q = next_prime(inst.p + 1 + rng.get_z_range(spread));
      if (inst.q - inst.p > iroot(inst.p * inst.q, 4)) continue;
    } else {
      inst.p = random_prime(rng, (bits - 1) / 2);
      const Integer spread = std::max<Integer>(iroot(2 * inst.p * inst.p, 4) / 2, 1);
      inst.q = next_prime(2 * inst.p + 1 + rng.get_z_range(spread));
      if (inst.q - 2 * inst.p > iroot(2 * inst.p * inst.q, 4)) continue;
    }
    inst.n = inst.p * inst.q;
    inst.label = std::string(to_string(profile)) + " seed=" + std::to_string(seed) + " index=" +
                 std::to_string(inst.index) + " p=" + inst.p.get_str() + " q=" + inst.q.get_str();
    out.push_back(std::move(inst));
  }
  return out;
}

unsigned bench_workers(std::size_t jobs) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("FACTORLAB_THREADS")) {
    const long value = std::strtol(cap, nullptr, 10);
    if (value >= 1) workers = std::min<unsigned>(workers, static_cast<unsigned>(value));
  }
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, jobs)));
}

namespace {

RunConfig instance_config(const RunConfig& base, const BenchInstance& inst) {
  RunConfig config = base;
  config.command = Command::factor;
  config.n = inst.n;
  switch (config.method) {
    case Method::standard:
    case Method::triangular:
    case Method::ratio:
      if (!config.budget) config.budget = kDefaultBenchBudget;
      if (config.method == Method::ratio && !config.r) {
        config.r = base.profile == BenchProfile::ratio ? Rational(2) : Rational(1);
      }
      break;
    case Method::coppersmith_msb: {
      const unsigned known = known_quarter_bits(inst.n);
      const std::size_t len = bit_length(inst.p);
      const unsigned unknown = len > known ? static_cast<unsigned>(len - known) : 0;
      config.p0 = (inst.p >> unknown) << unknown;
      break;
    }
    case Method::coppersmith_lsb: {
      const unsigned known = known_quarter_bits(inst.n);
      config.k_bits = known;
      config.low_bits = mod(inst.p, pow(Integer(2), known));
      break;
    }
    default:
      break;
  }
  return config;
}

struct BenchLine {
  RunReport report;
  std::string label;
  std::string error;
};

std::string bench_line_text(const BenchLine& line, OutputFormat format) {
  if (format == OutputFormat::json_lines) {
    Json j = Json::parse(to_json_line(line.report));
    j["success"] = line.report.success();
    j["instance"] = line.label;
    if (!line.error.empty()) j["error"] = line.error;
    return j.dump();
  }
  std::string out = "n=" + line.report.n.get_str() + " method=" + to_string(line.report.method) +
                    " outcome=" + line.report.outcome;
  if (line.report.steps) out += " steps=" + std::to_string(*line.report.steps);
  if (!line.error.empty()) out += " error=\"" + line.error + "\"";
  return out + " [" + line.label + "]";
}

}  // namespace

int bench(const RunConfig& config, std::ostream& out) {
  const auto population = generate_population(config.profile, config.bench_count, config.bits, config.seed);
  std::vector<std::optional<BenchLine>> results(population.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= population.size()) return;
      BenchLine line;
      line.label = population[i].label;
      const RunConfig instance = instance_config(config, population[i]);
      try {
        line.report = run(instance);
      } catch (const std::exception& e) {
        line.report.n = instance.n;
        line.report.method = instance.method;
        line.report.params = method_params(instance);
        line.report.outcome = "error";
        line.error = e.what();
      }
      std::lock_guard lock(mutex);
      results[i] = std::move(line);
      ready.notify_all();
    }
  };

  std::vector<std::thread> workers;
  const unsigned count = bench_workers(population.size());
  for (unsigned t = 0; t < count; ++t) workers.emplace_back(work);

  // Single writer: lines leave in index order regardless of completion order.
  std::vector<std::uint64_t> steps;
  std::size_t successes = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return results[i].has_value(); });
    const BenchLine line = *results[i];
    lock.unlock();
    out << bench_line_text(line, config.format) << "\n";
    if (line.report.success()) ++successes;
    if (line.report.steps) steps.push_back(*line.report.steps);
  }
  for (auto& w : workers) w.join();

  Rational median = 0;
  Rational mean = 0;
  if (!steps.empty()) {
    std::sort(steps.begin(), steps.end());
    const std::size_t mid = steps.size() / 2;
    auto as_integer = [](std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); };
    median = steps.size() % 2 == 1 ? Rational(as_integer(steps[mid]))
                                   : Rational(as_integer(steps[mid - 1]) + as_integer(steps[mid]), 2);
    Integer total = 0;
    for (auto s : steps) total += as_integer(s);
    mean = Rational(total, static_cast<unsigned long>(steps.size()));
    mean.canonicalize();
    median.canonicalize();
  }
  if (config.format == OutputFormat::json_lines) {
    Json summary;
    summary["summary"] = true;
    summary["method"] = to_string(config.method);
    summary["profile"] = to_string(config.profile);
    summary["count"] = std::to_string(population.size());
    summary["success"] = std::to_string(successes);
    summary["median_steps"] = to_fixed_trimmed(median, 2);
    summary["mean_steps"] = to_fixed_trimmed(mean, 2);
    out << summary.dump() << "\n";
  } else {
    out << "summary: method=" << to_string(config.method) << " profile=" << to_string(config.profile)
        << " count=" << population.size() << " success=" << successes << " median_steps=" << to_fixed_trimmed(median, 2)
        << " mean_steps=" << to_fixed_trimmed(mean, 2) << "\n";
  }
  return 0;
}

namespace {

double log2_of(const Integer& v) {
  if (v <= 0) return 0.0;
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

bool contains_factor(const std::vector<RootSolution>& roots, const Integer& p) {
  return std::any_of(roots.begin(), roots.end(), [&](const RootSolution& r) { return r.p == p; });
}

}  // namespace

std::vector<EnvelopeRow> envelope_report(std::uint64_t seed, std::size_t per_row, unsigned bits,
                                         const std::vector<unsigned>& unknown_bits) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  std::vector<EnvelopeRow> rows;
  for (unsigned u : unknown_bits) {
    EnvelopeRow row;
    row.bits = bits;
    row.unknown_bits = u;
    while (row.instances < per_row) {
      // Balanced split: both factors of bits/2 bits, p < q < 2p.
      Integer p = random_prime(rng, bits / 2);
      Integer q = random_prime(rng, bits / 2);
      if (p == q || std::max(p, q) >= 2 * std::min(p, q)) continue;
      if (q < p) std::swap(p, q);
      const Integer n = p * q;
      const Integer P0 = (p >> u) << u;
      const Integer X = pow(Integer(2), u);
      const auto top = msb_top_problem(n, P0, X);
      if (!top) continue;
      ++row.instances;
      const bool certified = certified_regime(*top);
      if (certified) ++row.certified;
      row.mean_log2_xy += log2_of(top->X * top->Y);
      row.mean_log2_w += log2_of(norms(scale_vars(factoring_polynomial(*top), {top->X, top->Y})).height);

      for (unsigned level = 1; level <= 2; ++level) {
        std::optional<std::vector<RootSolution>> roots;
        try {
          roots = solve_single_lattice(*top, level);
        } catch (const Error&) {
          // f(0, 0) = 0: the centre is the root itself; treat as not measured.
        }
        if (roots && contains_factor(*roots, p)) ++(level == 1 ? row.single_level1 : row.single_level2);
      }

      const auto start = std::chrono::steady_clock::now();
      const SolveReport full = solve_msb_known(n, P0, X);
      row.mean_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      row.mean_boxes += static_cast<double>(full.stats.boxes);
      if (contains_factor(full.roots, p)) {
        ++row.split_success;
        if (certified) ++row.certified_split_success;
      }
    }
    if (row.instances > 0) {
      const double k = static_cast<double>(row.instances);
      row.mean_log2_xy /= k;
      row.mean_log2_w /= k;
      row.mean_boxes /= k;
      row.mean_ms /= k;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string to_json_line(const EnvelopeRow& row) {
  Json j;
  j["bits"] = std::to_string(row.bits);
  j["unknown_bits"] = std::to_string(row.unknown_bits);
  j["instances"] = std::to_string(row.instances);
  j["certified"] = std::to_string(row.certified);
  j["log2_xy"] = row.mean_log2_xy;
  j["log2_w"] = row.mean_log2_w;
  j["single_lattice_level1"] = std::to_string(row.single_level1);
  j["single_lattice_level2"] = std::to_string(row.single_level2);
  j["split_success"] = std::to_string(row.split_success);
  j["certified_split_success"] = std::to_string(row.certified_split_success);
  j["mean_boxes"] = row.mean_boxes;
  j["mean_ms"] = row.mean_ms;
  return j.dump();
}

}  // namespace factorlab::cli
