#include "factorlab/cli/config.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "factorlab/error.hpp"

namespace factorlab::cli {

namespace {

constexpr std::array<std::pair<Method, const char*>, 9> kMethodNames = {{
    {Method::standard, "standard"},
    {Method::triangular, "triangular"},
    {Method::ratio, "ratio"},
    {Method::residue, "residue"},
    {Method::landry_pepin, "landry-pepin"},
    {Method::coppersmith_msb, "coppersmith-msb"},
    {Method::coppersmith_lsb, "coppersmith-lsb"},
    {Method::trivariate, "trivariate"},
    {Method::residue_divisors, "residue-divisors"},
}};

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::parse_error, what); }

void require(bool present, Method method, const char* flag) {
  if (!present) usage(std::string("method ") + to_string(method) + " requires " + flag);
}

}  // namespace

const char* to_string(Method method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
  for (const auto& [m, text] : kMethodNames) {
    if (name == text) return m;
  }
  return std::nullopt;
}

std::vector<std::string> method_names() {
  std::vector<std::string> out;
  for (const auto& entry : kMethodNames) out.emplace_back(entry.second);
  return out;
}

const char* to_string(BenchProfile profile) { return profile == BenchProfile::gap ? "gap" : "ratio"; }

void validate(const RunConfig& config) {
  if (config.command == Command::grid) {
    if (config.count == 0) usage("--count must be positive");
    if (config.lower <= 0 || config.upper < config.lower) usage("grid needs 0 < --lower <= --upper");
    return;
  }
  if (config.command == Command::lattice) {
    if (!config.envelope && config.basis.empty()) usage("lattice requires --basis or --envelope");
    return;
  }
  if (config.command == Command::demo) return;
  if (config.command == Command::bench) {
    if (config.bits < 16 || config.bits > 512) usage("--bits must lie in [16, 512]");
    if (config.method == Method::residue || config.method == Method::landry_pepin ||
        config.method == Method::residue_divisors) {
      require(config.m.has_value(), config.method, "--m");
    }
    if (config.method == Method::trivariate) usage("bench does not support method trivariate");
    return;
  }

  if (config.n < 2) usage("--n must be an integer >= 2");
  const Method method = config.method;
  switch (method) {
    case Method::standard:
    case Method::triangular:
      break;
    case Method::ratio:
      require(config.r.has_value(), method, "--r");
      break;
    case Method::residue:
    case Method::residue_divisors:
      require(config.m.has_value(), method, "--m");
      break;
    case Method::landry_pepin:
      require(config.m.has_value(), method, "--m");
      require(config.c.has_value(), method, "--c");
      require(config.d.has_value(), method, "--d");
      break;
    case Method::coppersmith_msb:
      require(config.p0.has_value(), method, "--p0");
      break;
    case Method::coppersmith_lsb:
      require(config.low_bits.has_value(), method, "--low-bits");
      require(config.k_bits.has_value(), method, "--k");
      break;
    case Method::trivariate:
      require(config.p0.has_value(), method, "--p0");
      require(config.big_m.has_value(), method, "--M");
      require(config.z_min.has_value(), method, "--z-min");
      require(config.z_max.has_value(), method, "--z-max");
      break;
  }
}

std::map<std::string, std::string> method_params(const RunConfig& config) {
  std::map<std::string, std::string> out;
  auto put = [&out](const char* key, const auto& value) {
    if (value) {
      std::ostringstream text;
      text << *value;
      out[key] = text.str();
    }
  };
  put("budget", config.budget);
  put("r", config.r);
  put("m", config.m);
  put("m2", config.mod_n);
  put("c", config.c);
  put("d", config.d);
  put("t_bound", config.t_bound);
  put("p0", config.p0);
  put("low_bits", config.low_bits);
  put("k", config.k_bits);
  put("M", config.big_m);
  put("z_min", config.z_min);
  put("z_max", config.z_max);
  put("a_min", config.a_min);
  put("a_max", config.a_max);
  put("x_bound", config.x_bound);
  put("y_bound", config.y_bound);
  return out;
}

IntMatrix parse_basis(const std::string& text) {
  IntMatrix rows;
  std::istringstream row_stream(text);
  std::string row_text;
  while (std::getline(row_stream, row_text, ';')) {
    IntVector row;
    std::istringstream entry_stream(row_text);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) row.push_back(parse_integer(entry));
    if (row.empty()) usage("empty basis row in '" + text + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) usage("empty basis");
  return rows;
}

}  // namespace factorlab::cli
