#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vilenkin/grid.hpp"
#include "vilenkin/radix.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

struct CheckResult {
  std::string check;
  double max_dev = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct ExperimentConfig {
  std::string radix_spec;
  int resolution = -1;  // default: full radix depth
  std::vector<double> p_values{1.0};
  std::string family = "fejer";  // fejer|cesaro:<a>|riesz:<a>|nlog|kappa:<a>:<b>|custom:<file>
  std::int64_t max_n = -1;       // default: min(256, M_N)
  std::int64_t k_lo = 1;
  std::int64_t k_hi = 3;
  std::map<std::string, double> tolerances;  // per-check overrides
  std::string format = "csv";                // csv|json
  std::string out_path;                      // empty: stdout
};

RadixSequence config_radix(const ExperimentConfig& config);
int config_resolution(const ExperimentConfig& config, const RadixSequence& radix);
WeightSequence parse_family(const std::string& family);

/// Deterministic pseudo-random grid function (fixed generator + Box-Muller,
/// identical output across runs and platforms).
GridFunction random_grid_function(const RadixSequence& radix, int resolution,
                                  std::uint64_t seed);

/// Every module invariant suite; one row per named check.
std::vector<CheckResult> run_verify(const ExperimentConfig& config);

enum class TableKind { lebesgue, kernel_norms, means, hardy_sums };
TableKind parse_table_kind(const std::string& name);

std::string run_table(const ExperimentConfig& config, TableKind kind);

enum class DivergenceExample { ex22, ex251, ex261 };
enum class DivergenceTarget { fejer, partial, riesz_log, norlund_log };
DivergenceExample parse_divergence_example(const std::string& name);
DivergenceTarget parse_divergence_target(const std::string& name);

std::string run_divergence(const ExperimentConfig& config, DivergenceExample example,
                           DivergenceTarget target);

std::string summary_to_csv(const std::vector<CheckResult>& results);
std::string summary_to_json(const std::vector<CheckResult>& results);

/// 0 when every check passed, 1 otherwise.
int summary_exit_code(const std::vector<CheckResult>& results);

/// Format a double the way every table and summary does (shortest
/// round-trip representation, deterministic).
std::string format_double(double x);

}  // namespace vilenkin
