// Command-line harness: verification suites, kernel/summability tables,
// and the divergence experiments, with CSV/JSON output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vilenkin/experiment.hpp"

namespace {

struct CliOptions {
  vilenkin::ExperimentConfig config;
  std::string p_list;
  std::string k_range;
  std::vector<std::string> tol_specs;
};

void add_common(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--radix", opts.config.radix_spec,
                  "radix spec, e.g. 2^8 or 2,3,4,3,2")
      ->required();
  cmd->add_option("--resolution", opts.config.resolution, "rank N (default: radix length)");
  cmd->add_option("--p", opts.p_list, "comma list of exponents, e.g. 0.5,1");
  cmd->add_option("--family", opts.config.family,
                  "fejer|cesaro:<a>|riesz:<a>|nlog|kappa:<a>:<b>|custom:<file>");
  cmd->add_option("--max-n", opts.config.max_n, "largest index in sweeps");
  cmd->add_option("--k-range", opts.k_range, "k range a..b for divergence runs");
  cmd->add_option("--tol", opts.tol_specs, "per-check tolerance override name=value");
  cmd->add_option("--format", opts.config.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.config.out_path, "output path (default: stdout)");
}

void finalize(CliOptions& opts) {
  if (!opts.p_list.empty()) {
    opts.config.p_values.clear();
    std::stringstream ss(opts.p_list);
    std::string part;
    while (std::getline(ss, part, ',')) opts.config.p_values.push_back(std::stod(part));
  }
  if (!opts.k_range.empty()) {
    auto dots = opts.k_range.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--k-range expects a..b");
    opts.config.k_lo = std::stoll(opts.k_range.substr(0, dots));
    opts.config.k_hi = std::stoll(opts.k_range.substr(dots + 2));
  }
  for (const auto& spec : opts.tol_specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--tol expects name=value");
    double value = std::stod(spec.substr(eq + 1));
    if (!(value > 0.0)) throw CLI::ValidationError("--tol values must be positive");
    opts.config.tolerances[spec.substr(0, eq)] = value;
  }
}

void emit(const vilenkin::ExperimentConfig& config, const std::string& text) {
  if (config.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path " + config.out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis toolkit for bounded Vilenkin groups"};
  app.require_subcommand(1);

  CliOptions verify_opts, table_opts, div_opts;
  std::string table_kind, div_example;
  std::string div_target = "fejer";

  CLI::App* verify = app.add_subcommand("verify", "run every module invariant suite");
  add_common(verify, verify_opts);

  CLI::App* table = app.add_subcommand("table", "emit a per-index table");
  table->add_option("kind", table_kind, "lebesgue|kernel_norms|means|hardy_sums")->required();
  add_common(table, table_opts);

  CLI::App* divergence = app.add_subcommand("divergence", "run a sharpness experiment");
  divergence->add_option("example", div_example, "ex22|ex251|ex261")->required();
  divergence->add_option("--target", div_target, "fejer|partial|riesz_log|norlund_log");
  add_common(divergence, div_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      finalize(verify_opts);
      auto results = vilenkin::run_verify(verify_opts.config);
      emit(verify_opts.config, verify_opts.config.format == "json"
                                   ? vilenkin::summary_to_json(results)
                                   : vilenkin::summary_to_csv(results));
      return vilenkin::summary_exit_code(results);
    }
    if (table->parsed()) {
      finalize(table_opts);
      emit(table_opts.config,
           vilenkin::run_table(table_opts.config, vilenkin::parse_table_kind(table_kind)));
      return 0;
    }
    if (divergence->parsed()) {
      finalize(div_opts);
      emit(div_opts.config,
           vilenkin::run_divergence(div_opts.config,
                                    vilenkin::parse_divergence_example(div_example),
                                    vilenkin::parse_divergence_target(div_target)));
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
