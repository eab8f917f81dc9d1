#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vilenkin/experiment.hpp"
#include "vilenkin/kernels.hpp"

using namespace vilenkin;

TEST_CASE("config parsing and validation") {
  ExperimentConfig config;
  CHECK_THROWS_AS(config_radix(config), std::invalid_argument);
  config.radix_spec = "2^6";
  RadixSequence r = config_radix(config);
  CHECK(config_resolution(config, r) == 6);
  config.resolution = 4;
  CHECK(config_resolution(config, r) == 4);
  config.resolution = 9;
  CHECK_THROWS_AS(config_resolution(config, r), std::invalid_argument);
}

TEST_CASE("weight family parsing") {
  CHECK(parse_family("fejer").family() == WeightFamily::fejer);
  CHECK(parse_family("cesaro:0.5").family() == WeightFamily::cesaro);
  CHECK(parse_family("cesaro:0.5").alpha() == doctest::Approx(0.5));
  CHECK(parse_family("riesz:0.7").alpha() == doctest::Approx(0.7));
  CHECK(parse_family("nlog").family() == WeightFamily::norlund_log);
  CHECK(parse_family("kappa:1:1").beta() == doctest::Approx(1.0));
  CHECK_THROWS_AS(parse_family("cesaro"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("unknown"), std::invalid_argument);
}

TEST_CASE("random grid functions are deterministic") {
  RadixSequence r = RadixSequence::parse("2,3,4");
  GridFunction a = random_grid_function(r, 3, 7);
  GridFunction b = random_grid_function(r, 3, 7);
  CHECK(max_abs_diff(a, b) == 0.0);
  GridFunction c = random_grid_function(r, 3, 8);
  CHECK(max_abs_diff(a, c) > 0.0);
}

TEST_CASE("tables are deterministic and carry headers") {
  ExperimentConfig config;
  config.radix_spec = "2^5";
  config.max_n = 20;
  std::string first = run_table(config, TableKind::lebesgue);
  std::string second = run_table(config, TableKind::lebesgue);
  CHECK(first == second);
  CHECK(first.substr(0, first.find('\n')) == "n,L_n,v,v_star,lower,upper,pass");

  // every row passes the sandwich
  std::stringstream rows(first.substr(first.find('\n') + 1));
  std::string line;
  int count = 0;
  while (std::getline(rows, line)) {
    CHECK(line.back() == '1');
    ++count;
  }
  CHECK(count == 20);

  config.family = "cesaro:0.5";
  std::string kn = run_table(config, TableKind::kernel_norms);
  CHECK(kn.substr(0, kn.find('\n')) == "n,family,norm1");

  config.p_values = {1.0};
  std::string means = run_table(config, TableKind::means);
  CHECK(means.find("omega_hp") != std::string::npos);
  CHECK(means.substr(0, means.find('\n')).find("n,norm_p,weight,ratio") == 0);

  config.p_values = {0.5};
  config.k_hi = 2;
  std::string hs = run_table(config, TableKind::hardy_sums);
  CHECK(hs.substr(0, hs.find('\n')) ==
        "k,hardy_running,paley_levels,strong_partial_running,strong_fejer_running");
}

TEST_CASE("json table format") {
  ExperimentConfig config;
  config.radix_spec = "2^4";
  config.max_n = 4;
  config.format = "json";
  std::string text = run_table(config, TableKind::lebesgue);
  CHECK(text.front() == '[');
  CHECK(text.find("\"L_n\"") != std::string::npos);
}

TEST_CASE("divergence table reproduces the closed-form ratios") {
  ExperimentConfig config;
  config.radix_spec = "2^8";
  config.p_values = {1.0 / 3.0};
  config.k_lo = 1;
  config.k_hi = 3;
  std::string text = run_divergence(config, DivergenceExample::ex22, DivergenceTarget::fejer);

  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "k,alpha,block_M,quantity,oracle,growth");
  std::vector<double> quantities, oracles;
  while (std::getline(ss, line)) {
    std::stringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    quantities.push_back(std::stod(cells[3]));
    oracles.push_back(std::stod(cells[4]));
  }
  REQUIRE(quantities.size() == 3);
  const double expected[] = {16.0 / 5.0, 256.0 / 17.0, 4096.0 / 65.0};
  for (int i = 0; i < 3; ++i) {
    CHECK(quantities[i] == doctest::Approx(expected[i]).epsilon(1e-6));
    CHECK(oracles[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    if (i > 0) CHECK(quantities[i] / quantities[i - 1] > 4.0);
  }

  // p = 1 regime shows no growth
  config.p_values = {1.0};
  std::string flat = run_divergence(config, DivergenceExample::ex22, DivergenceTarget::fejer);
  std::stringstream fs(flat);
  std::getline(fs, line);
  std::vector<double> flat_q;
  while (std::getline(fs, line)) {
    std::stringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    flat_q.push_back(std::stod(cells[3]));
  }
  for (std::size_t i = 1; i < flat_q.size(); ++i) CHECK(flat_q[i] <= flat_q[i - 1] + 1e-9);

  ExperimentConfig bad = config;
  bad.k_hi = 9;
  CHECK_THROWS_AS(run_divergence(bad, DivergenceExample::ex22, DivergenceTarget::fejer),
                  std::out_of_range);
}

TEST_CASE("summary serialization and exit codes") {
  std::vector<CheckResult> results{{"alpha", 1e-12, 1e-10, true}, {"beta", 3.0, 1.0, false}};
  std::string csv = summary_to_csv(results);
  CHECK(csv.substr(0, csv.find('\n')) == "check,max_dev,threshold,pass");
  CHECK(csv.find("beta") != std::string::npos);
  std::string json = summary_to_json(results);
  CHECK(json.find("\"pass\": false") != std::string::npos);
  CHECK(summary_exit_code(results) == 1);
  results.pop_back();
  CHECK(summary_exit_code(results) == 0);
}

#ifdef VILENKIN_CLI_PATH
namespace {
int run_cli(const std::string& args) {
  std::string cmd = std::string(VILENKIN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}
}  // namespace

TEST_CASE("cli exit-code contract") {
  CHECK(run_cli("table lebesgue --radix 2^4 --max-n 5") == 0);
  CHECK(run_cli("verify") == 2);                       // missing radix
  CHECK(run_cli("table nonsense --radix 2^4") == 2);   // unknown kind
  CHECK(run_cli("verify --radix 0^4") == 2);           // invalid radix entry
  CHECK(run_cli("verify --radix 2^4 --tol kernels.fejer_l1_uniform=1e-6") == 1);

  std::string out_path = "/tmp/vilenkin_cli_test_out.csv";
  CHECK(run_cli("table lebesgue --radix 2^4 --max-n 5 --out " + out_path) == 0);
  std::ifstream in(out_path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,L_n,v,v_star,lower,upper,pass");
}
#endif

TEST_CASE("tolerance overrides flip a check") {
  ExperimentConfig config;
  config.radix_spec = "2^4";
  // the Fejer L1 sup is always >= 1, so this override must flip the flag
  config.tolerances["kernels.fejer_l1_uniform"] = 1e-3;
  auto results = run_verify(config);
  bool seen = false;
  for (const auto& r : results)
    if (r.check == "kernels.fejer_l1_uniform") {
      seen = true;
      CHECK(r.threshold == 1e-3);
      CHECK_FALSE(r.pass);
    }
  CHECK(seen);
}

TEST_CASE("kernel reports") {
  RadixSequence r = RadixSequence::parse("2^5");
  auto rep = kernel_report(5, r, 5);
  CHECK(rep.index == 5);
  CHECK(rep.l1_norm == doctest::Approx(1.75).epsilon(1e-13));
  CHECK(rep.within_bounds);
  CHECK(rep.closed_matches);
}

TEST_CASE("verify suite on a small dyadic group") {
  ExperimentConfig config;
  config.radix_spec = "2^5";
  auto results = run_verify(config);
  CHECK(results.size() > 20);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) {
      ++failed;
      // the one decided-red identity: v(q_n) = 2n from the source material
      CHECK(r.check == "group.variation_q_identity");
    }
  }
  CHECK(failed <= 1);
  for (const auto& r : results) {
    if (r.check == "kernels.paley_exact") CHECK(r.max_dev == 0.0);
    if (r.check == "kernels.dirichlet_closed_equiv") CHECK(r.pass);
    if (r.check == "kernels.lukomskii_sandwich") CHECK(r.pass);
  }
}
