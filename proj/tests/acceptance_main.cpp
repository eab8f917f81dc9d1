// Acceptance suite: one pass/fail line per criterion, covering the three
// reference groups (2^8, (2,3,4,3,2), 3^5). Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "vilenkin/experiment.hpp"
#include "vilenkin/hardy.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/summability.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;

namespace {

struct Criterion {
  int id;
  std::string label;
  double dev;
  double threshold;
  bool pass;
  std::string note;
};

std::vector<Criterion> criteria;

void report(int id, const std::string& label, double dev, double threshold,
            const std::string& note = "") {
  criteria.push_back({id, label, dev, threshold, dev <= threshold, note});
}

void report_pass(int id, const std::string& label, bool pass, double dev, double threshold,
                 const std::string& note = "") {
  criteria.push_back({id, label, dev, threshold, pass, note});
}

struct Group {
  RadixSequence radix;
  int resolution;
  std::int64_t grid;
  bool dyadic;
  DirichletTable dtable;
  FejerTable ftable;

  explicit Group(const std::string& spec)
      : radix(RadixSequence::parse(spec)), resolution(radix.depth()),
        grid(radix.grid_size(resolution)),
        dtable(radix, resolution, radix.grid_size(resolution)),
        ftable(radix, resolution, radix.grid_size(resolution)) {
    dyadic = true;
    for (int k = 0; k < radix.depth(); ++k)
      if (radix.radix(k) != 2) dyadic = false;
  }

  double lebesgue(std::int64_t n) const { return dtable.rows().row(n).cwiseAbs().mean(); }
};

double cap(double x) { return std::max(0.0, x); }

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Group> groups;
  groups.emplace_back("2^8");
  groups.emplace_back("2,3,4,3,2");
  groups.emplace_back("3^5");

  // 1. orthonormality + fast/naive transform agreement, under 10 s
  {
    auto c1_start = std::chrono::steady_clock::now();
    double dev_gram = 0.0, dev_fast = 0.0;
    for (const Group& g : groups) {
      Eigen::MatrixXcd psi(g.grid, g.grid);
      for (std::int64_t n = 0; n < g.grid; ++n)
        psi.col(n) = vilenkin_function(n, g.radix, g.resolution).values;
      Eigen::MatrixXcd gram = psi.adjoint() * psi / static_cast<double>(g.grid);
      dev_gram = std::max(dev_gram,
                          (gram - Eigen::MatrixXcd::Identity(g.grid, g.grid))
                              .cwiseAbs()
                              .maxCoeff());
      for (int trial = 0; trial < 100; ++trial) {
        GridFunction f = random_grid_function(g.radix, g.resolution, 10000 + trial);
        dev_fast = std::max(dev_fast,
                            (forward(f).coeff - forward_naive(f).coeff).cwiseAbs().maxCoeff());
      }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - c1_start)
                         .count();
    double dev = std::max(dev_gram, dev_fast);
    report_pass(1, "orthonormality and fast-vs-naive transform",
                dev <= 1e-10 && seconds < 10.0, dev, 1e-10,
                "runtime " + format_double(seconds) + " s (budget 10 s)");
  }

  // 2. Paley lemma with zero deviation
  {
    double dev = 0.0;
    for (const Group& g : groups)
      for (int n = 0; n <= g.resolution; ++n) {
        GridFunction paley = Complex(static_cast<double>(g.radix.product(n)), 0.0) *
                             indicator_In(g.radix, g.resolution, n);
        dev = std::max(dev, (g.dtable.rows().row(g.radix.product(n)).transpose() - paley.values)
                                .cwiseAbs()
                                .maxCoeff());
      }
    report(2, "Paley identity D_{M_n} = M_n 1_{I_n}, exact", dev, 0.0);
  }

  // 3. closed-form kernels match the brute sums
  {
    double dev_d = 0.0, dev_f = 0.0;
    for (const Group& g : groups) {
      for (std::int64_t n = 0; n < g.grid; ++n)
        dev_d = std::max(dev_d, (dirichlet_closed(n, g.radix, g.resolution).values -
                                 g.dtable.rows().row(n).transpose())
                                    .cwiseAbs()
                                    .maxCoeff());
      for (std::int64_t n = 1; n < g.grid; ++n)
        dev_f = std::max(dev_f, (fejer_closed(n, g.radix, g.resolution).values -
                                 g.ftable.rows().row(n - 1).transpose())
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    report_pass(3, "closed-form Dirichlet/Fejer kernels equal brute sums",
                dev_d <= 1e-10 && dev_f <= 1e-9, std::max(dev_d, dev_f), 1e-9,
                "dirichlet " + format_double(dev_d) + " vs 1e-10, fejer " +
                    format_double(dev_f) + " vs 1e-9");
  }

  // 4. shift identities
  {
    double dev = 0.0;
    for (const Group& g : groups) {
      for (int n = 0; n < g.resolution; ++n) {
        std::int64_t mn = g.radix.product(n);
        Eigen::VectorXcd psi_mn = vilenkin_function(mn, g.radix, g.resolution).values;
        std::int64_t jmax = (g.radix.radix(n) - 1) * mn;
        for (std::int64_t j = 0; j <= jmax && j + mn <= g.grid; ++j) {
          Eigen::VectorXcd rhs = g.dtable.rows().row(mn).transpose() +
                                 (psi_mn.array() * g.dtable.rows().row(j).transpose().array())
                                     .matrix();
          dev = std::max(dev, (g.dtable.rows().row(j + mn).transpose() - rhs)
                                  .cwiseAbs()
                                  .maxCoeff());
        }
        for (int s = 1; s < g.radix.radix(n); ++s) {
          std::int64_t snm = s * mn;
          Eigen::VectorXcd top = vilenkin_function(snm - 1, g.radix, g.resolution).values;
          for (std::int64_t j = 0; j < mn; ++j) {
            Eigen::VectorXcd rhs =
                g.dtable.rows().row(snm).transpose() -
                (top.array() * g.dtable.rows().row(j).transpose().array().conjugate()).matrix();
            dev = std::max(dev, (g.dtable.rows().row(snm - j).transpose() - rhs)
                                    .cwiseAbs()
                                    .maxCoeff());
          }
        }
      }
    }
    report(4, "Dirichlet shift identities over all admissible (n, j)", dev, 1e-12);
  }

  // 5. Gat's closed form, with the exact dyadic K_4 profile
  {
    double dev = 0.0;
    for (const Group& g : groups)
      for (int n = 0; n <= g.resolution; ++n)
        dev = std::max(dev, (fejer_gat(n, g.radix, g.resolution).values -
                             g.ftable.rows().row(g.radix.product(n) - 1).transpose())
                                .cwiseAbs()
                                .maxCoeff());
    const Group& dy = groups[0];
    GridFunction k4 = fejer_gat(2, dy.radix, dy.resolution);
    const double spots[4] = {2.5, 0.5, 1.0, 0.0};  // by t mod 4 = 0,1,2,3
    double exact = 0.0;
    for (std::int64_t t = 0; t < k4.size(); ++t)
      exact = std::max(exact, std::abs(k4.values[t] - Complex(spots[t % 4], 0.0)));
    report(5, "Gat formula for K_{M_n} and the exact dyadic K_4 profile",
           std::max(dev, exact), 1e-10, "K_4 spot deviation " + format_double(exact));
  }

  // 6. Yano bound in the dyadic case
  {
    const Group& dy = groups[0];
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 256; ++n)
      worst = std::max(worst, dy.ftable.rows().row(n - 1).cwiseAbs().mean());
    double k2 = std::abs(dy.ftable.rows().row(1).cwiseAbs().mean() - 1.0);
    report_pass(6, "Yano bound sup ||K_n||_1 <= 2 and ||K_2||_1 = 1",
                worst <= 2.0 + 1e-9 && k2 <= 1e-12, std::max(cap(worst - 2.0), k2), 1e-9,
                "sup " + format_double(worst) + ", |k2 - 1| = " + format_double(k2) +
                    " vs 1e-12");
  }

  // 7. Lukomskii sandwich, spot Lebesgue constants, v(q_n) identity, bracket
  {
    double dev_sandwich = 0.0;
    for (const Group& g : groups)
      for (std::int64_t n = 1; n < g.grid; ++n) {
        double L = g.lebesgue(n);
        LukomskiiBounds b = lukomskii_bounds(n, g.radix);
        dev_sandwich = std::max(dev_sandwich, std::max(b.lower - L, L - b.upper));
      }
    const Group& dy = groups[0];
    double spots = std::max(std::abs(dy.lebesgue(3) - 1.5), std::abs(dy.lebesgue(5) - 1.75));
    double dev_vq = 0.0, dev_bracket = 0.0;
    for (int n = 1; n <= 3 && 2 * n < dy.radix.depth(); ++n) {
      std::int64_t q = special_index_q(n, dy.radix);
      dev_vq = std::max(dev_vq,
                        std::abs(static_cast<double>(variation(q, dy.radix).v - 2 * n)));
      double L = dy.lebesgue(q);
      double lambda = static_cast<double>(dy.radix.lambda());
      dev_bracket = std::max(dev_bracket, std::max(n / (2.0 * lambda) - L, L - lambda * n));
    }
    double dev = std::max({cap(dev_sandwich), spots, dev_vq, cap(dev_bracket)});
    report(7, "Lukomskii sandwich, L_3/L_5 spots, v(q_n) = 2n, L_{q_n} bracket", dev, 1e-9,
           "sandwich " + format_double(cap(dev_sandwich)) + ", spots " + format_double(spots) +
               ", v(q_n)-2n = " + format_double(dev_vq) +
               " (run-counting variation gives 2n+2; identity kept as stated)");
  }

  // 8. pointwise kernel lower bounds
  {
    double dev = 0.0;
    double viol = 0.0;
    for (const Group& g : groups) {
      for (std::int64_t n = 1; n < g.grid; ++n) {
        auto lt = lead_trail(n, g.radix);
        if (lt.lead == lt.trail) continue;
        std::int64_t mlead = g.radix.product(lt.lead);
        std::int64_t reduced = n - g.radix.product(lt.trail);
        for (std::int64_t u = 0; u * mlead < g.grid; ++u) {
          int digit = static_cast<int>(u % g.radix.radix(lt.lead));
          if (digit == 0) continue;
          std::int64_t t = u * mlead;
          double dn = std::abs(g.dtable.rows()(n, t));
          dev = std::max(dev, std::abs(dn - std::abs(g.dtable.rows()(reduced, t))));
          // the size bound needs the leading digit of x to be 1
          if (digit == 1) dev = std::max(dev, static_cast<double>(mlead) - dn);
        }
        if (lt.lead >= 1 && lt.lead + 1 <= g.resolution) {
          double bound = std::pow(static_cast<double>(mlead), 2.0) /
                         (2.0 * M_PI * static_cast<double>(g.radix.lambda()));
          std::int64_t base = g.radix.product(lt.lead - 1) + mlead;
          std::int64_t step = g.radix.product(lt.lead + 1);
          for (std::int64_t u = 0; base + u * step < g.grid; ++u)
            dev = std::max(dev, bound - static_cast<double>(n) *
                                            std::abs(g.ftable.rows()(n - 1, base + u * step)));
        }
      }
      for (int n = 3; 2 * n <= g.resolution && 2 * (n - 1) < g.radix.depth(); ++n) {
        CosetBoundReport rep = kernel_lower_bound_q(n, g.radix, g.resolution);
        viol += static_cast<double>(rep.violations);
        if (rep.cells_checked > 0) dev = std::max(dev, -rep.min_slack);
      }
    }
    report(8, "pointwise Dirichlet/Fejer/q-index kernel lower bounds",
           std::max(viol, cap(dev)), 1e-9);
  }

  // 9. Norlund engine: multiplier path = kernel path, regularity ratios
  {
    double dev = 0.0;
    for (const Group& g : groups) {
      GridFunction f = random_grid_function(g.radix, g.resolution, 31337);
      CoefficientVector c = forward(f);
      for (const WeightSequence& w :
           {WeightSequence::fejer(), WeightSequence::cesaro(0.5), WeightSequence::riesz(0.5),
            WeightSequence::kappa(1.0, 1.0)}) {
        std::int64_t top = std::min<std::int64_t>(256, g.grid);
        for (std::int64_t n = 1; n <= top; ++n) {
          if (!(w.Q(n) > 0.0)) continue;
          dev = std::max(dev, max_abs_diff(mean(c, MeanSpec::norlund(w), n),
                                           convolve_fast(f, norlund_kernel(n, w, g.dtable))));
        }
      }
    }
    double dev_reg = 0.0;
    for (const WeightSequence& w : {WeightSequence::fejer(), WeightSequence::cesaro(0.5),
                                    WeightSequence::riesz(0.5)}) {
      for (std::int64_t n = 1; n <= 10000; ++n)
        dev_reg = std::max(dev_reg, regularity_ratio(w, n) * static_cast<double>(n) - 1.0);
    }
    std::vector<double> powers;
    for (int k = 0; k <= 256; ++k) powers.push_back(std::pow(2.0, k));
    WeightSequence doubling = WeightSequence::custom(powers);
    for (std::int64_t n = 1; n <= 256; ++n)
      dev_reg = std::max(dev_reg, 0.5 - regularity_ratio(doubling, n));
    report_pass(9, "Norlund multiplier/kernel equivalence and regularity ratios",
                dev <= 1e-9 && dev_reg <= 1e-12, std::max(dev, cap(dev_reg)), 1e-9,
                "multiplier/kernel " + format_double(dev) + " vs 1e-9, regularity " +
                    format_double(cap(dev_reg)) + " vs 1e-12");
  }

  // 10. atom axioms
  {
    double dev_exact = 0.0, dev_hp = 0.0;
    for (const Group& g : groups) {
      int amax = std::min(5, g.resolution - 1);
      for (double p : {1.0 / 3.0, 0.5, 1.0}) {
        for (int alpha = 1; alpha <= amax; ++alpha) {
          GridFunction a = make_atom(alpha, p, g.radix, g.resolution);
          std::int64_t ma = g.radix.product(alpha);
          for (std::int64_t t = 0; t < a.size(); ++t)
            if (t % ma != 0) dev_exact = std::max(dev_exact, std::abs(a.values[t]));
          dev_exact = std::max(dev_exact, std::abs(integrate(a)));
          dev_exact = std::max(dev_exact, cap(a.values.cwiseAbs().maxCoeff() -
                                              std::pow(static_cast<double>(ma), 1.0 / p)));
          dev_hp = std::max(dev_hp, cap(hp_norm(a, p) - 1.0));
        }
      }
    }
    report_pass(10, "p-atom axioms (support, mean, sup bound, H_p bound)",
                dev_exact <= 1e-12 && dev_hp <= 1e-9, std::max(dev_exact, dev_hp), 1e-12,
                "exact parts " + format_double(dev_exact) + " vs 1e-12, H_p " +
                    format_double(dev_hp) + " vs 1e-9; alpha capped at N-1 on depth-5 groups");
  }

  // 11. Watari bracket
  {
    double dev = 0.0;
    for (const Group& g : groups) {
      for (int trial = 0; trial < 200; ++trial) {
        GridFunction f = random_grid_function(g.radix, g.resolution, 50000 + trial);
        CoefficientVector c = forward(f);
        for (double p : {1.0, 2.0}) {
          for (int n = 0; n <= g.resolution; ++n) {
            double omega = modulus_lp(f, n, p);
            double d = lp_norm(f - partial_sum(c, g.radix.product(n)), p);
            dev = std::max(dev, 0.5 * omega - d);
            dev = std::max(dev, d - omega);
          }
        }
      }
    }
    report(11, "Watari bracket (1/2) omega_p <= ||f - S_{M_n} f||_p <= omega_p",
           cap(dev), 1e-10);
  }

  // 12. Hardy/Paley/strong ratios stay within a factor 2 across resolutions
  {
    double worst_factor = 1.0;
    const RadixSequence dy10 = RadixSequence::parse("2^8");
    for (double p : {1.0 / 3.0, 0.5}) {
      std::vector<double> hardy_r, paley_r, strong_r;
      for (int res = 4; res <= 8; ++res) {
        RadixSequence r = RadixSequence::parse("2^" + std::to_string(res));
        GridFunction a = make_atom(2, p, r, res);
        double hp = hp_norm(a, p);
        hardy_r.push_back(hardy_sum(a, p, r.grid_size(res) - 1) / std::pow(hp, p));
        paley_r.push_back(paley_sum(a, p) / hp);
        strong_r.push_back(strong_sum(a, StrongFlavor::partial, p, r.grid_size(res)) /
                           std::pow(hp, p));
      }
      for (const auto& series : {hardy_r, paley_r, strong_r}) {
        for (double v : series) {
          if (series.front() > 0.0)
            worst_factor = std::max(worst_factor,
                                    std::max(v / series.front(), series.front() / v));
        }
      }
    }
    report(12, "Hardy/Paley/strong atom ratios flat across N = 4..8", worst_factor, 2.0);
  }

  // 13. Fejer divergence ratios at p = 1/3
  {
    ExperimentConfig config;
    config.radix_spec = "2^8";
    config.p_values = {1.0 / 3.0};
    config.k_lo = 1;
    config.k_hi = 3;
    std::string table = run_divergence(config, DivergenceExample::ex22, DivergenceTarget::fejer);
    const double expected[] = {16.0 / 5.0, 256.0 / 17.0, 4096.0 / 65.0};
    std::vector<double> measured;
    std::size_t pos = table.find('\n') + 1;
    while (pos < table.size()) {
      std::size_t end = table.find('\n', pos);
      std::string line = table.substr(pos, end - pos);
      int comma = 0;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
          if (comma == 3) measured.push_back(std::stod(line.substr(start, i - start)));
          ++comma;
          start = i + 1;
        }
      }
      pos = end + 1;
    }
    double dev = 1.0;
    bool growth = measured.size() == 3;
    if (measured.size() == 3) {
      dev = 0.0;
      for (int i = 0; i < 3; ++i) dev = std::max(dev, std::abs(measured[i] - expected[i]));
      growth = measured[1] / measured[0] > 4.0 && measured[2] / measured[1] > 4.0;
    }
    report_pass(13, "Fejer divergence ratios 16/5, 256/17, 4096/65 with growth > 4",
                dev <= 1e-6 && growth, dev, 1e-6,
                growth ? "strictly increasing, factor > 4" : "growth condition failed");
  }

  // 14. Riesz logarithmic means dominated by the Fejer maximal function
  {
    double cmax = 0.0;
    for (const Group& g : groups) {
      Eigen::MatrixXcd psi(g.grid, g.grid);
      for (std::int64_t n = 0; n < g.grid; ++n)
        psi.col(n) = vilenkin_function(n, g.radix, g.resolution).values;
      for (int trial = 0; trial < 50; ++trial) {
        GridFunction f = random_grid_function(g.radix, g.resolution, 70000 + trial);
        CoefficientVector c = forward(f);
        Eigen::VectorXcd running = Eigen::VectorXcd::Zero(g.grid);
        Eigen::VectorXcd weighted = Eigen::VectorXcd::Zero(g.grid);
        Eigen::VectorXcd sigma_acc = Eigen::VectorXcd::Zero(g.grid);
        Eigen::VectorXd sigma_star = Eigen::VectorXd::Zero(g.grid);
        Eigen::VectorXd riesz_star = Eigen::VectorXd::Zero(g.grid);
        for (std::int64_t k = 1; k <= g.grid; ++k) {
          running += c.coeff[k - 1] * psi.col(k - 1);
          sigma_acc += running;
          sigma_star = sigma_star.cwiseMax((sigma_acc / static_cast<double>(k)).cwiseAbs());
          if (k >= 2) riesz_star = riesz_star.cwiseMax((weighted / harmonic_l(k)).cwiseAbs());
          weighted += running / static_cast<double>(k);
        }
        for (std::int64_t t = 0; t < g.grid; ++t)
          if (sigma_star[t] > 0.0) cmax = std::max(cmax, riesz_star[t] / sigma_star[t]);
      }
    }
    report(14, "pointwise Riesz-log domination R* <= c sigma* with c < 2", cmax, 2.0,
           "empirical c = " + format_double(cmax));
  }

  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int failures = 0;
  for (const auto& c : criteria) {
    std::printf("%s  %2d. %s  (max_dev=%.3g, threshold=%.3g)%s%s\n",
                c.pass ? "PASS" : "FAIL", c.id, c.label.c_str(), c.dev, c.threshold,
                c.note.empty() ? "" : "  -- ", c.note.c_str());
    if (!c.pass) ++failures;
  }
  bool in_budget = total < 120.0;
  std::printf("%s  15. full suite wall clock < 2 minutes  (%.1f s)\n",
              in_budget ? "PASS" : "FAIL", total);
  if (!in_budget) ++failures;
  std::printf("%d criteria failed\n", failures);
  return failures;
}
