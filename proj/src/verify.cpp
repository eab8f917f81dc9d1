#include <cmath>
#include <stdexcept>

#include "vilenkin/experiment.hpp"
#include "vilenkin/hardy.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/summability.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

constexpr std::uint64_t kSeedBase = 0x56494c4b494e5345ull;

double tol(const ExperimentConfig& config, const std::string& name, double fallback) {
  auto it = config.tolerances.find(name);
  return it == config.tolerances.end() ? fallback : it->second;
}

struct Suite {
  const ExperimentConfig& config;
  std::vector<CheckResult> results;

  void add(const std::string& name, double dev, double fallback_tol) {
    double threshold = tol(config, name, fallback_tol);
    results.push_back({name, dev, threshold, dev <= threshold});
  }
  void add_info(const std::string& name, double dev) {
    results.push_back({name, dev, std::numeric_limits<double>::infinity(), true});
  }
};

struct Context {
  RadixSequence radix;
  int resolution;
  std::int64_t grid;
  bool dyadic;  // every m_k == 2
  DirichletTable dtable;
  FejerTable ftable;
  Eigen::MatrixXcd characters;        // column n = psi_n on the grid
  std::vector<std::int64_t> sub_index;  // sub_index[x * grid + h] = index(x - h)

  Context(const RadixSequence& r, int res)
      : radix(r), resolution(res), grid(r.grid_size(res)),
        dtable(r, res, r.grid_size(res)), ftable(r, res, r.grid_size(res)) {
    dyadic = true;
    for (int k = 0; k < radix.depth(); ++k)
      if (radix.radix(k) != 2) dyadic = false;
    characters.resize(grid, grid);
    for (std::int64_t n = 0; n < grid; ++n)
      characters.col(n) = vilenkin_function(n, radix, resolution).values;
    sub_index.resize(static_cast<std::size_t>(grid * grid));
    for (std::int64_t x = 0; x < grid; ++x) {
      GroupPoint xp = point_from_index(x, resolution, radix);
      for (std::int64_t h = 0; h < grid; ++h) {
        GroupPoint hp = point_from_index(h, resolution, radix);
        sub_index[static_cast<std::size_t>(x * grid + h)] =
            index_of_point(point_sub(xp, hp, radix), radix);
      }
    }
  }

  double lebesgue(std::int64_t n) const {
    return dtable.rows().row(n).cwiseAbs().mean();
  }
};

// ---------------------------------------------------------------- group ----

void check_group(Suite& s, const Context& c) {
  double dev = 0.0;
  for (std::int64_t n = 0; n < c.grid; ++n) {
    auto e = expand_index(n, c.radix);
    if (compose_index(e.digits, c.radix) != n) dev += 1.0;
  }
  s.add("group.index_roundtrip", dev, 0.0);

  dev = 0.0;
  std::int64_t stride = c.grid <= 512 ? 1 : c.grid / 512;
  for (std::int64_t x = 0; x < c.grid; x += stride) {
    GroupPoint xp = point_from_index(x, c.resolution, c.radix);
    if (index_of_point(point_sub(xp, xp, c.radix), c.radix) != 0) dev += 1.0;
    for (std::int64_t y = 0; y < c.grid; y += stride) {
      GroupPoint yp = point_from_index(y, c.resolution, c.radix);
      GroupPoint back = point_sub(point_add(xp, yp, c.radix), yp, c.radix);
      if (index_of_point(back, c.radix) != x) dev += 1.0;
    }
  }
  s.add("group.point_group_laws", dev, 0.0);

  dev = 0.0;
  for (std::int64_t n = 1; n < c.grid; ++n) {
    auto lt = lead_trail(n, c.radix);
    if (!(c.radix.product(lt.trail) <= n && n < c.radix.product(lt.trail + 1))) dev += 1.0;
    if (expand_index(n, c.radix).digits[static_cast<std::size_t>(lt.lead)] == 0) dev += 1.0;
  }
  s.add("group.lead_trail_consistency", dev, 0.0);

  std::int64_t classified = 0;
  dev = 0.0;
  for (std::int64_t t = 0; t < c.grid; ++t) {
    GroupPoint x = point_from_index(t, c.resolution, c.radix);
    CosetClass cls = classify_coset(x, c.resolution, c.radix);
    if (t == 0) {
      if (!cls.inside) dev += 1.0;
      continue;
    }
    if (cls.inside) { dev += 1.0; continue; }
    classified++;
    // membership predicate of I_N^{k,l}
    bool ok = x.digits[static_cast<std::size_t>(cls.k)] != 0;
    for (int j = 0; j < cls.k; ++j) ok = ok && x.digits[static_cast<std::size_t>(j)] == 0;
    int upto = cls.l == c.resolution ? c.resolution : cls.l;
    for (int j = cls.k + 1; j < upto; ++j)
      ok = ok && x.digits[static_cast<std::size_t>(j)] == 0;
    if (cls.l < c.resolution) ok = ok && x.digits[static_cast<std::size_t>(cls.l)] != 0;
    if (!ok) dev += 1.0;
  }
  double measure_gap = std::abs(static_cast<double>(classified) / static_cast<double>(c.grid) -
                                (1.0 - 1.0 / static_cast<double>(c.grid)));
  s.add("group.coset_partition", dev + measure_gap, 1e-15);

  if (c.dyadic) {
    dev = 0.0;
    for (int n = 1; 2 * n < c.radix.depth(); ++n) {
      std::int64_t q = special_index_q(n, c.radix);
      if (q >= c.grid) break;
      auto var = variation(q, c.radix);
      dev = std::max(dev, std::abs(static_cast<double>(var.v - 2 * n)));
    }
    s.add("group.variation_q_identity", dev, 0.0);
  }
}

// ------------------------------------------------------------ transform ----

void check_transform(Suite& s, const Context& c) {
  const std::int64_t gram_cap = 256;
  std::int64_t m = std::min(c.grid, gram_cap);
  Eigen::MatrixXcd gram = c.characters.leftCols(m).adjoint() * c.characters.leftCols(m) /
                          static_cast<double>(c.grid);
  double dev = (gram - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
  s.add("transform.orthonormality_gram", dev, 1e-10);

  dev = 0.0;
  for (std::int64_t n = 0; n < m; ++n)
    for (std::int64_t h = 0; h < c.grid; ++h) {
      Complex factor = std::conj(c.characters(h, n));
      for (std::int64_t x = 0; x < c.grid; x += 7) {  // strided grid scan
        std::int64_t xm = c.sub_index[static_cast<std::size_t>(x * c.grid + h)];
        dev = std::max(dev, std::abs(c.characters(xm, n) - factor * c.characters(x, n)));
      }
    }
  s.add("transform.character_shift", dev, 1e-12);

  dev = 0.0;
  double dev_rt = 0.0, dev_parseval = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + trial);
    CoefficientVector fast = forward(f);
    CoefficientVector naive = forward_naive(f);
    dev = std::max(dev, (fast.coeff - naive.coeff).cwiseAbs().maxCoeff());
    dev_rt = std::max(dev_rt, max_abs_diff(inverse(fast), f));
    double energy = std::pow(lp_norm(f, 2.0), 2.0);
    dev_parseval = std::max(dev_parseval, std::abs(fast.coeff.squaredNorm() - energy));
  }
  s.add("transform.fast_vs_naive", dev, 1e-10);
  s.add("transform.roundtrip", dev_rt, 1e-10);
  s.add("transform.parseval", dev_parseval, 1e-10);

  dev = 0.0;
  double dev_conv = 0.0, dev_sym = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + 1000 + trial);
    GridFunction g = random_grid_function(c.radix, c.resolution, kSeedBase + 2000 + trial);
    GridFunction direct = convolve_direct(f, g);
    CoefficientVector cf = forward(f), cg = forward(g), ch = forward(direct);
    dev = std::max(dev, (ch.coeff - cf.coeff.cwiseProduct(cg.coeff)).cwiseAbs().maxCoeff());
    dev_conv = std::max(dev_conv, max_abs_diff(convolve_fast(f, g), direct));
    dev_sym = std::max(dev_sym, max_abs_diff(direct, convolve_direct(g, f)));
  }
  s.add("transform.convolution_theorem", dev, 1e-10);
  s.add("transform.convolve_fast_vs_direct", dev_conv, 1e-9);
  s.add("grid.convolution_symmetry", dev_sym, 1e-10);
}

// ----------------------------------------------------------------- grid ----

void check_grid(Suite& s, const Context& c) {
  double dev = 0.0;
  const double ps[] = {1.0 / 3.0, 0.5, 1.0, 2.0};
  for (int trial = 0; trial < 100; ++trial) {
    GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + 3000 + trial);
    for (double p : ps) dev = std::max(dev, weak_lp_norm(f, p) - lp_norm(f, p));
  }
  s.add("grid.weak_le_strong", std::max(0.0, dev), 1e-12);

  dev = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + 4000 + trial);
    std::int64_t h = (trial * 37 + 11) % c.grid;
    GridFunction shifted = translate(f, point_from_index(h, c.resolution, c.radix));
    for (double p : {1.0, 2.0})
      dev = std::max(dev, std::abs(lp_norm(shifted, p) - lp_norm(f, p)));
    dev = std::max(dev,
                   std::abs(shifted.values.cwiseAbs().maxCoeff() - f.values.cwiseAbs().maxCoeff()));
  }
  s.add("grid.translate_isometry", dev, 1e-12);
}

// -------------------------------------------------------------- kernels ----

void check_kernels(Suite& s, const Context& c) {
  // Paley lemma: exactly zero on lattices whose roots decompose over
  // {0, +-1/2, +-1, +-sqrt3/2, +-sqrt2/2}; float dust otherwise
  double dev = 0.0;
  for (int n = 0; n <= c.resolution; ++n) {
    GridFunction paley = Complex(static_cast<double>(c.radix.product(n)), 0.0) *
                         indicator_In(c.radix, c.resolution, n);
    dev = std::max(dev, (c.dtable.rows().row(c.radix.product(n)).transpose() - paley.values)
                            .cwiseAbs()
                            .maxCoeff());
  }
  s.add("kernels.paley_exact", dev, PhaseLattice(c.radix).exact() ? 0.0 : 1e-10);

  dev = 0.0;
  for (std::int64_t n = 0; n <= c.grid; ++n)
    dev = std::max(dev, (dirichlet_closed(n, c.radix, c.resolution).values -
                         c.dtable.rows().row(n).transpose())
                            .cwiseAbs()
                            .maxCoeff());
  s.add("kernels.dirichlet_closed_equiv", dev, 1e-10);

  dev = 0.0;
  for (std::int64_t n = 1; n <= c.grid; ++n)
    dev = std::max(dev, max_abs_diff(fejer_closed(n, c.radix, c.resolution), c.ftable.kernel(n)));
  s.add("kernels.fejer_closed_equiv", dev, 1e-9);

  dev = 0.0;
  for (int n = 0; n <= c.resolution; ++n)
    dev = std::max(dev, max_abs_diff(fejer_gat(n, c.radix, c.resolution),
                                     c.ftable.kernel(c.radix.product(n))));
  s.add("kernels.fejer_gat_equiv", dev, 1e-10);

  // Shift identities (both parts of the classical Dirichlet lemma)
  dev = 0.0;
  for (int n = 0; n < c.resolution; ++n) {
    std::int64_t mn = c.radix.product(n);
    Eigen::VectorXcd psi_mn = c.characters.col(mn);
    std::int64_t jmax = (c.radix.radix(n) - 1) * mn;
    for (std::int64_t j = 0; j <= jmax && j + mn <= c.grid; ++j) {
      Eigen::VectorXcd lhs = c.dtable.rows().row(j + mn).transpose();
      Eigen::VectorXcd rhs = c.dtable.rows().row(mn).transpose() +
                             psi_mn.cwiseProduct(c.dtable.rows().row(j).transpose());
      dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    for (int sn = 1; sn < c.radix.radix(n); ++sn) {
      std::int64_t snm = sn * mn;
      Eigen::VectorXcd psi_top = c.characters.col(snm - 1);
      for (std::int64_t j = 0; j < mn; ++j) {
        Eigen::VectorXcd lhs = c.dtable.rows().row(snm - j).transpose();
        Eigen::VectorXcd rhs =
            c.dtable.rows().row(snm).transpose() -
            psi_top.cwiseProduct(c.dtable.rows().row(j).transpose().conjugate());
        dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  }
  s.add("kernels.dirichlet_shift_identities", dev, 1e-12);

  // Product formula for D_{M_{n+1}}
  dev = 0.0;
  for (int n = 0; n < c.resolution; ++n) {
    Eigen::VectorXcd product = Eigen::VectorXcd::Ones(c.grid);
    for (int k = 0; k <= n; ++k) {
      Eigen::VectorXcd level = Eigen::VectorXcd::Zero(c.grid);
      for (int sdig = 0; sdig < c.radix.radix(k); ++sdig)
        level += c.characters.col(static_cast<std::int64_t>(sdig) * c.radix.product(k));
      product = product.cwiseProduct(level);
    }
    dev = std::max(dev,
                   (product - c.dtable.rows().row(c.radix.product(n + 1)).transpose())
                       .cwiseAbs()
                       .maxCoeff());
  }
  s.add("kernels.dirichlet_product_formula", dev, 1e-12);

  // |D_n| = |D_{n - M_|n|}| on I_<n> \ I_<n>+1, with |D_n| >= M_<n> on the
  // digit-1 sub-coset (the Rademacher-sum bound needs x_<n> = 1; for
  // m_j = 4 and digit 2 the kernel genuinely vanishes there)
  dev = 0.0;
  for (std::int64_t n = 1; n < c.grid; ++n) {
    auto lt = lead_trail(n, c.radix);
    if (lt.lead == lt.trail) continue;
    std::int64_t mlead = c.radix.product(lt.lead);
    std::int64_t reduced = n - c.radix.product(lt.trail);
    double bound = static_cast<double>(mlead);
    for (std::int64_t u = 0; u * mlead < c.grid; ++u) {
      int digit = static_cast<int>(u % c.radix.radix(lt.lead));
      if (digit == 0) continue;  // stay off I_{lead+1}
      std::int64_t t = u * mlead;
      double dn = std::abs(c.dtable.rows()(n, t));
      double dr = std::abs(c.dtable.rows()(reduced, t));
      dev = std::max(dev, std::abs(dn - dr));
      if (digit == 1) dev = std::max(dev, bound - dn);
    }
  }
  s.add("kernels.dirichlet_lower_bound", std::max(0.0, dev), 1e-9);

  // n|K_n| >= M_<n>^2/(2 pi lambda) on I_{<n>+1}(e_{<n>-1} + e_<n>)
  dev = 0.0;
  for (std::int64_t n = 1; n < c.grid; ++n) {
    auto lt = lead_trail(n, c.radix);
    if (lt.lead == lt.trail || lt.lead < 1 || lt.lead + 1 > c.resolution) continue;
    double bound = std::pow(static_cast<double>(c.radix.product(lt.lead)), 2.0) /
                   (2.0 * M_PI * static_cast<double>(c.radix.lambda()));
    std::int64_t base = c.radix.product(lt.lead - 1) + c.radix.product(lt.lead);
    std::int64_t step = c.radix.product(lt.lead + 1);
    for (std::int64_t u = 0; base + u * step < c.grid; ++u) {
      std::int64_t t = base + u * step;
      double val = static_cast<double>(n) * std::abs(c.ftable.rows()(n - 1, t));
      dev = std::max(dev, bound - val);
    }
  }
  s.add("kernels.fejer_lower_bound", std::max(0.0, dev), 1e-9);

  // q-index coset bound
  dev = 0.0;
  double viol = 0.0;
  for (int n = 3; 2 * n <= c.resolution && 2 * (n - 1) < c.radix.depth(); ++n) {
    CosetBoundReport rep = kernel_lower_bound_q(n, c.radix, c.resolution);
    viol += static_cast<double>(rep.violations);
    if (rep.cells_checked > 0) dev = std::max(dev, -rep.min_slack);
  }
  s.add("kernels.q_coset_bound", std::max(viol, std::max(0.0, dev)), 1e-9);

  // Lukomskii sandwich for every n
  dev = 0.0;
  for (std::int64_t n = 1; n < c.grid; ++n) {
    double L = c.lebesgue(n);
    LukomskiiBounds b = lukomskii_bounds(n, c.radix);
    dev = std::max(dev, b.lower - L);
    dev = std::max(dev, L - b.upper);
  }
  s.add("kernels.lukomskii_sandwich", std::max(0.0, dev), 1e-9);

  // Bracket n/(2 lambda) <= L_{q_n} <= lambda n for small n
  dev = 0.0;
  double lambda = static_cast<double>(c.radix.lambda());
  for (int n = 1; n <= 3 && 2 * n < c.radix.depth(); ++n) {
    std::int64_t q = special_index_q(n, c.radix);
    if (q >= c.grid) break;
    double L = c.lebesgue(q);
    dev = std::max(dev, static_cast<double>(n) / (2.0 * lambda) - L);
    dev = std::max(dev, L - lambda * static_cast<double>(n));
  }
  s.add("kernels.q_lebesgue_bracket", std::max(0.0, dev), 1e-9);

  if (c.dyadic) {
    double spot = std::max(std::abs(c.lebesgue(3) - 1.5), std::abs(c.lebesgue(5) - 1.75));
    s.add("kernels.lebesgue_spots", spot, 1e-12);
    double worst = 0.0;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(256, c.grid); ++n)
      worst = std::max(worst, lp_norm(c.ftable.kernel(n), 1.0));
    s.add("kernels.yano_bound", std::max(0.0, worst - 2.0), 1e-9);
    s.add("kernels.k2_mass", std::abs(lp_norm(c.ftable.kernel(2), 1.0) - 1.0), 1e-12);
  }

  dev = 0.0;
  double sup_k = 0.0;
  for (std::int64_t n = 1; n <= c.grid; ++n) {
    GridFunction kn = c.ftable.kernel(n);
    dev = std::max(dev, std::abs(integrate(kn) - Complex(1.0, 0.0)));
    sup_k = std::max(sup_k, lp_norm(kn, 1.0));
  }
  s.add("kernels.fejer_mass", dev, 1e-12);
  s.add("kernels.fejer_l1_uniform", sup_k, 20.0);

  WeightSequence kappa = WeightSequence::kappa(1.0, 1.0);
  double sup_f = 0.0;
  for (std::int64_t n = 3; n <= std::min<std::int64_t>(512, c.grid); ++n)
    sup_f = std::max(sup_f, lp_norm(norlund_kernel(n, kappa, c.dtable), 1.0));
  s.add("kernels.norlund_nondecreasing_l1_uniform", sup_f, 20.0);

  double gap = 0.0;
  for (std::int64_t n = 1; n <= c.grid; ++n)
    gap = std::max(gap, c.dtable.rows().row(n).cwiseAbs().maxCoeff() / static_cast<double>(n));
  s.add_info("kernels.fejer_convention_gap_diagnostic", gap);
}

// ---------------------------------------------------------- summability ----

void check_summability(Suite& s, const Context& c) {
  std::vector<std::pair<std::string, WeightSequence>> families = {
      {"fejer", WeightSequence::fejer()},
      {"cesaro(0.5)", WeightSequence::cesaro(0.5)},
      {"riesz(0.5)", WeightSequence::riesz(0.5)},
      {"kappa(1,1)", WeightSequence::kappa(1.0, 1.0)},
      {"nlog", WeightSequence::norlund_log()},
  };
  std::int64_t sweep = std::min<std::int64_t>(256, c.grid);

  double dev = 0.0, dev_const = 0.0;
  for (auto& [name, w] : families) {
    MeanSpec spec = MeanSpec::norlund(w);
    GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + 5000);
    GridFunction ones = constant(c.radix, c.resolution, Complex(1.0, 0.0));
    CoefficientVector cf = forward(f);
    for (std::int64_t n = 1; n <= sweep; ++n) {
      if (!(w.Q(n) > 0.0)) continue;
      GridFunction lhs = mean(cf, spec, n);
      GridFunction rhs = convolve_fast(f, norlund_kernel(n, w, c.dtable));
      dev = std::max(dev, max_abs_diff(lhs, rhs));
      GridFunction tone = mean(ones, spec, n);
      dev_const = std::max(dev_const,
                           (tone.values.array() - Complex(1.0, 0.0)).cwiseAbs().maxCoeff());
    }
  }
  s.add("summability.multiplier_vs_kernel", dev, 1e-9);
  s.add("summability.mean_of_constants", dev_const, 1e-12);

  dev = 0.0;
  for (auto& [name, w] : families) {
    if (!w.non_increasing(10000)) continue;
    for (std::int64_t n = 1; n <= 10000; ++n)
      dev = std::max(dev, regularity_ratio(w, n) * static_cast<double>(n) - 1.0);
  }
  s.add("summability.regularity_nonincreasing", std::max(0.0, dev), 1e-12);

  {
    std::vector<double> powers;
    for (int k = 0; k <= 512; ++k) powers.push_back(std::pow(2.0, k));
    WeightSequence w = WeightSequence::custom(powers);
    double worst = 1.0;
    for (std::int64_t n = 1; n <= 512; ++n)
      worst = std::min(worst, regularity_ratio(w, n));
    s.add("summability.regularity_powers_of_two", std::max(0.0, 0.5 - worst), 0.0);
  }

  dev = 0.0;
  for (double alpha : {0.3, 0.5, 0.9}) {
    const std::int64_t top = 10000;
    std::vector<double> a(top + 1), a_shift(top + 1);
    long double ra = 1.0L, rs = 1.0L;
    for (std::int64_t n = 0; n <= top; ++n) {
      if (n > 0) {
        ra *= (static_cast<long double>(alpha) + n) / n;
        rs *= (static_cast<long double>(alpha) - 1.0L + n) / n;
      }
      a[static_cast<std::size_t>(n)] = static_cast<double>(ra);
      a_shift[static_cast<std::size_t>(n)] = static_cast<double>(rs);
    }
    long double node0 = 0.0L;
    for (std::int64_t n = 0; n <= top; ++n) {
      double an = a[static_cast<std::size_t>(n)];
      node0 += static_cast<long double>(a_shift[static_cast<std::size_t>(n)]);
      dev = std::max(dev, std::abs(static_cast<double>(node0) - an) / an);
      if (n >= 1) {
        double diff = an - a[static_cast<std::size_t>(n - 1)];
        dev = std::max(dev, std::abs(diff - a_shift[static_cast<std::size_t>(n)]) / an);
      }
    }
  }
  s.add("summability.cesaro_identities", dev, 1e-12);

  {
    GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + 6000);
    std::vector<std::int64_t> small, large;
    for (int n = 0; n <= c.resolution; ++n) {
      if (n % 2 == 0) small.push_back(std::max<std::int64_t>(1, c.radix.product(n)));
      large.push_back(std::max<std::int64_t>(1, c.radix.product(n)));
    }
    GridFunction ms = maximal_function(f, MeanSpec::norlund(WeightSequence::fejer()), small);
    GridFunction ml = maximal_function(f, MeanSpec::norlund(WeightSequence::fejer()), large);
    double worst = 0.0;
    for (std::int64_t t = 0; t < c.grid; ++t)
      worst = std::max(worst, ms.values[t].real() - ml.values[t].real());
    s.add("summability.maximal_monotonicity", std::max(0.0, worst), 0.0);
  }

  // Watari bracket via the fast translation table
  dev = 0.0;
  for (double p : {1.0, 2.0}) {
    for (int trial = 0; trial < 200; ++trial) {
      GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + 7000 + trial);
      CoefficientVector cf = forward(f);
      for (int n = 0; n <= c.resolution; ++n) {
        GridFunction tail = f - partial_sum(cf, c.radix.product(n));
        double d = lp_norm(tail, p);
        double omega = 0.0;
        GridFunction diff = make_grid(c.radix, c.resolution);
        for (std::int64_t u = 1; u * c.radix.product(n) < c.grid; ++u) {
          std::int64_t h = u * c.radix.product(n);
          for (std::int64_t x = 0; x < c.grid; ++x)
            diff.values[x] =
                f.values[c.sub_index[static_cast<std::size_t>(x * c.grid + h)]] - f.values[x];
          omega = std::max(omega, lp_norm(diff, p));
        }
        dev = std::max(dev, 0.5 * omega - d);
        dev = std::max(dev, d - omega);
      }
    }
  }
  s.add("summability.watari_bracket", std::max(0.0, dev), 1e-10);

  // Pointwise Riesz-vs-Fejer domination, R* <= c sigma*
  double cmax = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + 8000 + trial);
    CoefficientVector cf = forward(f);
    Eigen::VectorXcd running = Eigen::VectorXcd::Zero(c.grid);   // S_k f
    Eigen::VectorXcd weighted = Eigen::VectorXcd::Zero(c.grid);  // sum S_k/k
    Eigen::VectorXcd sigma_acc = Eigen::VectorXcd::Zero(c.grid);
    Eigen::VectorXd sigma_star = Eigen::VectorXd::Zero(c.grid);
    Eigen::VectorXd riesz_star = Eigen::VectorXd::Zero(c.grid);
    for (std::int64_t k = 1; k <= c.grid; ++k) {
      running += cf.coeff[k - 1] * c.characters.col(k - 1);
      sigma_acc += running;
      sigma_star = sigma_star.cwiseMax((sigma_acc / static_cast<double>(k)).cwiseAbs());
      if (k >= 2) {
        double ln = harmonic_l(k);
        riesz_star = riesz_star.cwiseMax((weighted / ln).cwiseAbs());
      }
      weighted += running / static_cast<double>(k);
    }
    for (std::int64_t t = 0; t < c.grid; ++t) {
      if (sigma_star[t] <= 0.0) continue;
      cmax = std::max(cmax, riesz_star[t] / sigma_star[t]);
    }
  }
  s.add("summability.riesz_fejer_domination", cmax, 2.0);
}

// ---------------------------------------------------------------- hardy ----

void check_hardy(Suite& s, const Context& c) {
  double dev_support = 0.0, dev_mean = 0.0, dev_sup = 0.0, dev_hp = 0.0;
  for (double p : {1.0 / 3.0, 0.5, 1.0}) {
    for (int alpha = 1; alpha <= std::min(5, c.resolution - 1); ++alpha) {
      GridFunction a = make_atom(alpha, p, c.radix, c.resolution);
      std::int64_t ma = c.radix.product(alpha);
      for (std::int64_t t = 0; t < c.grid; ++t)
        if (t % ma != 0) dev_support = std::max(dev_support, std::abs(a.values[t]));
      dev_mean = std::max(dev_mean, std::abs(integrate(a)));
      double bound = std::pow(static_cast<double>(ma), 1.0 / p);
      dev_sup = std::max(dev_sup, a.values.cwiseAbs().maxCoeff() - bound);
      dev_hp = std::max(dev_hp, hp_norm(a, p) - 1.0);
    }
  }
  s.add("hardy.atom_support", dev_support, 0.0);
  s.add("hardy.atom_zero_mean", dev_mean, 1e-12);
  s.add("hardy.atom_sup_bound", std::max(0.0, dev_sup), 1e-12);
  s.add("hardy.atom_hp_bound", std::max(0.0, dev_hp), 1e-9);

  // Coefficient blocks of the built martingales
  double dev_blocks = 0.0;
  for (double p : {0.5}) {
    MartingaleFamilySpec spec;
    spec.p = p;
    spec.resolution = c.resolution;
    spec.family = MartingaleFamily::inv_sqrt_alpha;
    std::int64_t amax = (c.resolution - 1) / 2;
    for (std::int64_t a = 1; a <= amax; ++a) spec.alpha_seq.push_back(a);
    if (spec.alpha_seq.empty()) continue;
    Martingale built = build_martingale(spec, c.radix);
    CoefficientVector cf = forward(built.f);
    double lambda = static_cast<double>(c.radix.lambda());
    for (std::int64_t j = 0; j < c.grid; ++j) {
      Complex expected(0, 0);
      for (std::size_t k = 0; k < built.block_position.size(); ++k) {
        std::int64_t lo = c.radix.product(static_cast<int>(built.block_position[k]));
        std::int64_t hi = c.radix.product(static_cast<int>(built.block_position[k]) + 1);
        if (j >= lo && j < hi) {
          expected = built.lambda_k[k] *
                     std::pow(static_cast<double>(lo), 1.0 / p - 1.0) / lambda;
          break;
        }
      }
      dev_blocks = std::max(dev_blocks, std::abs(cf.coeff[j] - expected));
    }
  }
  s.add("hardy.martingale_coefficient_blocks", dev_blocks, 1e-10);

  if (c.dyadic) {
    double p = 1.0 / 3.0;
    double dev_ratio = 0.0;
    for (std::int64_t nk = 1; 2 * nk + 1 <= c.resolution; ++nk) {
      MartingaleFamilySpec spec;
      spec.p = p;
      spec.resolution = c.resolution;
      spec.family = MartingaleFamily::single_atom;
      spec.alpha_seq = {nk};
      GridFunction f = build_martingale(spec, c.radix).f;
      double m = static_cast<double>(c.radix.product(static_cast<int>(2 * nk)));
      GridFunction sigma =
          mean(f, MeanSpec::norlund(WeightSequence::fejer()), static_cast<std::int64_t>(m) + 1);
      double ratio = weak_lp_norm(sigma, p) / hp_norm(f, p);
      double oracle = std::pow(m, 1.0 / p - 1.0) / (m + 1.0);
      dev_ratio = std::max(dev_ratio, std::abs(ratio - oracle) / oracle);
    }
    s.add("hardy.ex22_divergence_ratio", dev_ratio, 1e-9);
  }

  double dev_max = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    GridFunction f = random_grid_function(c.radix, c.resolution, kSeedBase + 9000 + trial);
    GridFunction star = martingale_maximal(f);
    CoefficientVector cf = forward(f);
    for (int n = 0; n <= c.resolution; ++n) {
      GridFunction sn = partial_sum(cf, c.radix.product(n));
      for (std::int64_t t = 0; t < c.grid; ++t)
        dev_max = std::max(dev_max, std::abs(sn.values[t]) - star.values[t].real());
    }
  }
  s.add("hardy.maximal_dominates_levels", std::max(0.0, dev_max), 1e-12);
}

}  // namespace

std::vector<CheckResult> run_verify(const ExperimentConfig& config) {
  RadixSequence radix = config_radix(config);
  int resolution = config_resolution(config, radix);
  if (radix.grid_size(resolution) > 2048)
    throw std::invalid_argument(
        "verify: exhaustive suites need M_N <= 2048; use the table/divergence "
        "tools for larger grids");
  Context context(radix, resolution);
  Suite suite{config, {}};
  check_group(suite, context);
  check_transform(suite, context);
  check_grid(suite, context);
  check_kernels(suite, context);
  check_summability(suite, context);
  check_hardy(suite, context);
  return suite.results;
}

}  // namespace vilenkin
