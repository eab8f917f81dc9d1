#include "vilenkin/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

/// Odometer over k = 0, 1, 2, ... tracking the phase class of psi_k(x) on
/// the lattice. Wrapping a digit changes the phase by a multiple of the
/// lattice order, so only the increment weight enters.
struct PhaseWalker {
  const RadixSequence& radix;
  int resolution;
  std::vector<int> digit;
  std::vector<int> step;  // step[j] = (x_j * L/m_j) mod L
  int order;
  int phase = 0;

  PhaseWalker(const RadixSequence& r, int res, const PhaseLattice& lattice, std::int64_t t)
      : radix(r), resolution(res), digit(static_cast<std::size_t>(res), 0),
        step(static_cast<std::size_t>(res), 0), order(lattice.order()) {
    GroupPoint x = point_from_index(t, res, r);
    for (int j = 0; j < res; ++j)
      step[static_cast<std::size_t>(j)] =
          static_cast<int>((static_cast<std::int64_t>(x.digits[static_cast<std::size_t>(j)]) *
                            lattice.weight(j)) % order);
  }

  void advance() {
    for (int j = 0; j < resolution; ++j) {
      auto& d = digit[static_cast<std::size_t>(j)];
      ++d;
      phase += step[static_cast<std::size_t>(j)];
      if (phase >= order) phase -= order;
      if (d < radix.radix(j)) return;
      d = 0;
    }
  }
};

void check_kernel_index(std::int64_t n, const RadixSequence& radix, int resolution) {
  if (n < 0 || n > radix.grid_size(resolution))
    throw std::out_of_range("kernel index outside [0, M_N]");
}

/// sum_{k=a}^{b-1} roots[(k*d) mod m] for each digit value d.
std::vector<Complex> root_power_sums(int m, int a, int b) {
  auto roots = unit_roots(m);
  std::vector<Complex> sums(static_cast<std::size_t>(m), Complex(0, 0));
  for (int d = 0; d < m; ++d)
    for (int k = a; k < b; ++k)
      sums[static_cast<std::size_t>(d)] += roots[static_cast<std::size_t>((k * d) % m)];
  return sums;
}

}  // namespace

GridFunction dirichlet(std::int64_t n, const RadixSequence& radix, int resolution) {
  check_kernel_index(n, radix, resolution);
  GridFunction f = make_grid(radix, resolution);
  PhaseLattice lattice(radix);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(lattice.order()));
  for (std::int64_t t = 0; t < f.size(); ++t) {
    std::fill(counts.begin(), counts.end(), 0);
    PhaseWalker walk(radix, resolution, lattice, t);
    for (std::int64_t k = 0; k < n; ++k) {
      counts[static_cast<std::size_t>(walk.phase)]++;
      if (k + 1 < n) walk.advance();
    }
    f.values[t] = lattice.dot(counts);
  }
  return f;
}

GridFunction dirichlet_closed(std::int64_t n, const RadixSequence& radix, int resolution) {
  check_kernel_index(n, radix, resolution);
  GridFunction out = make_grid(radix, resolution);
  if (n == 0) return out;
  if (n == radix.grid_size(resolution)) {
    // D_{M_N} is the full-mass Paley case, psi_n does not exist at rank N.
    out.values[0] = static_cast<double>(radix.grid_size(resolution));
    return out;
  }
  auto nd = expand_index(n, radix);
  for (int j = 0; j < resolution; ++j) {
    int digit = nd.digits[static_cast<std::size_t>(j)];
    if (digit == 0) continue;
    int m = radix.radix(j);
    auto tail = root_power_sums(m, m - digit, m);
    std::int64_t mj = radix.product(j);
    std::int64_t cells = out.size() / mj;
    for (std::int64_t s = 0; s < cells; ++s) {
      std::int64_t t = s * mj;  // points of I_j
      int xj = static_cast<int>((t / mj) % m);
      out.values[t] += static_cast<double>(mj) * tail[static_cast<std::size_t>(xj)];
    }
  }
  GridFunction psi = vilenkin_function(n, radix, resolution);
  out.values = psi.values.cwiseProduct(out.values);
  return out;
}

GridFunction fejer(std::int64_t n, const RadixSequence& radix, int resolution) {
  check_kernel_index(n, radix, resolution);
  if (n < 1) throw std::out_of_range("fejer: n must be >= 1");
  GridFunction f = make_grid(radix, resolution);
  PhaseLattice lattice(radix);
  std::size_t order = static_cast<std::size_t>(lattice.order());
  std::vector<std::int64_t> counts(order), cumulative(order);
  for (std::int64_t t = 0; t < f.size(); ++t) {
    std::fill(counts.begin(), counts.end(), 0);
    std::fill(cumulative.begin(), cumulative.end(), 0);
    PhaseWalker walk(radix, resolution, lattice, t);
    for (std::int64_t k = 0; k < n; ++k) {
      counts[static_cast<std::size_t>(walk.phase)]++;
      for (std::size_t r = 0; r < order; ++r) cumulative[r] += counts[r];
      if (k + 1 < n) walk.advance();
    }
    f.values[t] = lattice.dot(cumulative) / static_cast<double>(n);
  }
  return f;
}

GridFunction fejer_gat(int n, const RadixSequence& radix, int resolution) {
  if (n < 0 || n > resolution) throw std::out_of_range("fejer_gat: n outside [0, N]");
  GridFunction f = make_grid(radix, resolution);
  for (std::int64_t idx = 0; idx < f.size(); ++idx) {
    GroupPoint x = point_from_index(idx, resolution, radix);
    int first = -1;
    for (int j = 0; j < n; ++j)
      if (x.digits[static_cast<std::size_t>(j)] != 0) { first = j; break; }
    if (first < 0) {
      f.values[idx] = 0.5 * (static_cast<double>(radix.product(n)) + 1.0);
      continue;
    }
    bool clean_above = true;
    for (int j = first + 1; j < n; ++j)
      if (x.digits[static_cast<std::size_t>(j)] != 0) { clean_above = false; break; }
    if (!clean_above) continue;  // value 0
    int m = radix.radix(first);
    auto roots = unit_roots(m);
    Complex r = roots[static_cast<std::size_t>(x.digits[static_cast<std::size_t>(first)])];
    Complex denom = Complex(1.0, 0.0) - r;
    if (std::abs(denom) < 1e-14)
      throw std::runtime_error("fejer_gat: degenerate 1 - r_t(x)");
    f.values[idx] = static_cast<double>(radix.product(first)) / denom;
  }
  return f;
}

GridFunction fejer_closed(std::int64_t n, const RadixSequence& radix, int resolution) {
  check_kernel_index(n, radix, resolution);
  if (n < 1) throw std::out_of_range("fejer_closed: n must be >= 1");
  if (n == radix.grid_size(resolution))
    return fejer(n, radix, resolution);  // no digit expansion at rank N
  auto nd = expand_index(n, radix);
  // Nonzero digit positions, highest first.
  std::vector<int> positions;
  for (int j = resolution - 1; j >= 0; --j)
    if (nd.digits[static_cast<std::size_t>(j)] != 0) positions.push_back(j);

  GridFunction total = make_grid(radix, resolution);
  GridFunction rho = constant(radix, resolution, Complex(1.0, 0.0));
  std::int64_t remainder = n;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    int pos = positions[k];
    int s = nd.digits[static_cast<std::size_t>(pos)];
    int m = radix.radix(pos);
    std::int64_t mpos = radix.product(pos);
    remainder -= static_cast<std::int64_t>(s) * mpos;

    // c2[d] = sum_{l<s} w^{l d},  c1[d] = sum_{l<s} sum_{i<l} w^{i d}
    auto roots = unit_roots(m);
    std::vector<Complex> c1(static_cast<std::size_t>(m), Complex(0, 0));
    std::vector<Complex> c2(static_cast<std::size_t>(m), Complex(0, 0));
    for (int d = 0; d < m; ++d) {
      Complex partial(0, 0);
      for (int l = 0; l < s; ++l) {
        c1[static_cast<std::size_t>(d)] += partial;
        Complex w = roots[static_cast<std::size_t>((l * d) % m)];
        partial += w;
        c2[static_cast<std::size_t>(d)] += w;
      }
    }

    GridFunction km = fejer_gat(pos, radix, resolution);
    double mass = static_cast<double>(mpos);
    for (std::int64_t t = 0; t < total.size(); ++t) {
      int xpos = static_cast<int>((t / mpos) % m);
      bool in_Ipos = (t % mpos) == 0;
      Complex paley = in_Ipos ? Complex(mass, 0.0) : Complex(0.0, 0.0);
      Complex block = c1[static_cast<std::size_t>(xpos)] * mass * paley +
                      c2[static_cast<std::size_t>(xpos)] * mass * km.values[t];
      Complex contribution = block;
      if (k + 1 < positions.size()) {
        Complex d_sm = paley * c2[static_cast<std::size_t>(xpos)];
        contribution += static_cast<double>(remainder) * d_sm;
      }
      total.values[t] += rho.values[t] * contribution;
    }

    if (k + 1 < positions.size()) {
      for (std::int64_t t = 0; t < total.size(); ++t) {
        int xpos = static_cast<int>((t / mpos) % m);
        rho.values[t] *= roots[static_cast<std::size_t>((s * xpos) % m)];
      }
    }
  }
  total.values /= static_cast<double>(n);
  return total;
}

GridFunction norlund_kernel(std::int64_t n, const WeightSequence& weights,
                            const RadixSequence& radix, int resolution) {
  check_kernel_index(n, radix, resolution);
  if (n < 1) throw std::out_of_range("norlund_kernel: n must be >= 1");
  double qn = weights.Q(n);
  if (!(qn > 0.0)) throw std::domain_error("norlund_kernel: degenerate weights, Q_n <= 0");
  GridFunction f = make_grid(radix, resolution);
  PhaseLattice lattice(radix);
  std::size_t order = static_cast<std::size_t>(lattice.order());
  std::vector<std::int64_t> counts(order);
  for (std::int64_t t = 0; t < f.size(); ++t) {
    std::fill(counts.begin(), counts.end(), 0);
    PhaseWalker walk(radix, resolution, lattice, t);
    Complex acc(0, 0);
    for (std::int64_t k = 0; k < n; ++k) {
      counts[static_cast<std::size_t>(walk.phase)]++;
      // counts now describe D_{k+1}
      acc += weights.q(n - k - 1) * lattice.dot(counts);
      if (k + 1 < n) walk.advance();
    }
    f.values[t] = acc / qn;
  }
  return f;
}

GridFunction norlund_kernel(std::int64_t n, const WeightSequence& weights,
                            const DirichletTable& table) {
  if (n < 1 || n > table.limit()) throw std::out_of_range("norlund_kernel: n outside table");
  double qn = weights.Q(n);
  if (!(qn > 0.0)) throw std::domain_error("norlund_kernel: degenerate weights, Q_n <= 0");
  GridFunction f = make_grid(table.radix(), table.resolution());
  for (std::int64_t k = 1; k <= n; ++k)
    f.values += Complex(weights.q(n - k), 0.0) * table.rows().row(k).transpose();
  f.values /= qn;
  return f;
}

double lebesgue_constant(std::int64_t n, const RadixSequence& radix, int resolution) {
  if (n < 1) throw std::out_of_range("lebesgue_constant: n must be >= 1");
  // brute at exhaustive-sweep sizes; the certified closed form for the
  // single-index spot checks on larger grids
  if (radix.grid_size(resolution) <= 4096)
    return lp_norm(dirichlet(n, radix, resolution), 1.0);
  return lp_norm(dirichlet_closed(n, radix, resolution), 1.0);
}

LukomskiiBounds lukomskii_bounds(std::int64_t n, const RadixSequence& radix) {
  Variation var = variation(n, radix);
  double lambda = static_cast<double>(radix.lambda());
  LukomskiiBounds b;
  b.lower = static_cast<double>(var.v) / (4.0 * lambda) +
            static_cast<double>(var.v_star) / lambda + 1.0 / (2.0 * lambda);
  b.upper = 1.5 * static_cast<double>(var.v) + 4.0 * static_cast<double>(var.v_star) - 1.0;
  return b;
}

KernelReport kernel_report(std::int64_t n, const RadixSequence& radix, int resolution) {
  KernelReport report;
  report.index = n;
  GridFunction brute = dirichlet(n, radix, resolution);
  report.l1_norm = lp_norm(brute, 1.0);
  report.closed_vs_brute_dev = max_abs_diff(dirichlet_closed(n, radix, resolution), brute);
  LukomskiiBounds b = lukomskii_bounds(n, radix);
  report.within_bounds = b.lower <= report.l1_norm + 1e-9 && report.l1_norm <= b.upper + 1e-9;
  report.closed_matches = report.closed_vs_brute_dev <= 1e-10;
  return report;
}

CosetBoundReport kernel_lower_bound_q(int n, const RadixSequence& radix, int resolution) {
  CosetBoundReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  if (n < 3) return report;  // k-range empty, vacuous
  if (2 * n > resolution)
    throw std::out_of_range("kernel_lower_bound_q: resolution below 2n");
  std::int64_t q = special_index_q(n - 1, radix);
  GridFunction kq = fejer(q, radix, resolution);
  double qd = static_cast<double>(q);
  for (std::int64_t t = 0; t < kq.size(); ++t) {
    GroupPoint x = point_from_index(t, resolution, radix);
    int first = -1, second = -1;
    for (int j = 0; j < 2 * n; ++j) {
      if (x.digits[static_cast<std::size_t>(j)] != 0) {
        if (first < 0) { first = j; } else { second = j; break; }
      }
    }
    if (first < 0 || second < 0) continue;
    if (first % 2 != 0 || second % 2 != 0) continue;
    int k = first / 2, s = second / 2;
    if (k > n - 3 || s < k + 2 || s > n - 1) continue;
    double bound = static_cast<double>(radix.product(2 * k)) *
                   static_cast<double>(radix.product(2 * s)) / 8.0;
    double slack = qd * std::abs(kq.values[t]) - bound;
    report.cells_checked++;
    if (slack < -1e-9) report.violations++;
    report.min_slack = std::min(report.min_slack, slack);
  }
  if (report.cells_checked == 0) report.min_slack = 0.0;
  return report;
}

DirichletTable::DirichletTable(const RadixSequence& radix, int resolution, std::int64_t limit)
    : radix_(radix), resolution_(resolution), limit_(limit) {
  check_kernel_index(limit, radix, resolution);
  std::int64_t grid = radix.grid_size(resolution);
  rows_ = Eigen::MatrixXcd::Zero(limit + 1, grid);
  PhaseLattice lattice(radix);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(lattice.order()));
  for (std::int64_t t = 0; t < grid; ++t) {
    std::fill(counts.begin(), counts.end(), 0);
    PhaseWalker walk(radix, resolution, lattice, t);
    for (std::int64_t k = 0; k < limit; ++k) {
      counts[static_cast<std::size_t>(walk.phase)]++;
      rows_(k + 1, t) = lattice.dot(counts);
      if (k + 1 < limit) walk.advance();
    }
  }
}

GridFunction DirichletTable::kernel(std::int64_t n) const {
  if (n < 0 || n > limit_) throw std::out_of_range("DirichletTable::kernel: n outside table");
  GridFunction f = make_grid(radix_, resolution_);
  f.values = rows_.row(n).transpose();
  return f;
}

FejerTable::FejerTable(const RadixSequence& radix, int resolution, std::int64_t limit)
    : radix_(radix), resolution_(resolution), limit_(limit) {
  check_kernel_index(limit, radix, resolution);
  if (limit < 1) throw std::out_of_range("FejerTable: limit must be >= 1");
  std::int64_t grid = radix.grid_size(resolution);
  rows_ = Eigen::MatrixXcd::Zero(limit, grid);
  PhaseLattice lattice(radix);
  std::size_t order = static_cast<std::size_t>(lattice.order());
  std::vector<std::int64_t> counts(order), cumulative(order);
  for (std::int64_t t = 0; t < grid; ++t) {
    std::fill(counts.begin(), counts.end(), 0);
    std::fill(cumulative.begin(), cumulative.end(), 0);
    PhaseWalker walk(radix, resolution, lattice, t);
    for (std::int64_t k = 0; k < limit; ++k) {
      counts[static_cast<std::size_t>(walk.phase)]++;
      for (std::size_t r = 0; r < order; ++r) cumulative[r] += counts[r];
      rows_(k, t) = lattice.dot(cumulative) / static_cast<double>(k + 1);
      if (k + 1 < limit) walk.advance();
    }
  }
}

GridFunction FejerTable::kernel(std::int64_t n) const {
  if (n < 1 || n > limit_) throw std::out_of_range("FejerTable::kernel: n outside table");
  GridFunction f = make_grid(radix_, resolution_);
  f.values = rows_.row(n - 1).transpose();
  return f;
}

}  // namespace vilenkin
