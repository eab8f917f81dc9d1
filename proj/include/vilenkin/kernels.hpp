#pragma once

#include <Eigen/Core>

#include "vilenkin/grid.hpp"
#include "vilenkin/radix.hpp"
#include "vilenkin/roots.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

/// Brute Dirichlet kernel D_n = sum_{k<n} psi_k. Character values are
/// accumulated as integer counts per phase-lattice class, so sums of full
/// root cycles cancel exactly (D_{M_n} is exactly M_n on I_n, exactly 0 off
/// it, on lattices of order dividing 12 or 8). D_0 = 0.
GridFunction dirichlet(std::int64_t n, const RadixSequence& radix, int resolution);

/// Closed form D_n = psi_n sum_j D_{M_j} sum_{k=m_j-n_j}^{m_j-1} r_j^k.
GridFunction dirichlet_closed(std::int64_t n, const RadixSequence& radix, int resolution);

/// Fejer kernel K_n = (1/n) sum_{k=1}^{n} D_k.
GridFunction fejer(std::int64_t n, const RadixSequence& radix, int resolution);

/// Gat's closed form for K_{M_n}.
GridFunction fejer_gat(int n, const RadixSequence& radix, int resolution);

/// Closed-form K_n assembled from the s_k M_k block decomposition.
GridFunction fejer_closed(std::int64_t n, const RadixSequence& radix, int resolution);

/// Norlund kernel F_n = (1/Q_n) sum_{k=1}^{n} q_{n-k} D_k.
GridFunction norlund_kernel(std::int64_t n, const WeightSequence& weights,
                            const RadixSequence& radix, int resolution);

/// Lebesgue constant L_n = ||D_n||_1.
double lebesgue_constant(std::int64_t n, const RadixSequence& radix, int resolution);

struct LukomskiiBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Per-index certification summary for one Dirichlet kernel.
struct KernelReport {
  std::int64_t index = 0;
  double l1_norm = 0.0;             // L_n
  double closed_vs_brute_dev = 0.0; // max |closed - brute|
  bool within_bounds = false;       // lower <= L_n <= upper
  bool closed_matches = false;      // dev <= 1e-10
};

KernelReport kernel_report(std::int64_t n, const RadixSequence& radix, int resolution);

/// Two-sided variation bounds: v/(4 lambda) + v*/lambda + 1/(2 lambda)
/// <= L_n <= (3/2) v + 4 v* - 1.
LukomskiiBounds lukomskii_bounds(std::int64_t n, const RadixSequence& radix);

struct CosetBoundReport {
  std::int64_t cells_checked = 0;
  std::int64_t violations = 0;
  double min_slack = 0.0;  // min over cells of q|K_q| - M_{2k} M_{2s}/8
};

/// Pointwise lower bound q_{n-1} |K_{q_{n-1}}(x)| >= M_{2k} M_{2s} / 8 on the
/// cosets with nonzero digits exactly at positions 2k and 2s below 2s, free
/// digits between 2s and 2n. Vacuous (zero cells) when n < 3.
CosetBoundReport kernel_lower_bound_q(int n, const RadixSequence& radix, int resolution);

/// All Dirichlet kernels D_0..D_limit on one grid, built in a single
/// odometer sweep with exact count accumulation. Row n holds D_n.
class DirichletTable {
 public:
  DirichletTable(const RadixSequence& radix, int resolution, std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  const Eigen::MatrixXcd& rows() const { return rows_; }
  GridFunction kernel(std::int64_t n) const;

  const RadixSequence& radix() const { return radix_; }
  int resolution() const { return resolution_; }

 private:
  RadixSequence radix_;
  int resolution_;
  std::int64_t limit_;
  Eigen::MatrixXcd rows_;  // (limit+1) x M_N
};

/// All Fejer kernels K_1..K_limit, same sweep with cumulative counts.
class FejerTable {
 public:
  FejerTable(const RadixSequence& radix, int resolution, std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  GridFunction kernel(std::int64_t n) const;
  /// Row n-1 holds K_n.
  const Eigen::MatrixXcd& rows() const { return rows_; }

 private:
  RadixSequence radix_;
  int resolution_;
  std::int64_t limit_;
  Eigen::MatrixXcd rows_;  // limit x M_N, row n-1 holds K_n
};

/// F_n assembled from a prebuilt Dirichlet table (for n <= table.limit()).
GridFunction norlund_kernel(std::int64_t n, const WeightSequence& weights,
                            const DirichletTable& table);

}  // namespace vilenkin
