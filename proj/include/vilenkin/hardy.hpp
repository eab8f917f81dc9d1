#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "vilenkin/grid.hpp"
#include "vilenkin/radix.hpp"

namespace vilenkin {

/// p-atom a = (M_alpha^{1/p-1}/lambda) (D_{M_{alpha+1}} - D_{M_alpha}):
/// supported on I_alpha, mean zero, ||a||_inf <= M_alpha^{1/p}.
GridFunction make_atom(int alpha, double p, const RadixSequence& radix, int resolution);

enum class MartingaleFamily {
  single_atom,     // f = D_{M_{2a+1}} - D_{M_{2a}} per a (Example ex22 shape)
  inv_sqrt_alpha,  // lambda_k = lambda / alpha_k^{1/2}
  phi_quarter,     // lambda_k = lambda / Phi_k^{1/4}
  inv_Mk_pow,      // alpha_k = M_k, lambda_k = lambda / M_k^{1/p}
  custom,          // user lambda list
};

/// Parameters of the counterexample martingales: blocks sit at coefficient
/// ranges [M_{2 alpha_k}, M_{2 alpha_k + 1}).
struct MartingaleFamilySpec {
  double p = 0.5;
  MartingaleFamily family = MartingaleFamily::single_atom;
  std::vector<std::int64_t> alpha_seq;  // for inv_Mk_pow these are the k's
  std::vector<double> phi;              // phi_quarter: Phi values per term
  std::vector<double> lambda;           // custom: lambda_k per term
  int resolution = 0;                   // requires 2*alpha_max + 1 <= resolution
};

struct Martingale {
  GridFunction f;
  std::vector<std::int64_t> block_position;  // 2 alpha_k
  std::vector<double> lambda_k;
  double lambda_p_sum = 0.0;  // sum |lambda_k|^p over supplied terms
};

Martingale build_martingale(const MartingaleFamilySpec& spec, const RadixSequence& radix);

/// f*(x) = max_{0 <= n <= N} |S_{M_n} f(x)|.
GridFunction martingale_maximal(const GridFunction& f);

/// ||f*||_p, the martingale Hardy quasi-norm proxy.
double hp_norm(const GridFunction& f, double p);

/// sum_{k=1}^{n_max} |f_hat(k)|^p / k^{2-p}.
double hardy_sum(const GridFunction& f, double p, std::int64_t n_max);

/// (sum_{k=1}^{N-1} M_k^{2-2/p} sum_{j=1}^{m_k-1} |f_hat(j M_k)|^2)^{1/2}.
double paley_sum(const GridFunction& f, double p);

enum class StrongFlavor { partial, fejer, log_partial, log_fejer };

/// Strong-convergence sums:
///   partial      sum_{k<=n} ||S_k f||_p^p / k^{2-p}
///   fejer        sum_{k<=n} ||sigma_k f||_p^p / k^{2-2p}
///   log_partial  (1/log n) sum_{k<=n} ||S_k f - f||_1 / k
///   log_fejer    (1/log n) sum_{k<=n} ||sigma_k f||_{1/2}^{1/2} / k
double strong_sum(const GridFunction& f, StrongFlavor flavor, double p, std::int64_t n);

/// max_{1<=n<M_N} |f_hat(n)| / n^{1/p-1}.
double coefficient_ratio(const GridFunction& f, double p);

/// Growth-condition report for the inv_sqrt_alpha family: per term, whether
/// the partial-sum domination and separation conditions hold at this scale.
struct Ex251Report {
  std::vector<bool> separation;  // sum_{eta<k} M_{2a_eta}^{1/p}/a_eta^{1/2} < M_{2a_k}^{1/p}/a_k^{1/2}
  std::vector<bool> gap;         // 32 lambda M_{2a_{k-1}}^{1/p}/a_{k-1}^{1/2} < M_{a_k}^{1/p}/a_k^{3/2}
  bool all() const;
};

Ex251Report validate_ex251(const MartingaleFamilySpec& spec, const RadixSequence& radix);

/// Greedy search for an increasing alpha sequence satisfying both
/// conditions within the resolution; empty optional when none fits.
std::optional<std::vector<std::int64_t>> search_ex251_alphas(double p, int count,
                                                             const RadixSequence& radix,
                                                             int resolution);

/// JSON (de)serialization of the spec file. Fields: radix, resolution, p,
/// family (ex22|ex251|ex252|ex261|custom), alpha_seq, optional phi/lambda.
MartingaleFamilySpec read_martingale_spec(std::istream& is, std::string* radix_spec_out);
void write_martingale_spec(std::ostream& os, const MartingaleFamilySpec& spec,
                           const std::string& radix_spec);

}  // namespace vilenkin
