#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vilenkin/grid.hpp"
#include "vilenkin/transform.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

/// Partial sum S_n f = sum_{k<n} f_hat(k) psi_k. S_0 f = 0, S_{M_N} f = f.
GridFunction partial_sum(const GridFunction& f, std::int64_t n);
GridFunction partial_sum(const CoefficientVector& c, std::int64_t n);

/// A summability mean at index n: either the Norlund mean generated by a
/// weight family, the Riesz logarithmic mean, or a generic coefficient
/// average sum_k c_k S_k f.
struct MeanSpec {
  enum class Kind { norlund, riesz_log, generic };
  Kind kind = Kind::norlund;
  WeightSequence weights = WeightSequence::fejer();
  std::vector<double> coefficients;  // generic: c_1..c_n applied to S_1..S_n

  static MeanSpec norlund(WeightSequence w) {
    MeanSpec s;
    s.kind = Kind::norlund;
    s.weights = std::move(w);
    return s;
  }
  static MeanSpec riesz_log() {
    MeanSpec s;
    s.kind = Kind::riesz_log;
    return s;
  }
  static MeanSpec generic(std::vector<double> c) {
    MeanSpec s;
    s.kind = Kind::generic;
    s.coefficients = std::move(c);
    return s;
  }
};

/// t_n f through the coefficient multiplier: the Norlund mean applies
/// w_j = Q_{n-j}/Q_n to f_hat(j), j < n, which is identical to
/// (1/Q_n) sum_k q_{n-k} S_k f.
GridFunction mean(const GridFunction& f, const MeanSpec& spec, std::int64_t n);
GridFunction mean(const CoefficientVector& c, const MeanSpec& spec, std::int64_t n);

/// Named weighted-maximal-operator weights w(n).
using MaximalWeight = std::function<double(std::int64_t)>;
MaximalWeight unit_weight();
MaximalWeight power_weight(double exponent);          // (n+1)^exponent
MaximalWeight log_power_weight(double exponent);      // log^exponent(n+1)

/// The named weight presets attached to the weighted maximal operators.
inline MaximalWeight weight_partial_p(double p) { return power_weight(1.0 / p - 1.0); }
inline MaximalWeight weight_log() { return log_power_weight(1.0); }
inline MaximalWeight weight_fejer_p(double p) { return power_weight(1.0 / p - 2.0); }
inline MaximalWeight weight_log_sq() { return log_power_weight(2.0); }
inline MaximalWeight weight_norlund_p_alpha(double p, double alpha) {
  return power_weight(1.0 / p - 1.0 - alpha);
}
inline MaximalWeight weight_log_1_alpha(double alpha) { return log_power_weight(1.0 + alpha); }

/// Pointwise sup over the index set of |t_n f| / w(n).
GridFunction maximal_function(const GridFunction& f, const MeanSpec& spec,
                              std::span<const std::int64_t> index_set,
                              const MaximalWeight& weight = unit_weight());

/// Maximal partial-sum variant, sup_n |S_n f| / w(n).
GridFunction maximal_partial_sum(const GridFunction& f,
                                 std::span<const std::int64_t> index_set,
                                 const MaximalWeight& weight = unit_weight());

/// omega_p(1/M_n, f) = sup_{h in I_n} ||f(.-h) - f||_p over the grid
/// translations; 0 at n = N.
double modulus_lp(const GridFunction& f, int n, double p);

/// ||f - S_{M_n} f|| in the H_p proxy norm.
double modulus_hp(const GridFunction& f, int n, double p);

/// ||f - S_n f||_2, the L_2 best approximation by polynomials of order < n.
double best_approx_l2(const GridFunction& f, std::int64_t n);

}  // namespace vilenkin
