#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vilenkin {

/// Cesaro number A_n^alpha = (alpha+1)...(alpha+n)/n!, A_0^alpha = 1.
/// Computed with long-double accumulation.
double cesaro_coefficient(std::int64_t n, double alpha);

enum class WeightFamily { fejer, cesaro, riesz, norlund_log, kappa, custom };

/// A summability weight family {q_k} with prefix sums Q_n = sum_{k<n} q_k.
/// Values are materialized on demand and cached; the object is logically
/// immutable.
class WeightSequence {
 public:
  static WeightSequence fejer();
  static WeightSequence cesaro(double alpha);
  static WeightSequence riesz(double alpha);
  static WeightSequence norlund_log();
  static WeightSequence kappa(double alpha, double beta);
  static WeightSequence custom(std::vector<double> q);

  WeightFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::string name() const;

  double q(std::int64_t k) const;
  /// Q_n = sum_{k<n} q_k (long-double accumulated).
  double Q(std::int64_t n) const;

  /// Monotonicity over the prefix q_0..q_{n-1}, computed not assumed.
  bool non_increasing(std::int64_t n) const;
  bool non_decreasing(std::int64_t n) const;

  /// q_0 > 0 (the standing assumption most kernel estimates need).
  bool positive_start() const { return q(0) > 0.0; }

 private:
  explicit WeightSequence(WeightFamily family, double alpha = 0.0, double beta = 0.0,
                          std::vector<double> custom = {});

  void ensure(std::int64_t n) const;

  WeightFamily family_;
  double alpha_;
  double beta_;
  std::vector<double> custom_;
  mutable std::vector<double> q_;
  mutable std::vector<long double> prefix_;  // prefix_[n] = Q_n
};

/// q_{n-1}/Q_n; <= 1/n for non-increasing families.
double regularity_ratio(const WeightSequence& w, std::int64_t n);

/// l_n = sum_{k=1}^{n-1} 1/k.
double harmonic_l(std::int64_t n);

}  // namespace vilenkin
