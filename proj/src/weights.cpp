#include "vilenkin/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace vilenkin {

double cesaro_coefficient(std::int64_t n, double alpha) {
  if (n < 0) throw std::domain_error("cesaro_coefficient: n must be >= 0");
  double nearest = std::round(alpha);
  if (nearest <= -1.0 && std::abs(alpha - nearest) < 1e-12)
    throw std::domain_error("cesaro_coefficient: alpha must avoid -1, -2, ...");
  long double a = 1.0L;
  for (std::int64_t i = 1; i <= n; ++i)
    a *= (static_cast<long double>(alpha) + static_cast<long double>(i)) /
         static_cast<long double>(i);
  return static_cast<double>(a);
}

WeightSequence::WeightSequence(WeightFamily family, double alpha, double beta,
                               std::vector<double> custom)
    : family_(family), alpha_(alpha), beta_(beta), custom_(std::move(custom)) {
  prefix_.push_back(0.0L);
}

WeightSequence WeightSequence::fejer() { return WeightSequence(WeightFamily::fejer); }
WeightSequence WeightSequence::cesaro(double alpha) {
  double nearest = std::round(alpha);
  if (nearest <= -1.0 && std::abs(alpha - nearest) < 1e-12)
    throw std::domain_error("cesaro weights: alpha must avoid -1, -2, ...");
  return WeightSequence(WeightFamily::cesaro, alpha);
}
WeightSequence WeightSequence::riesz(double alpha) {
  return WeightSequence(WeightFamily::riesz, alpha);
}
WeightSequence WeightSequence::norlund_log() {
  return WeightSequence(WeightFamily::norlund_log);
}
WeightSequence WeightSequence::kappa(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta >= 1.0))
    throw std::domain_error("kappa weights: need alpha > 0 and beta >= 1");
  return WeightSequence(WeightFamily::kappa, alpha, beta);
}
WeightSequence WeightSequence::custom(std::vector<double> q) {
  if (q.empty()) throw std::invalid_argument("custom weights: empty list");
  for (double v : q)
    if (v < 0.0) throw std::domain_error("custom weights: entries must be >= 0");
  return WeightSequence(WeightFamily::custom, 0.0, 0.0, std::move(q));
}

std::string WeightSequence::name() const {
  switch (family_) {
    case WeightFamily::fejer: return "fejer";
    case WeightFamily::cesaro: return "cesaro(" + std::to_string(alpha_) + ")";
    case WeightFamily::riesz: return "riesz(" + std::to_string(alpha_) + ")";
    case WeightFamily::norlund_log: return "nlog";
    case WeightFamily::kappa:
      return "kappa(" + std::to_string(alpha_) + "," + std::to_string(beta_) + ")";
    case WeightFamily::custom: return "custom";
  }
  return "?";
}

void WeightSequence::ensure(std::int64_t n) const {
  while (static_cast<std::int64_t>(q_.size()) <= n) {
    std::int64_t k = static_cast<std::int64_t>(q_.size());
    double value = 0.0;
    switch (family_) {
      case WeightFamily::fejer:
        value = 1.0;
        break;
      case WeightFamily::cesaro:
        value = cesaro_coefficient(k, alpha_ - 1.0);
        break;
      case WeightFamily::riesz:
        value = k == 0 ? 1.0 : std::pow(static_cast<double>(k), alpha_ - 1.0);
        break;
      case WeightFamily::norlund_log:
        value = k == 0 ? 0.0 : 1.0 / static_cast<double>(k);
        break;
      case WeightFamily::kappa: {
        if (k == 0) {
          value = 0.0;
        } else {
          // log^{(beta)}(k^alpha), taken as 0 until defined and positive
          double v = alpha_ * std::log(static_cast<double>(k));
          int iter = static_cast<int>(beta_) - 1;
          bool bad = false;
          for (int i = 0; i < iter; ++i) {
            if (v <= 0.0) { bad = true; break; }
            v = std::log(v);
          }
          value = (bad || !(v > 0.0)) ? 0.0 : v;
        }
        break;
      }
      case WeightFamily::custom:
        value = k < static_cast<std::int64_t>(custom_.size())
                    ? custom_[static_cast<std::size_t>(k)]
                    : custom_.back();
        break;
    }
    q_.push_back(value);
    prefix_.push_back(prefix_.back() + static_cast<long double>(value));
  }
}

double WeightSequence::q(std::int64_t k) const {
  if (k < 0) throw std::out_of_range("WeightSequence::q: negative index");
  ensure(k);
  return q_[static_cast<std::size_t>(k)];
}

double WeightSequence::Q(std::int64_t n) const {
  if (n < 0) throw std::out_of_range("WeightSequence::Q: negative index");
  if (n > 0) ensure(n - 1);
  return static_cast<double>(prefix_[static_cast<std::size_t>(n)]);
}

bool WeightSequence::non_increasing(std::int64_t n) const {
  if (n > 0) ensure(n - 1);
  for (std::int64_t k = 1; k < n; ++k)
    if (q_[static_cast<std::size_t>(k)] > q_[static_cast<std::size_t>(k - 1)]) return false;
  return true;
}

bool WeightSequence::non_decreasing(std::int64_t n) const {
  if (n > 0) ensure(n - 1);
  for (std::int64_t k = 1; k < n; ++k)
    if (q_[static_cast<std::size_t>(k)] < q_[static_cast<std::size_t>(k - 1)]) return false;
  return true;
}

double regularity_ratio(const WeightSequence& w, std::int64_t n) {
  if (n < 1) throw std::domain_error("regularity_ratio: n must be >= 1");
  double qn = w.Q(n);
  if (!(qn > 0.0)) throw std::domain_error("regularity_ratio: degenerate weights, Q_n <= 0");
  return w.q(n - 1) / qn;
}

double harmonic_l(std::int64_t n) {
  long double l = 0.0L;
  for (std::int64_t k = 1; k < n; ++k) l += 1.0L / static_cast<long double>(k);
  return static_cast<double>(l);
}

}  // namespace vilenkin
