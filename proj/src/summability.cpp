#include "vilenkin/summability.hpp"

#include <cmath>
#include <stdexcept>

#include "vilenkin/hardy.hpp"

namespace vilenkin {

namespace {

void check_order(std::int64_t n, const CoefficientVector& c) {
  if (n < 0 || n > c.size()) throw std::out_of_range("partial order outside [0, M_N]");
}

/// w_j for j < n of the requested mean; coefficients of f_hat(j).
std::vector<double> multipliers(const MeanSpec& spec, std::int64_t n) {
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  switch (spec.kind) {
    case MeanSpec::Kind::norlund: {
      double qn = spec.weights.Q(n);
      if (!(qn > 0.0)) throw std::domain_error("mean: degenerate weights, Q_n <= 0");
      for (std::int64_t j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = spec.weights.Q(n - j) / qn;
      break;
    }
    case MeanSpec::Kind::riesz_log: {
      if (n < 2) throw std::domain_error("riesz_log mean needs n >= 2");
      double ln = harmonic_l(n);
      // c_k = 1/(l_n k) on S_k, k = 1..n-1; w_j = sum_{k>j} c_k
      long double tail = 0.0L;
      std::vector<long double> suffix(static_cast<std::size_t>(n), 0.0L);
      for (std::int64_t k = n - 1; k >= 1; --k) {
        tail += 1.0L / static_cast<long double>(k);
        suffix[static_cast<std::size_t>(k - 1)] = tail;  // sum over k' >= k
      }
      for (std::int64_t j = 0; j < n; ++j) {
        long double s = j + 1 <= n - 1 ? suffix[static_cast<std::size_t>(j)] : 0.0L;
        w[static_cast<std::size_t>(j)] = static_cast<double>(s / static_cast<long double>(ln));
      }
      break;
    }
    case MeanSpec::Kind::generic: {
      if (static_cast<std::int64_t>(spec.coefficients.size()) != n)
        throw std::domain_error("generic mean: coefficient list length must equal n");
      long double tail = 0.0L;
      for (std::int64_t j = n - 1; j >= 0; --j) {
        tail += static_cast<long double>(spec.coefficients[static_cast<std::size_t>(j)]);
        w[static_cast<std::size_t>(j)] = static_cast<double>(tail);
      }
      break;
    }
  }
  return w;
}

}  // namespace

GridFunction partial_sum(const CoefficientVector& c, std::int64_t n) {
  check_order(n, c);
  CoefficientVector truncated = c;
  for (std::int64_t j = n; j < c.size(); ++j) truncated.coeff[j] = Complex(0, 0);
  return inverse(truncated);
}

GridFunction partial_sum(const GridFunction& f, std::int64_t n) {
  return partial_sum(forward(f), n);
}

GridFunction mean(const CoefficientVector& c, const MeanSpec& spec, std::int64_t n) {
  if (n < 1) throw std::domain_error("mean: n must be >= 1");
  check_order(n, c);
  std::vector<double> w = multipliers(spec, n);
  CoefficientVector scaled = c;
  for (std::int64_t j = 0; j < c.size(); ++j)
    scaled.coeff[j] = j < n ? c.coeff[j] * w[static_cast<std::size_t>(j)] : Complex(0, 0);
  return inverse(scaled);
}

GridFunction mean(const GridFunction& f, const MeanSpec& spec, std::int64_t n) {
  return mean(forward(f), spec, n);
}

MaximalWeight unit_weight() {
  return [](std::int64_t) { return 1.0; };
}

MaximalWeight power_weight(double exponent) {
  return [exponent](std::int64_t n) { return std::pow(static_cast<double>(n + 1), exponent); };
}

MaximalWeight log_power_weight(double exponent) {
  return [exponent](std::int64_t n) {
    return std::pow(std::log(static_cast<double>(n + 1)), exponent);
  };
}

GridFunction maximal_function(const GridFunction& f, const MeanSpec& spec,
                              std::span<const std::int64_t> index_set,
                              const MaximalWeight& weight) {
  if (index_set.empty()) throw std::domain_error("maximal_function: empty index set");
  CoefficientVector c = forward(f);
  GridFunction out = make_grid(f.radix, f.resolution);
  bool first = true;
  for (std::int64_t n : index_set) {
    GridFunction tn = mean(c, spec, n);
    double w = weight(n);
    for (std::int64_t t = 0; t < out.size(); ++t) {
      double v = std::abs(tn.values[t]) / w;
      if (first || v > out.values[t].real()) out.values[t] = Complex(v, 0.0);
    }
    first = false;
  }
  return out;
}

GridFunction maximal_partial_sum(const GridFunction& f,
                                 std::span<const std::int64_t> index_set,
                                 const MaximalWeight& weight) {
  if (index_set.empty()) throw std::domain_error("maximal_partial_sum: empty index set");
  CoefficientVector c = forward(f);
  GridFunction out = make_grid(f.radix, f.resolution);
  bool first = true;
  for (std::int64_t n : index_set) {
    GridFunction sn = partial_sum(c, n);
    double w = weight(n);
    for (std::int64_t t = 0; t < out.size(); ++t) {
      double v = std::abs(sn.values[t]) / w;
      if (first || v > out.values[t].real()) out.values[t] = Complex(v, 0.0);
    }
    first = false;
  }
  return out;
}

double modulus_lp(const GridFunction& f, int n, double p) {
  if (n < 0 || n > f.resolution) throw std::out_of_range("modulus_lp: n outside [0, N]");
  std::int64_t shifts = f.radix.grid_size(f.resolution) / f.radix.product(n);
  double sup = 0.0;
  for (std::int64_t s = 0; s < shifts; ++s) {
    std::int64_t t = s * f.radix.product(n);  // h runs over I_n
    if (t == 0) continue;
    GroupPoint h = point_from_index(t, f.resolution, f.radix);
    GridFunction shifted = translate(f, h);
    sup = std::max(sup, lp_norm(shifted - f, p));
  }
  return sup;
}

double modulus_hp(const GridFunction& f, int n, double p) {
  if (n < 0 || n > f.resolution) throw std::out_of_range("modulus_hp: n outside [0, N]");
  GridFunction tail = f - partial_sum(f, f.radix.product(n));
  return hp_norm(tail, p);
}

double best_approx_l2(const GridFunction& f, std::int64_t n) {
  if (n < 0 || n > f.size()) throw std::out_of_range("best_approx_l2: n outside [0, M_N]");
  return lp_norm(f - partial_sum(f, n), 2.0);
}

}  // namespace vilenkin
