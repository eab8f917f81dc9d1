#include "vilenkin/hardy.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "vilenkin/kernels.hpp"
#include "vilenkin/summability.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

GridFunction dirichlet_block(int lo, int hi, const RadixSequence& radix, int resolution) {
  // D_{M_hi} - D_{M_lo}, exact through the Paley closed form.
  GridFunction out = make_grid(radix, resolution);
  std::int64_t m_hi = radix.product(hi), m_lo = radix.product(lo);
  for (std::int64_t s = 0; s < out.size() / m_lo; ++s) {
    std::int64_t t = s * m_lo;
    out.values[t] -= static_cast<double>(m_lo);
  }
  for (std::int64_t s = 0; s < out.size() / m_hi; ++s) {
    std::int64_t t = s * m_hi;
    out.values[t] += static_cast<double>(m_hi);
  }
  return out;
}

}  // namespace

GridFunction make_atom(int alpha, double p, const RadixSequence& radix, int resolution) {
  if (!(p > 0.0)) throw std::domain_error("make_atom: p must be positive");
  if (alpha < 0 || alpha + 1 > resolution)
    throw std::out_of_range("make_atom: alpha + 1 must be <= resolution");
  double scale = std::pow(static_cast<double>(radix.product(alpha)), 1.0 / p - 1.0) /
                 static_cast<double>(radix.lambda());
  return Complex(scale, 0.0) * dirichlet_block(alpha, alpha + 1, radix, resolution);
}

Martingale build_martingale(const MartingaleFamilySpec& spec, const RadixSequence& radix) {
  if (!(spec.p > 0.0) || spec.p > 1.0)
    throw std::domain_error("build_martingale: p must lie in (0, 1]");
  if (spec.alpha_seq.empty()) throw std::invalid_argument("build_martingale: empty alpha_seq");
  double lambda = static_cast<double>(radix.lambda());

  Martingale out{make_grid(radix, spec.resolution), {}, {}, 0.0};
  for (std::size_t k = 0; k < spec.alpha_seq.size(); ++k) {
    std::int64_t a = spec.alpha_seq[k];
    if (k > 0 && a <= spec.alpha_seq[k - 1])
      throw std::invalid_argument("build_martingale: alpha_seq must be strictly increasing");
    std::int64_t block = 2 * a;
    if (spec.family == MartingaleFamily::inv_Mk_pow) {
      if (a >= radix.depth()) throw std::out_of_range("build_martingale: M_k index out of range");
      block = 2 * radix.product(static_cast<int>(a));
    }
    if (block + 1 > spec.resolution)
      throw std::out_of_range("build_martingale: 2 alpha_k + 1 exceeds resolution");

    double lam = 0.0;
    double atom_scale =
        std::pow(static_cast<double>(radix.product(static_cast<int>(block))), 1.0 / spec.p - 1.0) /
        lambda;
    switch (spec.family) {
      case MartingaleFamily::single_atom:
        lam = 1.0 / atom_scale;  // lambda_k a_k = D_{M_{2a+1}} - D_{M_{2a}}
        break;
      case MartingaleFamily::inv_sqrt_alpha:
        lam = lambda / std::sqrt(static_cast<double>(a));
        break;
      case MartingaleFamily::phi_quarter:
        if (spec.phi.size() != spec.alpha_seq.size())
          throw std::invalid_argument("build_martingale: phi list must match alpha_seq");
        lam = lambda / std::pow(spec.phi[k], 0.25);
        break;
      case MartingaleFamily::inv_Mk_pow:
        lam = lambda / std::pow(static_cast<double>(radix.product(static_cast<int>(a))),
                                1.0 / spec.p);
        break;
      case MartingaleFamily::custom:
        if (spec.lambda.size() != spec.alpha_seq.size())
          throw std::invalid_argument("build_martingale: lambda list must match alpha_seq");
        lam = spec.lambda[k];
        break;
    }
    GridFunction atom = Complex(atom_scale, 0.0) *
                        dirichlet_block(static_cast<int>(block), static_cast<int>(block) + 1,
                                        radix, spec.resolution);
    out.f = out.f + Complex(lam, 0.0) * atom;
    out.block_position.push_back(block);
    out.lambda_k.push_back(lam);
    out.lambda_p_sum += std::pow(std::abs(lam), spec.p);
  }
  return out;
}

GridFunction martingale_maximal(const GridFunction& f) {
  CoefficientVector c = forward(f);
  GridFunction out = make_grid(f.radix, f.resolution);
  for (int n = 0; n <= f.resolution; ++n) {
    GridFunction sn = partial_sum(c, f.radix.product(n));
    for (std::int64_t t = 0; t < out.size(); ++t)
      out.values[t] = std::max(out.values[t].real(), std::abs(sn.values[t]));
  }
  return out;
}

double hp_norm(const GridFunction& f, double p) {
  if (!(p > 0.0)) throw std::domain_error("hp_norm: p must be positive");
  return lp_norm(martingale_maximal(f), p);
}

double hardy_sum(const GridFunction& f, double p, std::int64_t n_max) {
  if (!(p > 0.0) || p > 2.0) throw std::domain_error("hardy_sum: p must lie in (0, 2]");
  CoefficientVector c = forward(f);
  if (n_max >= c.size()) n_max = c.size() - 1;
  long double sum = 0.0L;
  for (std::int64_t k = 1; k <= n_max; ++k)
    sum += static_cast<long double>(std::pow(std::abs(c.coeff[k]), p) /
                                    std::pow(static_cast<double>(k), 2.0 - p));
  return static_cast<double>(sum);
}

double paley_sum(const GridFunction& f, double p) {
  if (!(p > 0.0) || p > 1.0) throw std::domain_error("paley_sum: p must lie in (0, 1]");
  CoefficientVector c = forward(f);
  long double sum = 0.0L;
  for (int k = 1; k < f.resolution; ++k) {
    double mk = static_cast<double>(f.radix.product(k));
    long double inner = 0.0L;
    for (int j = 1; j < f.radix.radix(k); ++j) {
      std::int64_t idx = static_cast<std::int64_t>(j) * f.radix.product(k);
      double mag = std::abs(c.coeff[idx]);
      inner += static_cast<long double>(mag) * mag;
    }
    sum += static_cast<long double>(std::pow(mk, 2.0 - 2.0 / p)) * inner;
  }
  return std::sqrt(static_cast<double>(sum));
}

double strong_sum(const GridFunction& f, StrongFlavor flavor, double p, std::int64_t n) {
  if (n < 1 || n > f.size()) throw std::out_of_range("strong_sum: n outside [1, M_N]");
  bool log_flavor =
      flavor == StrongFlavor::log_partial || flavor == StrongFlavor::log_fejer;
  if (log_flavor && n < 2) throw std::out_of_range("strong_sum: log flavors need n >= 2");
  CoefficientVector c = forward(f);
  GridFunction running = make_grid(f.radix, f.resolution);   // S_k f
  GridFunction sigma_acc = make_grid(f.radix, f.resolution); // sum of S_j f
  long double sum = 0.0L;
  for (std::int64_t k = 1; k <= n; ++k) {
    GridFunction psi = vilenkin_function(k - 1, f.radix, f.resolution);
    running.values += c.coeff[k - 1] * psi.values;
    sigma_acc.values += running.values;
    double kd = static_cast<double>(k);
    switch (flavor) {
      case StrongFlavor::partial:
        sum += std::pow(lp_norm(running, p), p) / std::pow(kd, 2.0 - p);
        break;
      case StrongFlavor::fejer: {
        GridFunction sigma = Complex(1.0 / kd, 0.0) * sigma_acc;
        sum += std::pow(lp_norm(sigma, p), p) / std::pow(kd, 2.0 - 2.0 * p);
        break;
      }
      case StrongFlavor::log_partial:
        sum += lp_norm(running - f, 1.0) / kd;
        break;
      case StrongFlavor::log_fejer: {
        GridFunction sigma = Complex(1.0 / kd, 0.0) * sigma_acc;
        sum += std::sqrt(lp_norm(sigma, 0.5)) / kd;
        break;
      }
    }
  }
  double total = static_cast<double>(sum);
  if (log_flavor) total /= std::log(static_cast<double>(n));
  return total;
}

double coefficient_ratio(const GridFunction& f, double p) {
  if (!(p > 0.0) || p >= 1.0) throw std::domain_error("coefficient_ratio: p must lie in (0, 1)");
  CoefficientVector c = forward(f);
  double best = 0.0;
  for (std::int64_t k = 1; k < c.size(); ++k)
    best = std::max(best, std::abs(c.coeff[k]) /
                              std::pow(static_cast<double>(k), 1.0 / p - 1.0));
  return best;
}

bool Ex251Report::all() const {
  for (bool b : separation)
    if (!b) return false;
  for (bool b : gap)
    if (!b) return false;
  return true;
}

Ex251Report validate_ex251(const MartingaleFamilySpec& spec, const RadixSequence& radix) {
  Ex251Report report;
  double lambda = static_cast<double>(radix.lambda());
  double inv_p = 1.0 / spec.p;
  auto weight = [&](std::int64_t a) {
    return std::pow(static_cast<double>(radix.product(static_cast<int>(2 * a))), inv_p) /
           std::sqrt(static_cast<double>(a));
  };
  long double prefix = 0.0L;
  for (std::size_t k = 0; k < spec.alpha_seq.size(); ++k) {
    std::int64_t a = spec.alpha_seq[k];
    report.separation.push_back(k == 0 || static_cast<double>(prefix) < weight(a));
    if (k == 0) {
      report.gap.push_back(true);
    } else {
      std::int64_t prev = spec.alpha_seq[k - 1];
      double lhs = 32.0 * lambda * weight(prev);
      double rhs = std::pow(static_cast<double>(radix.product(static_cast<int>(a))), inv_p) /
                   std::pow(static_cast<double>(a), 1.5);
      report.gap.push_back(lhs < rhs);
    }
    prefix += static_cast<long double>(weight(a));
  }
  return report;
}

std::optional<std::vector<std::int64_t>> search_ex251_alphas(double p, int count,
                                                             const RadixSequence& radix,
                                                             int resolution) {
  std::vector<std::int64_t> alphas;
  std::int64_t a = 1;
  while (static_cast<int>(alphas.size()) < count) {
    if (2 * a + 1 > resolution) return std::nullopt;
    MartingaleFamilySpec trial;
    trial.p = p;
    trial.resolution = resolution;
    trial.family = MartingaleFamily::inv_sqrt_alpha;
    trial.alpha_seq = alphas;
    trial.alpha_seq.push_back(a);
    if (validate_ex251(trial, radix).all())
      alphas.push_back(a);
    ++a;
  }
  return alphas;
}

MartingaleFamilySpec read_martingale_spec(std::istream& is, std::string* radix_spec_out) {
  nlohmann::json j;
  is >> j;
  MartingaleFamilySpec spec;
  if (radix_spec_out) *radix_spec_out = j.at("radix").get<std::string>();
  spec.resolution = j.at("resolution").get<int>();
  spec.p = j.at("p").get<double>();
  std::string family = j.at("family").get<std::string>();
  if (family == "ex22") spec.family = MartingaleFamily::single_atom;
  else if (family == "ex251") spec.family = MartingaleFamily::inv_sqrt_alpha;
  else if (family == "ex252") spec.family = MartingaleFamily::phi_quarter;
  else if (family == "ex261") spec.family = MartingaleFamily::inv_Mk_pow;
  else if (family == "custom") spec.family = MartingaleFamily::custom;
  else throw std::invalid_argument("martingale spec: unknown family '" + family + "'");
  spec.alpha_seq = j.at("alpha_seq").get<std::vector<std::int64_t>>();
  if (j.contains("phi")) spec.phi = j.at("phi").get<std::vector<double>>();
  if (j.contains("lambda")) spec.lambda = j.at("lambda").get<std::vector<double>>();
  return spec;
}

void write_martingale_spec(std::ostream& os, const MartingaleFamilySpec& spec,
                           const std::string& radix_spec) {
  nlohmann::json j;
  j["radix"] = radix_spec;
  j["resolution"] = spec.resolution;
  j["p"] = spec.p;
  switch (spec.family) {
    case MartingaleFamily::single_atom: j["family"] = "ex22"; break;
    case MartingaleFamily::inv_sqrt_alpha: j["family"] = "ex251"; break;
    case MartingaleFamily::phi_quarter: j["family"] = "ex252"; break;
    case MartingaleFamily::inv_Mk_pow: j["family"] = "ex261"; break;
    case MartingaleFamily::custom: j["family"] = "custom"; break;
  }
  j["alpha_seq"] = spec.alpha_seq;
  if (!spec.phi.empty()) j["phi"] = spec.phi;
  if (!spec.lambda.empty()) j["lambda"] = spec.lambda;
  os << j.dump(2) << "\n";
}

}  // namespace vilenkin
