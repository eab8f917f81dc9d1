#include "vilenkin/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vilenkin/hardy.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/summability.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

/// Deterministic uniform doubles in [0,1) from a splitmix-seeded xorshift
/// walk; identical bit stream everywhere.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {
    next();
    next();
  }
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double gauss() {
    double u = uniform(), v = uniform();
    if (u <= 0.0) u = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
      }
      out += '\n';
    }
    return out;
  }

  std::string to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i)
        obj[columns[i]] = row[i];
      arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
  }

  std::string render(const std::string& format) const {
    return format == "json" ? to_json() : to_csv();
  }
};

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char ch : text) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ull;
  }
  return h;
}

GridFunction default_polynomial(const RadixSequence& radix, int resolution) {
  // full-band deterministic test polynomial of order M_{N-1}
  CoefficientVector c{radix, resolution,
                      Eigen::VectorXcd::Zero(radix.grid_size(resolution))};
  std::int64_t order = radix.product(resolution - 1);
  for (std::int64_t j = 0; j < order; ++j)
    c.coeff[j] = Complex(1.0 / static_cast<double>(j + 1),
                         (j % 3 == 1 ? 0.25 : 0.0) / static_cast<double>(j + 1));
  return inverse(c);
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

RadixSequence config_radix(const ExperimentConfig& config) {
  if (config.radix_spec.empty()) throw std::invalid_argument("missing radix spec");
  return RadixSequence::parse(config.radix_spec);
}

int config_resolution(const ExperimentConfig& config, const RadixSequence& radix) {
  int resolution = config.resolution < 0 ? radix.depth() : config.resolution;
  if (resolution < 1 || resolution > radix.depth())
    throw std::invalid_argument("resolution outside [1, radix depth]");
  return resolution;
}

WeightSequence parse_family(const std::string& family) {
  auto split = [&](char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(family);
    std::string part;
    while (std::getline(ss, part, sep)) parts.push_back(part);
    return parts;
  };
  auto parts = split(':');
  const std::string& head = parts[0];
  if (head == "fejer") return WeightSequence::fejer();
  if (head == "nlog") return WeightSequence::norlund_log();
  if (head == "cesaro") {
    if (parts.size() != 2) throw std::invalid_argument("family: cesaro:<alpha>");
    return WeightSequence::cesaro(std::stod(parts[1]));
  }
  if (head == "riesz") {
    if (parts.size() != 2) throw std::invalid_argument("family: riesz:<alpha>");
    return WeightSequence::riesz(std::stod(parts[1]));
  }
  if (head == "kappa") {
    if (parts.size() != 3) throw std::invalid_argument("family: kappa:<alpha>:<beta>");
    return WeightSequence::kappa(std::stod(parts[1]), std::stod(parts[2]));
  }
  if (head == "custom") {
    if (parts.size() != 2) throw std::invalid_argument("family: custom:<file>");
    std::ifstream in(parts[1]);
    if (!in) throw std::invalid_argument("family: cannot open " + parts[1]);
    std::vector<double> q;
    double v;
    while (in >> v) q.push_back(v);
    return WeightSequence::custom(std::move(q));
  }
  throw std::invalid_argument("unknown weight family '" + family + "'");
}

GridFunction random_grid_function(const RadixSequence& radix, int resolution,
                                  std::uint64_t seed) {
  Rng rng(seed ^ fnv1a(radix.to_string()) ^ static_cast<std::uint64_t>(resolution));
  GridFunction f = make_grid(radix, resolution);
  for (std::int64_t t = 0; t < f.size(); ++t) {
    double re = rng.gauss();
    double im = rng.gauss();
    f.values[t] = Complex(re, im);
  }
  return f;
}

TableKind parse_table_kind(const std::string& name) {
  if (name == "lebesgue") return TableKind::lebesgue;
  if (name == "kernel_norms") return TableKind::kernel_norms;
  if (name == "means") return TableKind::means;
  if (name == "hardy_sums") return TableKind::hardy_sums;
  throw std::invalid_argument("unknown table kind '" + name + "'");
}

DivergenceExample parse_divergence_example(const std::string& name) {
  if (name == "ex22") return DivergenceExample::ex22;
  if (name == "ex251") return DivergenceExample::ex251;
  if (name == "ex261") return DivergenceExample::ex261;
  throw std::invalid_argument("unknown divergence example '" + name + "'");
}

DivergenceTarget parse_divergence_target(const std::string& name) {
  if (name == "fejer") return DivergenceTarget::fejer;
  if (name == "partial") return DivergenceTarget::partial;
  if (name == "riesz_log") return DivergenceTarget::riesz_log;
  if (name == "norlund_log") return DivergenceTarget::norlund_log;
  throw std::invalid_argument("unknown divergence target '" + name + "'");
}

std::string run_table(const ExperimentConfig& config, TableKind kind) {
  RadixSequence radix = config_radix(config);
  int resolution = config_resolution(config, radix);
  std::int64_t grid = radix.grid_size(resolution);
  std::int64_t max_n = config.max_n < 0 ? std::min<std::int64_t>(256, grid) : config.max_n;
  if (max_n > grid) max_n = grid;
  Table table;

  switch (kind) {
    case TableKind::lebesgue: {
      table.columns = {"n", "L_n", "v", "v_star", "lower", "upper", "pass"};
      DirichletTable dtable(radix, resolution, max_n);
      for (std::int64_t n = 1; n <= max_n && n < grid; ++n) {
        double L = dtable.rows().row(n).cwiseAbs().mean();
        Variation var = variation(n, radix);
        LukomskiiBounds b = lukomskii_bounds(n, radix);
        bool pass = b.lower <= L + 1e-9 && L <= b.upper + 1e-9;
        table.rows.push_back({std::to_string(n), format_double(L), std::to_string(var.v),
                              std::to_string(var.v_star), format_double(b.lower),
                              format_double(b.upper), pass ? "1" : "0"});
      }
      break;
    }
    case TableKind::kernel_norms: {
      table.columns = {"n", "family", "norm1"};
      WeightSequence w = parse_family(config.family);
      DirichletTable dtable(radix, resolution, max_n);
      for (std::int64_t n = 1; n <= max_n; ++n) {
        if (!(w.Q(n) > 0.0)) continue;
        GridFunction f = norlund_kernel(n, w, dtable);
        table.rows.push_back({std::to_string(n), w.name(), format_double(lp_norm(f, 1.0))});
      }
      break;
    }
    case TableKind::means: {
      double p0 = config.p_values.empty() ? 1.0 : config.p_values.front();
      table.columns = {"n", "norm_p", "weight", "ratio"};
      for (double p : config.p_values) table.columns.push_back("diff_norm_p" + format_double(p));
      table.columns.push_back("omega_p");
      table.columns.push_back("omega_hp");
      WeightSequence w = parse_family(config.family);
      MeanSpec spec = MeanSpec::norlund(w);
      // weighted-maximal preset per regime: (n+1)^{1/p-2} below p = 1/2,
      // log^2(n+1) at p = 1/2, unweighted above
      MaximalWeight weight = p0 < 0.5   ? weight_fejer_p(p0)
                             : p0 == 0.5 ? weight_log_sq()
                                         : unit_weight();
      GridFunction f = default_polynomial(radix, resolution);
      CoefficientVector cf = forward(f);
      for (std::int64_t n = 1; n <= max_n; ++n) {
        if (!(w.Q(n) > 0.0)) continue;
        GridFunction tn = mean(cf, spec, n);
        double norm_p = lp_norm(tn, p0);
        double wn = weight(n);
        std::vector<std::string> row{std::to_string(n), format_double(norm_p),
                                     format_double(wn), format_double(norm_p / wn)};
        for (double p : config.p_values) row.push_back(format_double(lp_norm(tn - f, p)));
        bool dyadic_row = false;
        for (int j = 0; j <= resolution; ++j)
          if (radix.product(j) == n) { dyadic_row = true; break; }
        if (dyadic_row) {
          int level = 0;
          while (radix.product(level) != n) ++level;
          row.push_back(format_double(modulus_lp(f, level, p0)));
          row.push_back(format_double(modulus_hp(f, level, p0)));
        } else {
          row.push_back("");
          row.push_back("");
        }
        table.rows.push_back(row);
      }
      break;
    }
    case TableKind::hardy_sums: {
      table.columns = {"k", "hardy_running", "paley_levels", "strong_partial_running",
                       "strong_fejer_running"};
      double p = config.p_values.empty() ? 0.5 : config.p_values.front();
      int alpha = static_cast<int>(std::min<std::int64_t>(config.k_hi, (resolution - 1) / 1));
      alpha = std::min(alpha, resolution - 1);
      GridFunction f = make_atom(std::max(1, alpha), p, radix, resolution);
      CoefficientVector cf = forward(f);
      GridFunction running = make_grid(radix, resolution);
      GridFunction sigma_acc = make_grid(radix, resolution);
      long double hardy = 0.0L, strong_p = 0.0L, strong_f = 0.0L, paley = 0.0L;
      for (std::int64_t k = 1; k <= max_n; ++k) {
        if (k < grid)
          hardy += std::pow(std::abs(cf.coeff[k]), p) /
                   std::pow(static_cast<double>(k), 2.0 - p);
        GridFunction psi = vilenkin_function(k - 1, radix, resolution);
        running.values += cf.coeff[k - 1] * psi.values;
        sigma_acc.values += running.values;
        strong_p += std::pow(lp_norm(running, p), p) / std::pow(static_cast<double>(k), 2.0 - p);
        GridFunction sigma = Complex(1.0 / static_cast<double>(k), 0.0) * sigma_acc;
        strong_f +=
            std::pow(lp_norm(sigma, p), p) / std::pow(static_cast<double>(k), 2.0 - 2.0 * p);
        std::string paley_cell;
        if (k < resolution) {
          // running Paley level sum over levels 1..k
          double mk = static_cast<double>(radix.product(static_cast<int>(k)));
          long double inner = 0.0L;
          for (int j = 1; j < radix.radix(static_cast<int>(k)); ++j) {
            double mag = std::abs(cf.coeff[j * radix.product(static_cast<int>(k))]);
            inner += static_cast<long double>(mag) * mag;
          }
          paley += static_cast<long double>(std::pow(mk, 2.0 - 2.0 / p)) * inner;
          paley_cell = format_double(std::sqrt(static_cast<double>(paley)));
        }
        table.rows.push_back({std::to_string(k), format_double(static_cast<double>(hardy)),
                              paley_cell, format_double(static_cast<double>(strong_p)),
                              format_double(static_cast<double>(strong_f))});
      }
      break;
    }
  }
  return table.render(config.format);
}

std::string run_divergence(const ExperimentConfig& config, DivergenceExample example,
                           DivergenceTarget target) {
  RadixSequence radix = config_radix(config);
  int resolution = config_resolution(config, radix);
  std::int64_t grid = radix.grid_size(resolution);
  double p = config.p_values.empty() ? 1.0 / 3.0 : config.p_values.front();
  Table table;
  table.columns = {"k", "alpha", "block_M", "quantity", "oracle", "growth"};

  double previous = 0.0;
  for (std::int64_t k = config.k_lo; k <= config.k_hi; ++k) {
    std::int64_t block;  // digit position 2 alpha_k of the active block
    if (example == DivergenceExample::ex261) {
      if (k >= radix.depth()) throw std::out_of_range("divergence: M_k index infeasible");
      block = 2 * radix.product(static_cast<int>(k));
    } else {
      block = 2 * k;
    }
    if (block + 1 > resolution)
      throw std::out_of_range("divergence: 2 alpha_k + 1 exceeds resolution");
    std::int64_t m_block = radix.product(static_cast<int>(block));

    MartingaleFamilySpec spec;
    spec.p = p;
    spec.resolution = resolution;
    switch (example) {
      case DivergenceExample::ex22:
        spec.family = MartingaleFamily::single_atom;
        spec.alpha_seq = {k};
        break;
      case DivergenceExample::ex251:
        spec.family = MartingaleFamily::inv_sqrt_alpha;
        for (std::int64_t a = config.k_lo; a <= k; ++a) spec.alpha_seq.push_back(a);
        break;
      case DivergenceExample::ex261:
        spec.family = MartingaleFamily::inv_Mk_pow;
        for (std::int64_t a = config.k_lo; a <= k; ++a) spec.alpha_seq.push_back(a);
        break;
    }
    GridFunction f = build_martingale(spec, radix).f;
    double hp = hp_norm(f, p);

    double quantity = 0.0;
    std::string oracle_cell;
    switch (target) {
      case DivergenceTarget::fejer: {
        if (example == DivergenceExample::ex22) {
          GridFunction sigma =
              mean(f, MeanSpec::norlund(WeightSequence::fejer()), m_block + 1);
          quantity = weak_lp_norm(sigma, p) / hp;
          double m = static_cast<double>(m_block);
          oracle_cell = format_double(std::pow(m, 1.0 / p - 1.0) / (m + 1.0));
        } else {
          std::int64_t idx = example == DivergenceExample::ex251
                                 ? special_index_q(static_cast<int>(k), radix)
                                 : m_block + 1;
          if (idx > grid) throw std::out_of_range("divergence: q index exceeds grid");
          GridFunction sigma = mean(f, MeanSpec::norlund(WeightSequence::fejer()), idx);
          quantity = std::pow(lp_norm(sigma, p), p);
        }
        break;
      }
      case DivergenceTarget::partial: {
        GridFunction sn = partial_sum(f, m_block + 1);
        quantity = weak_lp_norm(sn, p) / hp;
        if (example == DivergenceExample::ex22)
          oracle_cell = format_double(std::pow(static_cast<double>(m_block), 1.0 / p - 1.0));
        break;
      }
      case DivergenceTarget::riesz_log:
      case DivergenceTarget::norlund_log: {
        // sup over the two-block indices M_{2a} + M_{2s} - 1, s <= a
        GridFunction star = make_grid(radix, resolution);
        CoefficientVector cf = forward(f);
        std::int64_t a = block / 2;
        for (std::int64_t sidx = (2 * a) / 3; sidx <= a; ++sidx) {
          if (sidx < 1) continue;
          std::int64_t idx = m_block + radix.product(static_cast<int>(2 * sidx)) - 1;
          if (idx < 2 || idx > grid) continue;
          MeanSpec spec_mean = target == DivergenceTarget::riesz_log
                                   ? MeanSpec::riesz_log()
                                   : MeanSpec::norlund(WeightSequence::norlund_log());
          GridFunction tn = mean(cf, spec_mean, idx);
          for (std::int64_t t = 0; t < grid; ++t)
            star.values[t] = std::max(star.values[t].real(), std::abs(tn.values[t]));
        }
        quantity = std::pow(lp_norm(star, p), p);
        break;
      }
    }

    std::string growth = previous > 0.0 ? format_double(quantity / previous) : "";
    table.rows.push_back({std::to_string(k), std::to_string(block / 2),
                          std::to_string(m_block), format_double(quantity), oracle_cell,
                          growth});
    previous = quantity;
  }
  return table.render(config.format);
}

std::string summary_to_csv(const std::vector<CheckResult>& results) {
  Table table;
  table.columns = {"check", "max_dev", "threshold", "pass"};
  for (const auto& r : results)
    table.rows.push_back(
        {r.check, format_double(r.max_dev), format_double(r.threshold), r.pass ? "1" : "0"});
  return table.to_csv();
}

std::string summary_to_json(const std::vector<CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json obj;
    obj["check"] = r.check;
    obj["max_dev"] = r.max_dev;
    obj["threshold"] = r.threshold;
    obj["pass"] = r.pass;
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

int summary_exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace vilenkin
