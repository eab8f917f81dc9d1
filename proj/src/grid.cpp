#include "vilenkin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vilenkin {

namespace {

void require_same_shape(const GridFunction& f, const GridFunction& g) {
  if (!f.same_shape(g)) throw std::invalid_argument("grid functions have mismatched shape");
}

template <typename T>
T pairwise_impl(std::span<const T> xs) {
  if (xs.size() <= 32) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_impl(xs.subspan(0, half)) + pairwise_impl(xs.subspan(half));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> xs) { return pairwise_impl(xs); }
double pairwise_sum(std::span<const double> xs) { return pairwise_impl(xs); }

GridFunction make_grid(const RadixSequence& radix, int resolution) {
  if (resolution < 0 || resolution > radix.depth())
    throw std::invalid_argument("make_grid: resolution outside [0, depth]");
  GridFunction f{radix, resolution, Eigen::VectorXcd::Zero(radix.grid_size(resolution))};
  return f;
}

GridFunction constant(const RadixSequence& radix, int resolution, Complex value) {
  GridFunction f = make_grid(radix, resolution);
  f.values.setConstant(value);
  return f;
}

GridFunction indicator_In(const RadixSequence& radix, int resolution, int n) {
  if (n < 0 || n > resolution) throw std::out_of_range("indicator_In: n outside [0, N]");
  GridFunction f = make_grid(radix, resolution);
  std::int64_t block = radix.grid_size(resolution) / radix.product(n);
  // I_n = points with digits x_0..x_{n-1} all zero: indices t = s*M_n.
  for (std::int64_t s = 0; s < block; ++s) f.values[s * radix.product(n)] = 1.0;
  return f;
}

Complex integrate(const GridFunction& f) {
  Complex total = pairwise_sum(std::span<const Complex>(f.values.data(),
                                                        static_cast<std::size_t>(f.size())));
  return total / static_cast<double>(f.size());
}

double lp_norm(const GridFunction& f, double p) {
  if (!(p > 0.0)) throw std::domain_error("lp_norm: p must be positive");
  if (std::isinf(p)) return f.values.cwiseAbs().maxCoeff();
  std::vector<double> pow_abs(static_cast<std::size_t>(f.size()));
  if (p == 1.0) {
    for (std::int64_t t = 0; t < f.size(); ++t)
      pow_abs[static_cast<std::size_t>(t)] = std::abs(f.values[t]);
  } else if (p == 2.0) {
    for (std::int64_t t = 0; t < f.size(); ++t)
      pow_abs[static_cast<std::size_t>(t)] = std::norm(f.values[t]);
  } else {
    for (std::int64_t t = 0; t < f.size(); ++t)
      pow_abs[static_cast<std::size_t>(t)] = std::pow(std::abs(f.values[t]), p);
  }
  double mean = pairwise_sum(std::span<const double>(pow_abs)) / static_cast<double>(f.size());
  return p == 1.0 ? mean : (p == 2.0 ? std::sqrt(mean) : std::pow(mean, 1.0 / p));
}

double weak_lp_norm(const GridFunction& f, double p) {
  if (!(p > 0.0)) throw std::domain_error("weak_lp_norm: p must be positive");
  std::vector<double> mags(static_cast<std::size_t>(f.size()));
  for (std::int64_t t = 0; t < f.size(); ++t) mags[static_cast<std::size_t>(t)] = std::abs(f.values[t]);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  double best = 0.0;
  double total = static_cast<double>(f.size());
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (mags[i] == 0.0) break;
    if (i + 1 < mags.size() && mags[i + 1] == mags[i]) continue;  // last of a tie group
    double lambda = mags[i] * (1.0 - 1e-12);
    // after sorting, exactly i+1 values exceed lambda (ties included)
    double measure = static_cast<double>(i + 1) / total;
    best = std::max(best, lambda * std::pow(measure, 1.0 / p));
  }
  return best;
}

GridFunction translate(const GridFunction& f, const GroupPoint& h) {
  if (h.resolution() != f.resolution)
    throw std::invalid_argument("translate: shift resolution mismatch");
  GridFunction g = make_grid(f.radix, f.resolution);
  for (std::int64_t t = 0; t < f.size(); ++t) {
    GroupPoint x = point_from_index(t, f.resolution, f.radix);
    std::int64_t src = index_of_point(point_sub(x, h, f.radix), f.radix);
    g.values[t] = f.values[src];
  }
  return g;
}

GridFunction convolve_direct(const GridFunction& f, const GridFunction& g) {
  require_same_shape(f, g);
  GridFunction out = make_grid(f.radix, f.resolution);
  std::int64_t n = f.size();
  // Precompute the subtraction table row by row through digit arithmetic.
  std::vector<Complex> terms(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    GroupPoint xp = point_from_index(x, f.resolution, f.radix);
    for (std::int64_t t = 0; t < n; ++t) {
      GroupPoint tp = point_from_index(t, f.resolution, f.radix);
      std::int64_t d = index_of_point(point_sub(xp, tp, f.radix), f.radix);
      terms[static_cast<std::size_t>(t)] = f.values[t] * g.values[d];
    }
    out.values[x] = pairwise_sum(std::span<const Complex>(terms)) / static_cast<double>(n);
  }
  return out;
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
  require_same_shape(f, g);
  GridFunction out = f;
  out.values += g.values;
  return out;
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
  require_same_shape(f, g);
  GridFunction out = f;
  out.values -= g.values;
  return out;
}

GridFunction operator*(Complex c, const GridFunction& f) {
  GridFunction out = f;
  out.values *= c;
  return out;
}

GridFunction pointwise(const GridFunction& f, const GridFunction& g) {
  require_same_shape(f, g);
  GridFunction out = f;
  out.values = f.values.cwiseProduct(g.values);
  return out;
}

GridFunction abs(const GridFunction& f) {
  GridFunction out = f;
  out.values = f.values.cwiseAbs().cast<Complex>();
  return out;
}

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  require_same_shape(f, g);
  return (f.values - g.values).cwiseAbs().maxCoeff();
}

void write_csv(std::ostream& os, const GridFunction& f) {
  os << "t,re,im\n";
  char buf[80];
  for (std::int64_t t = 0; t < f.size(); ++t) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n", static_cast<long long>(t),
                  f.values[t].real(), f.values[t].imag());
    os << buf;
  }
}

GridFunction read_grid_csv(std::istream& is, const RadixSequence& radix, int resolution) {
  GridFunction f = make_grid(radix, resolution);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("grid csv: missing header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    std::int64_t t = std::stoll(cell);
    std::getline(row, cell, ',');
    double re = std::stod(cell);
    std::getline(row, cell, ',');
    double im = std::stod(cell);
    if (t < 0 || t >= f.size()) throw std::runtime_error("grid csv: index out of range");
    f.values[t] = Complex(re, im);
  }
  return f;
}

}  // namespace vilenkin
