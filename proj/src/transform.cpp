#include "vilenkin/transform.hpp"

#include <Eigen/Dense>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "vilenkin/roots.hpp"

namespace vilenkin {

namespace {

Eigen::MatrixXcd dft_matrix(int m, bool conjugated) {
  auto roots = unit_roots(m);
  Eigen::MatrixXcd w(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Complex r = roots[static_cast<std::size_t>((a * b) % m)];
      w(a, b) = conjugated ? std::conj(r) : r;
    }
  return w;
}

/// One separable pass per digit position; kernel is the dense m_k x m_k DFT.
void apply_separable(Eigen::VectorXcd& v, const RadixSequence& radix, int resolution,
                     bool conjugated) {
  for (int k = 0; k < resolution; ++k) {
    int m = radix.radix(k);
    std::int64_t stride = radix.product(k);
    std::int64_t block = stride * m;
    Eigen::MatrixXcd w = dft_matrix(m, conjugated);
    Eigen::VectorXcd line(m), image(m);
    for (std::int64_t base = 0; base < v.size(); base += block) {
      for (std::int64_t inner = 0; inner < stride; ++inner) {
        std::int64_t offset = base + inner;
        for (int a = 0; a < m; ++a) line[a] = v[offset + a * stride];
        image.noalias() = w * line;
        for (int a = 0; a < m; ++a) v[offset + a * stride] = image[a];
      }
    }
  }
}

}  // namespace

GridFunction rademacher(int k, const RadixSequence& radix, int resolution) {
  if (k < 0 || k >= resolution) throw std::out_of_range("rademacher: k outside [0, N)");
  GridFunction f = make_grid(radix, resolution);
  auto roots = unit_roots(radix.radix(k));
  std::int64_t stride = radix.product(k);
  for (std::int64_t t = 0; t < f.size(); ++t)
    f.values[t] = roots[static_cast<std::size_t>((t / stride) % radix.radix(k))];
  return f;
}

GridFunction vilenkin_function(std::int64_t n, const RadixSequence& radix, int resolution) {
  if (n < 0 || n >= radix.grid_size(resolution))
    throw std::out_of_range("vilenkin_function: n outside [0, M_N)");
  GridFunction f = constant(radix, resolution, Complex(1.0, 0.0));
  auto nd = expand_index(n, radix);
  for (int k = 0; k < resolution; ++k) {
    int digit = nd.digits[static_cast<std::size_t>(k)];
    if (digit == 0) continue;
    int m = radix.radix(k);
    auto roots = unit_roots(m);
    std::int64_t stride = radix.product(k);
    for (std::int64_t t = 0; t < f.size(); ++t) {
      int xk = static_cast<int>((t / stride) % m);
      f.values[t] *= roots[static_cast<std::size_t>((digit * xk) % m)];
    }
  }
  return f;
}

Complex vilenkin_value(std::int64_t n, const GroupPoint& x, const RadixSequence& radix) {
  auto nd = expand_index(n, radix);
  Complex v(1.0, 0.0);
  for (int k = 0; k < x.resolution(); ++k) {
    int digit = nd.digits[static_cast<std::size_t>(k)];
    if (digit == 0) continue;
    int m = radix.radix(k);
    auto roots = unit_roots(m);
    v *= roots[static_cast<std::size_t>((digit * x.digits[static_cast<std::size_t>(k)]) % m)];
  }
  return v;
}

CoefficientVector forward(const GridFunction& f) {
  CoefficientVector c{f.radix, f.resolution, f.values};
  apply_separable(c.coeff, f.radix, f.resolution, /*conjugated=*/true);
  c.coeff /= static_cast<double>(f.size());
  return c;
}

CoefficientVector forward_naive(const GridFunction& f) {
  CoefficientVector c{f.radix, f.resolution, Eigen::VectorXcd::Zero(f.size())};
  std::vector<Complex> terms(static_cast<std::size_t>(f.size()));
  for (std::int64_t n = 0; n < f.size(); ++n) {
    GridFunction psi = vilenkin_function(n, f.radix, f.resolution);
    for (std::int64_t t = 0; t < f.size(); ++t)
      terms[static_cast<std::size_t>(t)] = f.values[t] * std::conj(psi.values[t]);
    c.coeff[n] = pairwise_sum(std::span<const Complex>(terms)) / static_cast<double>(f.size());
  }
  return c;
}

GridFunction inverse(const CoefficientVector& c) {
  GridFunction f{c.radix, c.resolution, c.coeff};
  apply_separable(f.values, c.radix, c.resolution, /*conjugated=*/false);
  return f;
}

GridFunction convolve_fast(const GridFunction& f, const GridFunction& g) {
  if (!f.same_shape(g)) throw std::invalid_argument("convolve_fast: shape mismatch");
  CoefficientVector cf = forward(f);
  CoefficientVector cg = forward(g);
  cf.coeff = cf.coeff.cwiseProduct(cg.coeff);
  return inverse(cf);
}

void write_csv(std::ostream& os, const CoefficientVector& c) {
  os << "n,re,im\n";
  char buf[80];
  for (std::int64_t n = 0; n < c.size(); ++n) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n", static_cast<long long>(n),
                  c.coeff[n].real(), c.coeff[n].imag());
    os << buf;
  }
}

CoefficientVector read_coeff_csv(std::istream& is, const RadixSequence& radix, int resolution) {
  CoefficientVector c{radix, resolution, Eigen::VectorXcd::Zero(radix.grid_size(resolution))};
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("coeff csv: missing header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    std::int64_t n = std::stoll(cell);
    std::getline(row, cell, ',');
    double re = std::stod(cell);
    std::getline(row, cell, ',');
    double im = std::stod(cell);
    if (n < 0 || n >= c.size()) throw std::runtime_error("coeff csv: index out of range");
    c.coeff[n] = Complex(re, im);
  }
  return c;
}

}  // namespace vilenkin
