#include "vilenkin/roots.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vilenkin {

namespace {

const double kSqrt3Half = std::sqrt(3.0) / 2.0;
const double kSqrt2Half = std::sqrt(2.0) / 2.0;

double snap(double x) {
  static const double exact[] = {0.0, 0.5, -0.5, 1.0, -1.0};
  for (double e : exact)
    if (std::abs(x - e) < 1e-12) return e;
  return x;
}

bool split_component(double x, double* rational, int* t3, int* t2) {
  *rational = 0.0;
  *t3 = 0;
  *t2 = 0;
  static const double exact[] = {0.0, 0.5, -0.5, 1.0, -1.0};
  for (double e : exact) {
    if (x == e) {
      *rational = e;
      return true;
    }
  }
  if (std::abs(x - kSqrt3Half) < 1e-12) { *t3 = 1; return true; }
  if (std::abs(x + kSqrt3Half) < 1e-12) { *t3 = -1; return true; }
  if (std::abs(x - kSqrt2Half) < 1e-12) { *t2 = 1; return true; }
  if (std::abs(x + kSqrt2Half) < 1e-12) { *t2 = -1; return true; }
  return false;
}

}  // namespace

std::vector<Complex> unit_roots(int m) {
  if (m < 1) throw std::invalid_argument("unit_roots: m must be >= 1");
  std::vector<Complex> table(static_cast<std::size_t>(m));
  table[0] = Complex(1.0, 0.0);
  int half = m / 2;
  for (int a = 1; a <= half; ++a) {
    double angle = 2.0 * M_PI * static_cast<double>(a) / static_cast<double>(m);
    Complex w(snap(std::cos(angle)), snap(std::sin(angle)));
    table[static_cast<std::size_t>(a)] = w;
    if (a != m - a) table[static_cast<std::size_t>(m - a)] = std::conj(w);
  }
  return table;
}

PhaseLattice::PhaseLattice(const RadixSequence& radix) {
  std::int64_t l = 1;
  for (int k = 0; k < radix.depth(); ++k) l = std::lcm(l, static_cast<std::int64_t>(radix.radix(k)));
  if (l > 1 << 16) throw std::invalid_argument("phase lattice order too large");
  order_ = static_cast<int>(l);
  weights_.resize(static_cast<std::size_t>(radix.depth()));
  for (int k = 0; k < radix.depth(); ++k)
    weights_[static_cast<std::size_t>(k)] = order_ / radix.radix(k);
  roots_ = unit_roots(order_);
  re_split_.resize(roots_.size());
  im_split_.resize(roots_.size());
  exact_ = true;
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    bool ok_re = split_component(roots_[r].real(), &re_split_[r].rational, &re_split_[r].sqrt3_half,
                                 &re_split_[r].sqrt2_half);
    bool ok_im = split_component(roots_[r].imag(), &im_split_[r].rational, &im_split_[r].sqrt3_half,
                                 &im_split_[r].sqrt2_half);
    if (!ok_re || !ok_im) exact_ = false;
  }
}

Complex PhaseLattice::dot(std::span<const std::int64_t> counts) const {
  if (counts.size() != roots_.size()) throw std::invalid_argument("dot: count size mismatch");
  if (!exact_) {
    Complex sum(0.0, 0.0);
    for (std::size_t r = 0; r < counts.size(); ++r)
      sum += static_cast<double>(counts[r]) * roots_[r];
    return sum;
  }
  double re_q = 0.0, im_q = 0.0;
  std::int64_t re_t3 = 0, re_t2 = 0, im_t3 = 0, im_t2 = 0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) continue;
    double c = static_cast<double>(counts[r]);
    re_q += c * re_split_[r].rational;
    im_q += c * im_split_[r].rational;
    re_t3 += counts[r] * re_split_[r].sqrt3_half;
    re_t2 += counts[r] * re_split_[r].sqrt2_half;
    im_t3 += counts[r] * im_split_[r].sqrt3_half;
    im_t2 += counts[r] * im_split_[r].sqrt2_half;
  }
  double re = re_q + kSqrt3Half * static_cast<double>(re_t3) +
              kSqrt2Half * static_cast<double>(re_t2);
  double im = im_q + kSqrt3Half * static_cast<double>(im_t3) +
              kSqrt2Half * static_cast<double>(im_t2);
  return Complex(re, im);
}

}  // namespace vilenkin
