#pragma once

#include <Eigen/Core>
#include <complex>
#include <iosfwd>

#include "vilenkin/radix.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// A function constant on rank-N cosets of the group, stored as the M_N
/// values on the coset grid. Entry t holds the value on I_N(x) where x has
/// the mixed-radix digits of t. Exact carrier for every Vilenkin polynomial
/// of order < M_N.
struct GridFunction {
  RadixSequence radix;
  int resolution = 0;
  Eigen::VectorXcd values;

  std::int64_t size() const { return values.size(); }
  bool same_shape(const GridFunction& other) const {
    return radix == other.radix && resolution == other.resolution;
  }
};

GridFunction make_grid(const RadixSequence& radix, int resolution);
GridFunction constant(const RadixSequence& radix, int resolution, Complex value);

/// Indicator of the coset I_n(anchor digits 0): 1 on I_n, 0 elsewhere.
GridFunction indicator_In(const RadixSequence& radix, int resolution, int n);

/// Haar integral: (1/M_N) sum_t values[t]. Pairwise summation.
Complex integrate(const GridFunction& f);

/// (int |f|^p dmu)^{1/p} for finite p, max |f| for p = infinity.
double lp_norm(const GridFunction& f, double p);

/// sup_{lambda>0} lambda * mu(|f| > lambda)^{1/p}; the sup is scanned just
/// below every distinct value of |f|.
double weak_lp_norm(const GridFunction& f, double p);

/// g(x) = f(x - h), digitwise modular shift.
GridFunction translate(const GridFunction& f, const GroupPoint& h);

/// (f*g)(x) = (1/M_N) sum_t f(t) g(x - t). O(M_N^2) reference path.
GridFunction convolve_direct(const GridFunction& f, const GridFunction& g);

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(Complex c, const GridFunction& f);
/// Pointwise product.
GridFunction pointwise(const GridFunction& f, const GridFunction& g);
/// Pointwise modulus |f| as a real-valued grid function.
GridFunction abs(const GridFunction& f);

double max_abs_diff(const GridFunction& f, const GridFunction& g);

/// CSV with header "t,re,im".
void write_csv(std::ostream& os, const GridFunction& f);
GridFunction read_grid_csv(std::istream& is, const RadixSequence& radix, int resolution);

/// Deterministic pairwise sum over a contiguous range.
Complex pairwise_sum(std::span<const Complex> xs);
double pairwise_sum(std::span<const double> xs);

}  // namespace vilenkin
