#pragma once

#include <Eigen/Core>
#include <iosfwd>

#include "vilenkin/grid.hpp"
#include "vilenkin/radix.hpp"

namespace vilenkin {

/// Vilenkin coefficients f_hat(0..M_N-1) of a rank-N grid function.
struct CoefficientVector {
  RadixSequence radix;
  int resolution = 0;
  Eigen::VectorXcd coeff;

  std::int64_t size() const { return coeff.size(); }
  bool same_shape(const CoefficientVector& other) const {
    return radix == other.radix && resolution == other.resolution;
  }
};

/// Generalized Rademacher function r_k(x) = exp(2 pi i x_k / m_k).
GridFunction rademacher(int k, const RadixSequence& radix, int resolution);

/// psi_n(x) = prod_k r_k(x)^{n_k}.
GridFunction vilenkin_function(std::int64_t n, const RadixSequence& radix, int resolution);

/// Value of psi_n at a single point.
Complex vilenkin_value(std::int64_t n, const GroupPoint& x, const RadixSequence& radix);

/// Forward transform, f_hat(n) = int f conj(psi_n) dmu, via the separable
/// dimension-by-dimension DFT. Cost O(M_N * sum_k m_k).
CoefficientVector forward(const GridFunction& f);

/// O(M_N^2) oracle: direct inner products against conj(psi_n).
CoefficientVector forward_naive(const GridFunction& f);

/// Synthesis sum_n c_n psi_n; inverse(forward(f)) == f.
GridFunction inverse(const CoefficientVector& c);

/// Convolution through the transform: inverse of the pointwise coefficient
/// product. Equals convolve_direct up to roundoff.
GridFunction convolve_fast(const GridFunction& f, const GridFunction& g);

/// CSV with header "n,re,im".
void write_csv(std::ostream& os, const CoefficientVector& c);
CoefficientVector read_coeff_csv(std::istream& is, const RadixSequence& radix, int resolution);

}  // namespace vilenkin
