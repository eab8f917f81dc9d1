#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vilenkin/radix.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// Table of the m-th roots of unity, exp(2*pi*i*a/m) for a in [0, m).
/// Components whose exact value is 0, +-1/2 or +-1 are snapped to those
/// doubles, and the table is conjugate-symmetric bit for bit:
/// table[m-a] == conj(table[a]).
std::vector<Complex> unit_roots(int m);

/// Common phase lattice of a radix sequence: every character value on the
/// grid is a power of exp(2*pi*i/L) with L = lcm(m_k).
///
/// When every component of the L-th roots lies in
/// {0, +-1/2, +-1, +-sqrt3/2, +-sqrt2/2} (true for L | 12 and L | 8), sums
/// of the form sum_r count_r * root_r are evaluated by exact grouping:
/// the rational part and the two irrational coefficient combinations are
/// accumulated as integers/halves first, so integer cancellations yield an
/// exact 0.0. Other lattices fall back to a plain dot product.
class PhaseLattice {
 public:
  explicit PhaseLattice(const RadixSequence& radix);

  int order() const { return order_; }
  bool exact() const { return exact_; }

  /// Phase weight of digit position j: x_j contributes x_j * weight(j) mod L.
  int weight(int j) const { return weights_[static_cast<std::size_t>(j)]; }

  const Complex& root(int r) const { return roots_[static_cast<std::size_t>(r)]; }

  /// sum_r counts[r] * root_r with exact grouping where available.
  Complex dot(std::span<const std::int64_t> counts) const;

 private:
  struct Split {
    double rational = 0.0;  // in {0, +-1/2, +-1}
    int sqrt3_half = 0;     // coefficient of sqrt(3)/2 in {-1, 0, 1}
    int sqrt2_half = 0;     // coefficient of sqrt(2)/2 in {-1, 0, 1}
  };

  int order_ = 1;
  bool exact_ = false;
  std::vector<int> weights_;
  std::vector<Complex> roots_;
  std::vector<Split> re_split_;
  std::vector<Split> im_split_;
};

}  // namespace vilenkin
