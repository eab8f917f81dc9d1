#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vilenkin {

/// Generating sequence m = (m_0, m_1, ...) of a bounded Vilenkin group,
/// together with the derived products M_0 = 1, M_{k+1} = m_k M_k and
/// lambda = max_k m_k.
///
/// Immutable after construction; every operation on it is pure.
class RadixSequence {
 public:
  explicit RadixSequence(std::vector<int> m);

  /// Parses a radix specification string: a comma list such as "2,3,4,3",
  /// where each segment may use the shorthand "v^k" (k copies of v).
  /// "2^10" is ten twos.
  static RadixSequence parse(std::string_view spec);

  int depth() const { return static_cast<int>(m_.size()); }
  int radix(int k) const { return m_.at(static_cast<std::size_t>(k)); }
  std::span<const int> moduli() const { return m_; }

  /// M_k for 0 <= k <= depth().
  std::int64_t product(int k) const { return products_.at(static_cast<std::size_t>(k)); }
  /// Grid size M_N of a rank-N truncation.
  std::int64_t grid_size(int resolution) const { return product(resolution); }

  int lambda() const { return lambda_; }

  std::string to_string() const;

  bool operator==(const RadixSequence& other) const { return m_ == other.m_; }

 private:
  std::vector<int> m_;
  std::vector<std::int64_t> products_;
  int lambda_ = 0;
};

/// Mixed-radix digit expansion of an index n = sum_j n_j M_j.
struct IndexExpansion {
  std::int64_t value = 0;
  std::vector<int> digits;  // digits[j] = n_j, length = radix depth
};

/// A point of the rank-N truncated group: digits x_j, 0 <= x_j < m_j.
struct GroupPoint {
  std::vector<int> digits;
  int resolution() const { return static_cast<int>(digits.size()); }
};

/// Structural indices of an index n >= 1: lead = <n> (lowest nonzero digit
/// position), trail = |n| (highest), spread = d(n) = |n| - <n>.
struct LeadTrail {
  int lead = 0;
  int trail = 0;
  int spread = 0;
};

/// Digit-variation functionals v(n), v*(n) controlling the Lebesgue constant.
struct Variation {
  std::int64_t v = 0;
  std::int64_t v_star = 0;
};

/// Coset classification of a point against the rank-N partition: either
/// x lies in I_N, or s identifies the shell I_s \ I_{s+1} containing x and
/// (k, l) the cell I_N^{k,l} (l = N for the single-nonzero-digit case).
struct CosetClass {
  bool inside = false;  // x in I_N
  int s = -1;
  int k = -1;
  int l = -1;
};

IndexExpansion expand_index(std::int64_t n, const RadixSequence& radix);

std::int64_t compose_index(std::span<const int> digits, const RadixSequence& radix);

LeadTrail lead_trail(std::int64_t n, const RadixSequence& radix);

/// v(n) = sum_{j>=0} |delta_{j+1} - delta_j| + delta_0 with delta_j = sign(n_j);
/// equivalently twice the number of maximal runs of nonzero digits.
/// v*(n) = sum_{j>=0} |(-n_j mod m_j) - 1| sign(n_j).
Variation variation(std::int64_t n, const RadixSequence& radix);

enum class PointOp { add, sub };

GroupPoint point_arithmetic(const GroupPoint& x, const GroupPoint& y, PointOp op,
                            const RadixSequence& radix);

inline GroupPoint point_add(const GroupPoint& x, const GroupPoint& y, const RadixSequence& r) {
  return point_arithmetic(x, y, PointOp::add, r);
}
inline GroupPoint point_sub(const GroupPoint& x, const GroupPoint& y, const RadixSequence& r) {
  return point_arithmetic(x, y, PointOp::sub, r);
}

/// e_n: digit n equals 1, all others 0.
GroupPoint basis_point(int n, int resolution, const RadixSequence& radix);

CosetClass classify_coset(const GroupPoint& x, int resolution, const RadixSequence& radix);

/// q_n = M_{2n} + M_{2n-2} + ... + M_2 + M_0.
std::int64_t special_index_q(int n, const RadixSequence& radix);

/// Enumeration helpers between flat grid indices t = sum x_j M_j and points.
GroupPoint point_from_index(std::int64_t t, int resolution, const RadixSequence& radix);
std::int64_t index_of_point(const GroupPoint& x, const RadixSequence& radix);

}  // namespace vilenkin
