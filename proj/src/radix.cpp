#include "vilenkin/radix.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace vilenkin {

namespace {

constexpr std::int64_t kMaxGridSize = std::int64_t{1} << 20;

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("radix spec: bad integer '" + std::string(s) + "'");
  return value;
}

}  // namespace

RadixSequence::RadixSequence(std::vector<int> m) : m_(std::move(m)) {
  if (m_.empty()) throw std::invalid_argument("radix sequence must be nonempty");
  products_.resize(m_.size() + 1);
  products_[0] = 1;
  for (std::size_t k = 0; k < m_.size(); ++k) {
    if (m_[k] < 2) throw std::invalid_argument("every radix entry must be >= 2");
    products_[k + 1] = products_[k] * m_[k];
    if (products_[k + 1] > kMaxGridSize)
      throw std::invalid_argument("grid size M_N exceeds the 2^20 cap");
  }
  lambda_ = *std::max_element(m_.begin(), m_.end());
}

RadixSequence RadixSequence::parse(std::string_view spec) {
  std::vector<int> m;
  std::size_t pos = 0;
  if (spec.empty()) throw std::invalid_argument("empty radix spec");
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string_view seg = spec.substr(pos, comma == std::string_view::npos ? spec.size() - pos
                                                                            : comma - pos);
    if (seg.empty()) throw std::invalid_argument("radix spec: empty segment");
    std::size_t caret = seg.find('^');
    if (caret == std::string_view::npos) {
      m.push_back(parse_int(seg));
    } else {
      int base = parse_int(seg.substr(0, caret));
      int count = parse_int(seg.substr(caret + 1));
      if (count < 1) throw std::invalid_argument("radix spec: repeat count must be >= 1");
      m.insert(m.end(), static_cast<std::size_t>(count), base);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return RadixSequence(std::move(m));
}

std::string RadixSequence::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < m_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(m_[k]);
  }
  return out;
}

IndexExpansion expand_index(std::int64_t n, const RadixSequence& radix) {
  if (n < 0 || n >= radix.product(radix.depth()))
    throw std::out_of_range("expand_index: n outside [0, M_N)");
  IndexExpansion out;
  out.value = n;
  out.digits.assign(static_cast<std::size_t>(radix.depth()), 0);
  for (int j = 0; j < radix.depth() && n > 0; ++j) {
    out.digits[static_cast<std::size_t>(j)] = static_cast<int>(n % radix.radix(j));
    n /= radix.radix(j);
  }
  return out;
}

std::int64_t compose_index(std::span<const int> digits, const RadixSequence& radix) {
  if (static_cast<int>(digits.size()) > radix.depth())
    throw std::invalid_argument("compose_index: more digits than radix depth");
  std::int64_t n = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    int d = digits[j];
    if (d < 0 || d >= radix.radix(static_cast<int>(j)))
      throw std::domain_error("compose_index: digit out of range");
    n += static_cast<std::int64_t>(d) * radix.product(static_cast<int>(j));
  }
  return n;
}

LeadTrail lead_trail(std::int64_t n, const RadixSequence& radix) {
  if (n < 1) throw std::domain_error("lead_trail: n must be >= 1");
  auto e = expand_index(n, radix);
  LeadTrail out;
  out.lead = -1;
  for (int j = 0; j < radix.depth(); ++j) {
    if (e.digits[static_cast<std::size_t>(j)] != 0) {
      if (out.lead < 0) out.lead = j;
      out.trail = j;
    }
  }
  out.spread = out.trail - out.lead;
  return out;
}

Variation variation(std::int64_t n, const RadixSequence& radix) {
  if (n < 1) throw std::domain_error("variation: n must be >= 1");
  auto e = expand_index(n, radix);
  int depth = radix.depth();
  auto delta = [&](int j) -> int {
    if (j < 0 || j >= depth) return 0;
    return e.digits[static_cast<std::size_t>(j)] != 0 ? 1 : 0;
  };
  Variation out;
  out.v = delta(0);
  for (int j = 0; j <= depth; ++j) out.v += std::abs(delta(j + 1) - delta(j));
  for (int j = 0; j < depth; ++j) {
    int d = e.digits[static_cast<std::size_t>(j)];
    if (d == 0) continue;
    int inv = (radix.radix(j) - d) % radix.radix(j);
    out.v_star += std::abs(inv - 1);
  }
  return out;
}

GroupPoint point_arithmetic(const GroupPoint& x, const GroupPoint& y, PointOp op,
                            const RadixSequence& radix) {
  if (x.resolution() != y.resolution())
    throw std::invalid_argument("point_arithmetic: resolution mismatch");
  if (x.resolution() > radix.depth())
    throw std::invalid_argument("point_arithmetic: resolution exceeds radix depth");
  GroupPoint out;
  out.digits.resize(x.digits.size());
  for (std::size_t j = 0; j < x.digits.size(); ++j) {
    int m = radix.radix(static_cast<int>(j));
    if (x.digits[j] < 0 || x.digits[j] >= m || y.digits[j] < 0 || y.digits[j] >= m)
      throw std::domain_error("point_arithmetic: digit out of range");
    int s = op == PointOp::add ? x.digits[j] + y.digits[j] : x.digits[j] - y.digits[j] + m;
    out.digits[j] = s % m;
  }
  return out;
}

GroupPoint basis_point(int n, int resolution, const RadixSequence& radix) {
  if (resolution > radix.depth())
    throw std::invalid_argument("basis_point: resolution exceeds radix depth");
  if (n < 0 || n >= resolution) throw std::out_of_range("basis_point: n >= resolution");
  GroupPoint out;
  out.digits.assign(static_cast<std::size_t>(resolution), 0);
  out.digits[static_cast<std::size_t>(n)] = 1;
  return out;
}

CosetClass classify_coset(const GroupPoint& x, int resolution, const RadixSequence& radix) {
  if (x.resolution() < resolution)
    throw std::invalid_argument("classify_coset: point resolution below N");
  (void)radix;
  CosetClass out;
  int first = -1, second = -1;
  for (int j = 0; j < resolution; ++j) {
    if (x.digits[static_cast<std::size_t>(j)] != 0) {
      if (first < 0)
        first = j;
      else if (second < 0)
        second = j;
    }
  }
  if (first < 0) {
    out.inside = true;
    return out;
  }
  out.s = first;
  out.k = first;
  out.l = second < 0 ? resolution : second;
  return out;
}

std::int64_t special_index_q(int n, const RadixSequence& radix) {
  if (n < 0) throw std::domain_error("special_index_q: n must be >= 0");
  if (2 * n >= radix.depth())
    throw std::out_of_range("special_index_q: 2n exceeds radix depth");
  std::int64_t q = 0;
  for (int j = 0; j <= n; ++j) q += radix.product(2 * j);
  return q;
}

GroupPoint point_from_index(std::int64_t t, int resolution, const RadixSequence& radix) {
  if (t < 0 || t >= radix.grid_size(resolution))
    throw std::out_of_range("point_from_index: index outside grid");
  GroupPoint out;
  out.digits.assign(static_cast<std::size_t>(resolution), 0);
  for (int j = 0; j < resolution && t > 0; ++j) {
    out.digits[static_cast<std::size_t>(j)] = static_cast<int>(t % radix.radix(j));
    t /= radix.radix(j);
  }
  return out;
}

std::int64_t index_of_point(const GroupPoint& x, const RadixSequence& radix) {
  return compose_index(x.digits, radix);
}

}  // namespace vilenkin
