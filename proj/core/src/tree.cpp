#include "lamplighter/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lamplighter/detail/grid_tree.hpp"

namespace lamplighter {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

TreeNode TreeNode::from_bits(std::uint64_t bits, int depth) {
  if (depth < 0 || depth > kMaxTreeDepth) {
    throw std::out_of_range("tree depth " + std::to_string(depth) + " unsupported");
  }
  TreeNode node;
  node.depth_ = depth;
  node.bits_ = depth == 64 ? bits : bits & ((std::uint64_t{1} << depth) - 1);
  return node;
}

TreeNode TreeNode::parse(std::string_view bitstring) {
  if (bitstring.size() > static_cast<std::size_t>(kMaxTreeDepth)) {
    throw std::out_of_range("tree node deeper than supported");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < bitstring.size(); ++i) {
    const char c = bitstring[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("tree node must be a 0/1 string, got '" +
                                  std::string(bitstring) + "'");
    }
    if (c == '1') bits |= std::uint64_t{1} << i;
  }
  return from_bits(bits, static_cast<int>(bitstring.size()));
}

TreeNode TreeNode::child(int b) const {
  if (depth_ >= kMaxTreeDepth) throw std::out_of_range("tree node at maximum depth");
  TreeNode node = *this;
  if (b != 0) node.bits_ |= std::uint64_t{1} << depth_;
  ++node.depth_;
  return node;
}

TreeNode TreeNode::prefix(int len) const {
  if (len < 0 || len > depth_) throw std::out_of_range("prefix longer than node");
  return from_bits(bits_, len);
}

std::string TreeNode::to_string() const {
  std::string s(static_cast<std::size_t>(depth_), '0');
  for (int i = 0; i < depth_; ++i) {
    if (bit(i) != 0) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

bool in_w(const HoroPoint& w, int n) {
  const int d1 = w.a1.depth();
  const int d2 = w.a2.depth();
  // n/6 <= d <= 5n/6 without rounding.
  auto in_window = [n](int d) { return 6 * d >= n && 6 * d <= 5 * n; };
  return d1 + d2 == n && in_window(d1) && in_window(d2);
}

TreePoint::TreePoint(TreeNode base, int edge_child, Rational offset)
    : base_(base), offset_(offset) {
  if (offset < 0 || offset > 1) {
    throw std::invalid_argument("edge offset must lie in [0, 1], got " +
                                lamplighter::to_string(offset));
  }
  if (edge_child != 0 && edge_child != 1) throw std::invalid_argument("edge child must be 0 or 1");
  if (offset == 1) {
    base_ = base.child(edge_child);
    offset_ = 0;
  } else if (offset != 0) {
    if (base.depth() >= kMaxTreeDepth) throw std::out_of_range("edge below maximum depth");
    edge_child_ = edge_child;
  }
}

TreePoint TreePoint::parse(std::string_view text) {
  const auto plus = text.find('+');
  if (plus == std::string_view::npos) return TreePoint(TreeNode::parse(text));
  const auto arrow = text.find('>', plus);
  if (arrow == std::string_view::npos || arrow + 2 != text.size()) {
    throw std::invalid_argument("tree point must look like <bits>+<p>/<q>><bit>, got '" +
                                std::string(text) + "'");
  }
  const char b = text[arrow + 1];
  if (b != '0' && b != '1') throw std::invalid_argument("edge child must be 0 or 1");
  return TreePoint(TreeNode::parse(text.substr(0, plus)), b - '0',
                   parse_rational(text.substr(plus + 1, arrow - plus - 1)));
}

std::string TreePoint::to_string() const {
  if (is_vertex()) return base_.to_string();
  return base_.to_string() + "+" + std::to_string(offset_.numerator()) + "/" +
         std::to_string(offset_.denominator()) + ">" + std::to_string(*edge_child_);
}

Rational tree_point_dist(const TreePoint& p, const TreePoint& q) {
  const Rational hp = p.height();
  const Rational hq = q.height();
  Rational meet(lgc(p.label(), q.label()));
  meet = std::min({meet, hp, hq});
  return hp + hq - 2 * meet;
}

TreePoint point_on_geodesic(const TreePoint& from, const TreePoint& to, const Rational& s) {
  const Rational d = tree_point_dist(from, to);
  if (s < 0 || s > d) throw std::out_of_range("geodesic parameter outside [0, d]");
  const std::int64_t scale = std::lcm(std::lcm(from.offset().denominator(),
                                               to.offset().denominator()),
                                      s.denominator());
  const detail::GridTree grid(scale);
  const Rational ticks = s * scale;
  return grid.to_tree_point(grid.on_geodesic(grid.from_tree_point(from),
                                             grid.from_tree_point(to), ticks.numerator()));
}

Rational d_inf(const PiPoint& x, const PiPoint& y) {
  return std::max(tree_point_dist(x.p1, y.p1), tree_point_dist(x.p2, y.p2));
}

Rational d_1(const PiPoint& x, const PiPoint& y) {
  return tree_point_dist(x.p1, y.p1) + tree_point_dist(x.p2, y.p2);
}

BallSystemInfeasible::BallSystemInfeasible(std::size_t i, std::size_t j, const std::string& detail)
    : std::runtime_error("infeasible ball system: " + detail), i_(i), j_(j) {}

TreePoint ball_intersect(std::span<const TreePoint> centers, std::span<const Rational> radii) {
  if (centers.size() != radii.size()) {
    throw std::invalid_argument("ball_intersect: centers and radii differ in length");
  }
  if (centers.empty()) throw std::invalid_argument("ball_intersect: no balls");
  // Doubling the common denominator puts the exact midpoint on the grid.
  std::int64_t scale = 1;
  for (const auto& c : centers) scale = std::lcm(scale, c.offset().denominator());
  for (const auto& r : radii) scale = std::lcm(scale, r.denominator());
  scale *= 2;

  const detail::GridTree grid(scale);
  std::vector<detail::GridPoint> pts;
  std::vector<std::int64_t> ticks;
  pts.reserve(centers.size());
  ticks.reserve(radii.size());
  for (const auto& c : centers) pts.push_back(grid.from_tree_point(c));
  for (const auto& r : radii) {
    if (r < 0) throw std::invalid_argument("ball_intersect: negative radius");
    ticks.push_back((r * scale).numerator());
  }
  return grid.to_tree_point(detail::grid_ball_intersect(grid, pts, ticks).point);
}

SparseVector tree_to_l1(const TreeNode& a) {
  SparseVector v;
  v.reserve(static_cast<std::size_t>(a.depth()));
  for (int len = 1; len <= a.depth(); ++len) v.emplace_back(a.prefix(len), 1);
  return v;
}

std::int64_t l1_distance(const SparseVector& x, const SparseVector& y) {
  auto sorted = [](SparseVector v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const SparseVector a = sorted(x);
  const SparseVector b = sorted(y);
  std::int64_t total = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      total += std::abs(a[i++].second);
    } else if (i == a.size() || b[j].first < a[i].first) {
      total += std::abs(b[j++].second);
    } else {
      total += std::abs(a[i++].second - b[j++].second);
    }
  }
  return total;
}

}  // namespace lamplighter
