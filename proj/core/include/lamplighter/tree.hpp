#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lamplighter/rational.hpp"

namespace lamplighter {

inline constexpr int kMaxTreeDepth = 63;

/// Vertex of a rooted binary tree: a finite 0/1 sequence. Bit i of `bits()`
/// is the i-th step from the root.
class TreeNode {
 public:
  TreeNode() = default;

  static TreeNode from_bits(std::uint64_t bits, int depth);
  static TreeNode parse(std::string_view bitstring);

  int depth() const { return depth_; }
  std::uint64_t bits() const { return bits_; }
  int bit(int i) const { return static_cast<int>((bits_ >> i) & 1U); }

  TreeNode child(int b) const;
  TreeNode prefix(int len) const;

  std::string to_string() const;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
  friend std::strong_ordering operator<=>(const TreeNode& a, const TreeNode& b) {
    if (auto c = a.depth_ <=> b.depth_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int depth_ = 0;
};

/// Length of the longest common prefix.
inline int lgc(const TreeNode& a, const TreeNode& b) {
  const int shorter = a.depth() < b.depth() ? a.depth() : b.depth();
  const std::uint64_t x = a.bits() ^ b.bits();
  const int first_diff = x == 0 ? 64 : std::countr_zero(x);
  return first_diff < shorter ? first_diff : shorter;
}

inline int tree_dist(const TreeNode& a, const TreeNode& b) {
  return a.depth() + b.depth() - 2 * lgc(a, b);
}

/// Element of T_n x T_n; a member of W_n when the depths sum to n and each
/// lies in [n/6, 5n/6].
struct HoroPoint {
  TreeNode a1;
  TreeNode a2;

  friend bool operator==(const HoroPoint&, const HoroPoint&) = default;
  friend auto operator<=>(const HoroPoint&, const HoroPoint&) = default;
};

bool in_w(const HoroPoint& w, int n);

inline int d_inf(const HoroPoint& x, const HoroPoint& y) {
  const int a = tree_dist(x.a1, y.a1);
  const int b = tree_dist(x.a2, y.a2);
  return a > b ? a : b;
}

inline int d_1(const HoroPoint& x, const HoroPoint& y) {
  return tree_dist(x.a1, y.a1) + tree_dist(x.a2, y.a2);
}

/// Point of the metric tree: a vertex, or a point at distance `offset` from
/// `base` along the edge towards `base.child(edge_child)`.
class TreePoint {
 public:
  TreePoint() = default;
  explicit TreePoint(TreeNode vertex) : base_(vertex) {}
  /// Offsets 0 and 1 normalize to vertices; offset must lie in [0, 1].
  TreePoint(TreeNode base, int edge_child, Rational offset);

  static TreePoint parse(std::string_view text);

  const TreeNode& base() const { return base_; }
  std::optional<int> edge_child() const { return edge_child_; }
  const Rational& offset() const { return offset_; }
  bool is_vertex() const { return !edge_child_.has_value(); }

  /// Distance from the root.
  Rational height() const { return Rational(base_.depth()) + offset_; }
  /// The shallowest vertex whose root path passes through this point.
  TreeNode label() const { return edge_child_ ? base_.child(*edge_child_) : base_; }

  /// `<bitstring>` for vertices, `<bitstring>+<p>/<q>><bit>` otherwise.
  std::string to_string() const;

  friend bool operator==(const TreePoint&, const TreePoint&) = default;

 private:
  TreeNode base_;
  std::optional<int> edge_child_;
  Rational offset_{0};
};

Rational tree_point_dist(const TreePoint& p, const TreePoint& q);

/// Point at distance s from `from` on the geodesic to `to`; s in [0, d].
TreePoint point_on_geodesic(const TreePoint& from, const TreePoint& to, const Rational& s);

/// Point of the l_inf-sum of two metric trees.
struct PiPoint {
  TreePoint p1;
  TreePoint p2;

  friend bool operator==(const PiPoint&, const PiPoint&) = default;
};

inline PiPoint to_pi_point(const HoroPoint& w) { return {TreePoint(w.a1), TreePoint(w.a2)}; }

Rational d_inf(const PiPoint& x, const PiPoint& y);
Rational d_1(const PiPoint& x, const PiPoint& y);

class BallSystemInfeasible : public std::runtime_error {
 public:
  BallSystemInfeasible(std::size_t i, std::size_t j, const std::string& detail);
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// A common point of the closed balls B(centers[i], radii[i]). Requires
/// d(c_i, c_j) <= r_i + r_j for every pair; the answer lies on the geodesic
/// between the pair with the least slack.
TreePoint ball_intersect(std::span<const TreePoint> centers, std::span<const Rational> radii);

/// Prefix-indicator coordinates: one unit entry per nonempty prefix, so the
/// l1 distance between images equals tree_dist.
using SparseVector = std::vector<std::pair<TreeNode, std::int64_t>>;

SparseVector tree_to_l1(const TreeNode& a);
std::int64_t l1_distance(const SparseVector& x, const SparseVector& y);

}  // namespace lamplighter
