#pragma once

// Metric-tree points on a fixed grid: heights are integers counted in
// 1/scale of an edge. All distances are then exact int64 arithmetic.

#include <cstddef>
#include <cstdint>
#include <span>

#include "lamplighter/tree.hpp"

namespace lamplighter {
class ThreadPool;
}

namespace lamplighter::detail {

/// `label` is the shallowest vertex whose root path contains the point,
/// i.e. label.depth() == ceil(height / scale).
struct GridPoint {
  TreeNode label;
  std::int64_t height = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

class GridTree {
 public:
  explicit GridTree(std::int64_t scale);

  std::int64_t scale() const { return scale_; }

  std::int64_t dist(const GridPoint& p, const GridPoint& q) const {
    const std::int64_t common = static_cast<std::int64_t>(lgc(p.label, q.label)) * scale_;
    std::int64_t meet = common < p.height ? common : p.height;
    if (q.height < meet) meet = q.height;
    return p.height + q.height - 2 * meet;
  }

  GridPoint vertex(const TreeNode& v) const { return {v, v.depth() * scale_}; }

  /// Point at `height` on the root path towards `towards`.
  GridPoint on_root_path(const TreeNode& towards, std::int64_t height) const;
  GridPoint on_geodesic(const GridPoint& from, const GridPoint& to, std::int64_t s) const;

  /// Throws std::invalid_argument when the offset is not a multiple of 1/scale.
  GridPoint from_tree_point(const TreePoint& p) const;
  TreePoint to_tree_point(const GridPoint& p) const;

 private:
  std::int64_t scale_;
};

struct GridBallResult {
  GridPoint point;
  std::size_t pair_i = 0;  ///< tightest pair used for placement
  std::size_t pair_j = 0;
  std::int64_t slack = 0;  ///< r_i + r_j - d(c_i, c_j) for that pair, >= 0
};

/// Common point of the balls B(centers[k], radii[k]) (heights and radii in
/// grid units). The tightest pair comes from a double sweep; the point is
/// placed on its geodesic, at the grid point at or just below the middle of
/// the admissible stretch. Throws BallSystemInfeasible when some pair of
/// balls is disjoint, std::logic_error if the result misses a ball.
GridBallResult grid_ball_intersect(const GridTree& tree, std::span<const GridPoint> centers,
                                   std::span<const std::int64_t> radii,
                                   ThreadPool* pool = nullptr);

}  // namespace lamplighter::detail
