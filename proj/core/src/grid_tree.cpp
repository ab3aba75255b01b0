#include "lamplighter/detail/grid_tree.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "lamplighter/thread_pool.hpp"

namespace lamplighter::detail {
namespace {

constexpr std::size_t kShard = 8192;

struct Best {
  std::int64_t value = std::numeric_limits<std::int64_t>::min();
  std::size_t index = std::numeric_limits<std::size_t>::max();
};

// Ties go to the lower index, so the fold is independent of sharding.
Best better(Best a, Best b) {
  if (b.value > a.value || (b.value == a.value && b.index < a.index)) return b;
  return a;
}

// argmax over k != from of d(c_from, c_k) - r_k.
Best sweep(const GridTree& tree, std::span<const GridPoint> centers,
           std::span<const std::int64_t> radii, std::size_t from, ThreadPool* pool) {
  const GridPoint origin = centers[from];
  return reduce_shards(
      pool, centers.size(), kShard, Best{},
      [&](std::size_t begin, std::size_t end) {
        Best b;
        for (std::size_t k = begin; k < end; ++k) {
          if (k == from) continue;
          const std::int64_t v = tree.dist(origin, centers[k]) - radii[k];
          if (v > b.value) b = {v, k};
        }
        return b;
      },
      better);
}

}  // namespace

GridTree::GridTree(std::int64_t scale) : scale_(scale) {
  if (scale <= 0) throw std::invalid_argument("grid scale must be positive");
}

GridPoint GridTree::on_root_path(const TreeNode& towards, std::int64_t height) const {
  const std::int64_t depth = (height + scale_ - 1) / scale_;
  return {towards.prefix(static_cast<int>(depth)), height};
}

GridPoint GridTree::on_geodesic(const GridPoint& from, const GridPoint& to,
                                std::int64_t s) const {
  const std::int64_t common = static_cast<std::int64_t>(lgc(from.label, to.label)) * scale_;
  std::int64_t meet = common < from.height ? common : from.height;
  if (to.height < meet) meet = to.height;
  const std::int64_t up = from.height - meet;
  if (s <= up) return on_root_path(from.label, from.height - s);
  return on_root_path(to.label, meet + (s - up));
}

GridPoint GridTree::from_tree_point(const TreePoint& p) const {
  const Rational scaled = p.offset() * scale_;
  if (scaled.denominator() != 1) {
    throw std::invalid_argument("tree point offset " + to_string(p.offset()) +
                                " is not on the grid of scale " + std::to_string(scale_));
  }
  return {p.label(), p.base().depth() * scale_ + scaled.numerator()};
}

TreePoint GridTree::to_tree_point(const GridPoint& p) const {
  const std::int64_t whole = p.height / scale_;
  const std::int64_t rest = p.height % scale_;
  if (rest == 0) return TreePoint(p.label);
  return TreePoint(p.label.prefix(static_cast<int>(whole)), p.label.bit(static_cast<int>(whole)),
                   Rational(rest, scale_));
}

GridBallResult grid_ball_intersect(const GridTree& tree, std::span<const GridPoint> centers,
                                   std::span<const std::int64_t> radii, ThreadPool* pool) {
  if (centers.empty() || centers.size() != radii.size()) {
    throw std::invalid_argument("ball system needs matching, nonempty centers and radii");
  }
  for (std::int64_t r : radii) {
    if (r < 0) throw std::invalid_argument("ball radius must be nonnegative");
  }
  GridBallResult result;
  if (centers.size() == 1) {
    result.point = centers[0];
    result.slack = 2 * radii[0];
    return result;
  }

  const std::size_t i = sweep(tree, centers, radii, 0, pool).index;
  const std::size_t j = sweep(tree, centers, radii, i, pool).index;
  const std::int64_t d = tree.dist(centers[i], centers[j]);
  const std::int64_t slack = radii[i] + radii[j] - d;
  if (slack < 0) {
    throw BallSystemInfeasible(i, j,
                               "balls " + std::to_string(i) + " and " + std::to_string(j) +
                                   " are disjoint: distance " + std::to_string(d) +
                                   " exceeds radii sum " + std::to_string(radii[i] + radii[j]));
  }

  // Any s in [max(0, d - r_j), min(r_i, d)] works; take the middle.
  const std::int64_t lo = d - radii[j] > 0 ? d - radii[j] : 0;
  const std::int64_t hi = radii[i] < d ? radii[i] : d;
  const std::int64_t s = lo + (hi - lo) / 2;
  const GridPoint p = tree.on_geodesic(centers[i], centers[j], s);

  const std::size_t miss = reduce_shards(
      pool, centers.size(), kShard, std::numeric_limits<std::size_t>::max(),
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
          if (tree.dist(p, centers[k]) > radii[k]) return k;
        }
        return std::numeric_limits<std::size_t>::max();
      },
      [](std::size_t a, std::size_t b) { return a < b ? a : b; });
  if (miss != std::numeric_limits<std::size_t>::max()) {
    throw std::logic_error("ball_intersect produced a point outside ball " + std::to_string(miss));
  }

  result.point = p;
  result.pair_i = i;
  result.pair_j = j;
  result.slack = slack;
  return result;
}

}  // namespace lamplighter::detail
