#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lamplighter/tree.hpp"

using namespace lamplighter;

namespace {

TreeNode node(const char* bits) { return TreeNode::parse(bits); }

// Oracle candidates: every vertex of depth <= depth and every edge midpoint.
std::vector<TreePoint> half_grid(int depth) {
  std::vector<TreePoint> out;
  for (int d = 0; d <= depth; ++d) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << d); ++b) {
      const TreeNode v = TreeNode::from_bits(b, d);
      out.emplace_back(v);
      if (d < depth) {
        out.emplace_back(v, 0, Rational(1, 2));
        out.emplace_back(v, 1, Rational(1, 2));
      }
    }
  }
  return out;
}

bool covers(const TreePoint& p, const std::vector<TreePoint>& centers,
            const std::vector<Rational>& radii) {
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (tree_point_dist(p, centers[i]) > radii[i]) return false;
  }
  return true;
}

}  // namespace

TEST(Tree, WorkedLgc) {
  EXPECT_EQ(lgc(node("10"), node("110")), 1);
  EXPECT_EQ(lgc(node("1011"), node("1011")), 4);
  EXPECT_EQ(lgc(node(""), node("0101")), 0);
}

TEST(Tree, WorkedTreeDist) {
  EXPECT_EQ(tree_dist(node("10"), node("110")), 3);
  EXPECT_EQ(tree_dist(node(""), node("01")), 2);
  EXPECT_EQ(tree_dist(node("0110"), node("0110")), 0);
}

TEST(Tree, WorkedHoroDistances) {
  const HoroPoint x{node("10"), node("0100")};
  const HoroPoint y{node("100"), node("010")};
  EXPECT_EQ(d_1(x, y), 2);
  EXPECT_EQ(d_1(x, y), 2 * (6 - (lgc(x.a1, y.a1) + lgc(x.a2, y.a2))));
  EXPECT_EQ(d_inf(x, y), 1);
  EXPECT_EQ(d_1(x, x), 0);
  EXPECT_TRUE(in_w(x, 6));
  EXPECT_FALSE(in_w({node(""), node("000000")}, 6));
}

TEST(Tree, NodeTextAndPrefix) {
  const TreeNode a = node("0110");
  EXPECT_EQ(a.to_string(), "0110");
  EXPECT_EQ(a.prefix(2), node("01"));
  EXPECT_EQ(a.child(1), node("01101"));
  EXPECT_THROW(node("012"), std::invalid_argument);
}

TEST(TreePoint, WorkedDistances) {
  const TreePoint root{TreeNode{}};
  const TreePoint mid0(TreeNode{}, 0, Rational(1, 2));
  const TreePoint mid1(TreeNode{}, 1, Rational(1, 2));
  EXPECT_EQ(tree_point_dist(mid0, root), Rational(1, 2));
  EXPECT_EQ(tree_point_dist(mid0, mid1), Rational(1));
  EXPECT_EQ(tree_point_dist(TreePoint(node("10")), TreePoint(node("110"))), Rational(3));
}

TEST(TreePoint, TextRoundTripAndNormalisation) {
  const TreePoint p(node("01"), 1, Rational(2, 3));
  EXPECT_EQ(p.to_string(), "01+2/3>1");
  EXPECT_EQ(TreePoint::parse(p.to_string()), p);
  EXPECT_EQ(TreePoint::parse("0110"), TreePoint(node("0110")));
  EXPECT_TRUE(TreePoint(node("01"), 1, Rational(0)).is_vertex());
  EXPECT_EQ(TreePoint(node("01"), 1, Rational(1)), TreePoint(node("011")));
  EXPECT_THROW(TreePoint::parse("01+2/3"), std::invalid_argument);
}

TEST(TreePoint, GeodesicPoints) {
  const TreePoint a(node("00"));
  const TreePoint b(node("11"));
  for (int k = 0; k <= 8; ++k) {
    const Rational s(k, 2);
    const TreePoint p = point_on_geodesic(a, b, s);
    EXPECT_EQ(tree_point_dist(a, p), s);
    EXPECT_EQ(tree_point_dist(p, b), Rational(4) - s);
  }
  EXPECT_EQ(point_on_geodesic(a, b, Rational(2)), TreePoint(TreeNode{}));
}

TEST(BallIntersect, WorkedExamples) {
  const std::vector<TreePoint> c1{TreePoint(TreeNode{})};
  const std::vector<Rational> r1{Rational(0)};
  EXPECT_EQ(ball_intersect(c1, r1), TreePoint(TreeNode{}));

  const std::vector<TreePoint> c2{TreePoint(node("")), TreePoint(node("00"))};
  const std::vector<Rational> r2{Rational(1), Rational(1)};
  EXPECT_EQ(ball_intersect(c2, r2), TreePoint(node("0")));

  const std::vector<TreePoint> c3{TreePoint(node("00")), TreePoint(node("11")),
                                  TreePoint(node("1"))};
  const std::vector<Rational> r3{Rational(2), Rational(2), Rational(1)};
  EXPECT_EQ(ball_intersect(c3, r3), TreePoint(TreeNode{}));
}

TEST(BallIntersect, DisjointPairIsReported) {
  const std::vector<TreePoint> c{TreePoint(node("0")), TreePoint(node("00")),
                                 TreePoint(node("111"))};
  const std::vector<Rational> r{Rational(5), Rational(1), Rational(1)};
  try {
    ball_intersect(c, r);
    FAIL() << "expected infeasible";
  } catch (const BallSystemInfeasible& e) {
    EXPECT_EQ(std::min(e.first(), e.second()), 1U);
    EXPECT_EQ(std::max(e.first(), e.second()), 2U);
  }
}

TEST(BallIntersect, AgreesWithHalfGridOracle) {
  const auto grid = half_grid(4);
  std::mt19937 rng(20240611);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    std::vector<TreePoint> centers;
    std::vector<Rational> radii;
    for (int k = 0; k < m; ++k) {
      centers.push_back(grid[rng() % grid.size()]);
      radii.emplace_back(static_cast<std::int64_t>(rng() % 9), 2);
    }
    const bool oracle =
        std::any_of(grid.begin(), grid.end(), [&](const TreePoint& p) { return covers(p, centers, radii); });
    try {
      const TreePoint p = ball_intersect(centers, radii);
      ASSERT_TRUE(oracle) << "trial " << trial;
      ASSERT_TRUE(covers(p, centers, radii)) << "trial " << trial;
      ++feasible;
    } catch (const BallSystemInfeasible&) {
      ASSERT_FALSE(oracle) << "trial " << trial;
      ++infeasible;
    }
  }
  EXPECT_GT(feasible, 100);
  EXPECT_GT(infeasible, 100);
}

TEST(TreeL1, WorkedExamples) {
  EXPECT_TRUE(tree_to_l1(TreeNode{}).empty());
  auto v = tree_to_l1(node("10"));
  std::sort(v.begin(), v.end());
  const SparseVector want{{node("1"), 1}, {node("10"), 1}};
  EXPECT_EQ(v, want);
  EXPECT_EQ(l1_distance(tree_to_l1(node("10")), tree_to_l1(node("110"))), 3);
}

TEST(TreeL1, IsometryOnAllPairsOfDepthFour) {
  std::vector<TreeNode> nodes;
  for (int d = 0; d <= 4; ++d) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << d); ++b) nodes.push_back(TreeNode::from_bits(b, d));
  }
  for (const auto& a : nodes) {
    for (const auto& b : nodes) EXPECT_EQ(l1_distance(tree_to_l1(a), tree_to_l1(b)), tree_dist(a, b));
  }
}

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
}
