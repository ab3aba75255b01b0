#pragma once

#include <vector>

#include "lamplighter/group.hpp"
#include "lamplighter/tree.hpp"

namespace lamplighter {

/// Throws InvalidModulus unless n is a positive multiple of 6.
void require_divisible_by_six(int n);

/// One of the three arcs of 2n/3 steps covering the n-cycle, traversed in
/// the positive direction from `start`.
struct CycleArc {
  int index = 1;
  int n = 6;
  int start = 1;
  int vertex_count = 5;

  bool contains(int k) const { return ((k - start) % n + n) % n < vertex_count; }
  /// Arc vertices in traversal order.
  std::vector<int> vertices() const;
};

/// P1 = [n/6, 5n/6], P2 = [n/2, n/6], P3 = [5n/6, n/2].
CycleArc cycle_arc(int i, int n);
bool arc_contains(int i, int k, int n);

/// Least i with both k and l on arc i.
int covering_index(int k, int l, int n);

inline bool in_piece(int i, const GroupElement& u) {
  return arc_contains(i, static_cast<int>(u.pos), static_cast<int>(u.n));
}

/// Lamps left of the lamplighter (positions 0..k-1, read upwards) become A1;
/// lamps from n-1 down to k become A2.
HoroPoint encode_phi1(const GroupElement& u);
GroupElement decode_phi1(const HoroPoint& w, int n);

/// phi_i = phi_1 o rotate^power; the power maps arc i onto arc 1.
int rotation_power(int i);
HoroPoint encode_phi(int i, const GroupElement& u);
GroupElement decode_phi(int i, const HoroPoint& w, int n);

/// Elements of the i-th piece (position on arc i), canonical order.
std::vector<GroupElement> piece_elements(int i, int n, const Budget& budget = {});
/// All of W_n, ordered by (|A1|, A1 bits, A2 bits).
std::vector<HoroPoint> enumerate_w(int n, const Budget& budget = {});

/// Members (A, 0...0) of W_n with |A| <= n/2.
std::vector<HoroPoint> tree_subset_U(int n);

/// Every vertex of the binary tree of the given depth, by depth then bits.
std::vector<TreeNode> tree_nodes(int max_depth);

/// The W_n point used for a tree vertex of depth <= n/2: A is prefixed by
/// n/6 zeros, the second coordinate is all zeros.
HoroPoint tree_subset_point(const TreeNode& node, int n);
GroupElement embed_tree(const TreeNode& node, int n);

}  // namespace lamplighter
