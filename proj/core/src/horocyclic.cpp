#include "lamplighter/horocyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lamplighter {

void require_divisible_by_six(int n) {
  if (n <= 0 || n % 6 != 0) {
    throw InvalidModulus("the horocyclic encoding needs n divisible by 6, got " +
                         std::to_string(n));
  }
}

std::vector<int> CycleArc::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(vertex_count));
  for (int s = 0; s < vertex_count; ++s) out.push_back((start + s) % n);
  return out;
}

CycleArc cycle_arc(int i, int n) {
  require_divisible_by_six(n);
  if (i < 1 || i > 3) throw std::out_of_range("arc index must be 1, 2 or 3");
  static constexpr int kStartSixths[] = {1, 3, 5};
  return {i, n, kStartSixths[i - 1] * n / 6, 2 * n / 3 + 1};
}

bool arc_contains(int i, int k, int n) { return cycle_arc(i, n).contains(k); }

int covering_index(int k, int l, int n) {
  for (int i = 1; i <= 3; ++i) {
    const CycleArc arc = cycle_arc(i, n);
    if (arc.contains(k) && arc.contains(l)) return i;
  }
  throw std::logic_error("positions " + std::to_string(k) + ", " + std::to_string(l) +
                         " lie on no common arc");
}

HoroPoint encode_phi1(const GroupElement& u) {
  const int n = static_cast<int>(u.n);
  const int k = static_cast<int>(u.pos);
  if (!arc_contains(1, k, n)) {
    throw std::out_of_range("encode_phi1: position " + std::to_string(k) + " is not on P1");
  }
  std::uint64_t tail = 0;
  for (int i = 1; i <= n - k; ++i) {
    if ((u.lamps >> (n - i)) & 1U) tail |= std::uint64_t{1} << (i - 1);
  }
  return {TreeNode::from_bits(u.lamps, k), TreeNode::from_bits(tail, n - k)};
}

GroupElement decode_phi1(const HoroPoint& w, int n) {
  require_divisible_by_six(n);
  if (!in_w(w, n)) {
    throw std::out_of_range("decode_phi1: (" + w.a1.to_string() + ", " + w.a2.to_string() +
                            ") is not in W_n");
  }
  const int k = w.a1.depth();
  std::uint64_t lamps = w.a1.bits();
  for (int i = 1; i <= n - k; ++i) {
    if (w.a2.bit(i - 1) != 0) lamps |= std::uint64_t{1} << (n - i);
  }
  return make_element(lamps, k, n);
}

int rotation_power(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("piece index must be 1, 2 or 3");
  // rotate^(i-1) maps arc 1 onto arc i; invert it modulo 3.
  return (3 - (i - 1)) % 3;
}

HoroPoint encode_phi(int i, const GroupElement& u) {
  if (!in_piece(i, u)) {
    throw std::out_of_range("encode_phi: position " + std::to_string(u.pos) + " is not on P" +
                            std::to_string(i));
  }
  return encode_phi1(rotate(u, rotation_power(i)));
}

GroupElement decode_phi(int i, const HoroPoint& w, int n) {
  return rotate(decode_phi1(w, n), -rotation_power(i));
}

std::vector<GroupElement> piece_elements(int i, int n, const Budget& budget) {
  const CycleArc arc = cycle_arc(i, n);
  budget.check(n, "piece_elements");
  std::vector<GroupElement> out;
  const std::uint64_t masks = std::uint64_t{1} << n;
  out.reserve(static_cast<std::size_t>(arc.vertex_count) * masks);
  for (int k = 0; k < n; ++k) {
    if (!arc.contains(k)) continue;
    for (std::uint64_t m = 0; m < masks; ++m) out.push_back(make_element(m, k, n));
  }
  return out;
}

std::vector<HoroPoint> enumerate_w(int n, const Budget& budget) {
  require_divisible_by_six(n);
  budget.check(n, "enumerate_w");
  std::vector<HoroPoint> out;
  for (int d1 = n / 6; d1 <= 5 * n / 6; ++d1) {
    const int d2 = n - d1;
    for (std::uint64_t b1 = 0; b1 < (std::uint64_t{1} << d1); ++b1) {
      for (std::uint64_t b2 = 0; b2 < (std::uint64_t{1} << d2); ++b2) {
        out.push_back({TreeNode::from_bits(b1, d1), TreeNode::from_bits(b2, d2)});
      }
    }
  }
  return out;
}

std::vector<TreeNode> tree_nodes(int max_depth) {
  if (max_depth < 0 || max_depth > 24) throw std::out_of_range("tree too deep to enumerate");
  std::vector<TreeNode> out;
  for (int d = 0; d <= max_depth; ++d) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << d); ++b) {
      out.push_back(TreeNode::from_bits(b, d));
    }
  }
  return out;
}

std::vector<HoroPoint> tree_subset_U(int n) {
  require_divisible_by_six(n);
  std::vector<HoroPoint> out;
  for (const TreeNode& a : tree_nodes(n / 2)) {
    if (a.depth() < n / 6) continue;
    out.push_back({a, TreeNode::from_bits(0, n - a.depth())});
  }
  return out;
}

HoroPoint tree_subset_point(const TreeNode& node, int n) {
  require_divisible_by_six(n);
  if (node.depth() > n / 2) {
    throw std::out_of_range("tree node of depth " + std::to_string(node.depth()) +
                            " exceeds n/2 = " + std::to_string(n / 2));
  }
  const int pad = n / 6;
  const TreeNode padded = TreeNode::from_bits(node.bits() << pad, node.depth() + pad);
  return {padded, TreeNode::from_bits(0, n - padded.depth())};
}

GroupElement embed_tree(const TreeNode& node, int n) {
  return decode_phi1(tree_subset_point(node, n), n);
}

}  // namespace lamplighter
