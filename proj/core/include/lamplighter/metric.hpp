#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lamplighter/group.hpp"

namespace lamplighter {

/// Word distances indexed by element_index().
using DistanceMap = std::vector<std::uint16_t>;

inline constexpr std::uint16_t kUnreached = 0xffff;

/// Exact word distances rho(source, .) by breadth-first search over the
/// Cayley graph with generators {t, ta} and their inverses.
DistanceMap bfs_distances(const GroupElement& source, const Budget& budget = {});

/// Multi-source BFS: distance from every element to the nearest member of
/// the set selected by `in_set`.
DistanceMap bfs_set_distances(int n, const std::function<bool(const GroupElement&)>& in_set,
                              const Budget& budget = {});

/// Exact word metric on one group. A single BFS from the identity is
/// stored; left invariance gives rho(u, v) = |u^-1 v|.
class WordMetric {
 public:
  explicit WordMetric(int n, const Budget& budget = {});

  int n() const { return n_; }

  int norm(const GroupElement& g) const { return table_[element_index(g)]; }

  int distance(const GroupElement& u, const GroupElement& v) const {
    return table_[element_index(wreath_mul(inverse(u), v))];
  }

  /// Distance from a fixed element to many others; the inverse is hoisted.
  class Row {
   public:
    Row(const WordMetric& metric, const GroupElement& from)
        : table_(metric.table_.data()), inv_(inverse(from)) {}

    int operator()(const GroupElement& v) const {
      const int n = static_cast<int>(inv_.n);
      const std::uint64_t lamps = inv_.lamps ^ shift_lamps(v.lamps, static_cast<int>(inv_.pos), n);
      const std::uint32_t pos = (inv_.pos + v.pos) % inv_.n;
      return table_[(static_cast<std::uint64_t>(pos) << n) | lamps];
    }

   private:
    const std::uint16_t* table_;
    GroupElement inv_;
  };

  Row row(const GroupElement& from) const { return Row(*this, from); }

  const DistanceMap& from_identity() const { return table_; }
  int diameter() const;

 private:
  int n_;
  DistanceMap table_;
};

/// Two-sided estimate of rho built from the two arcs between the lamplighter
/// positions and the largest lamp-free gap on each arc.
struct RhoBounds {
  int lower = 0;
  int upper = 0;
  int p1 = 0;  ///< length of the positive arc from k to l
  int p2 = 0;  ///< length of the negative arc, p1 + p2 = n
  int g1 = 0;
  int g2 = 0;
};

RhoBounds rho_bounds(const GroupElement& u, const GroupElement& v);

/// Interval data for the pair (x, k), (y, l) with marks M = {k, l} u (x xor y).
struct IntervalReport {
  int e_vertex_count = 0;  ///< vertices of E, the two mark-free runs at 0 and n-1
  int tau = 0;             ///< vertices of the smallest arc J containing M
  bool j_contains_zero = false;
  int g_free = 0;          ///< vertices of the largest arc disjoint from M
};

IntervalReport interval_report(const GroupElement& u, const GroupElement& v);

}  // namespace lamplighter
