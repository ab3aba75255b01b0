#include "lamplighter/metric.hpp"

#include <algorithm>
#include <limits>

namespace lamplighter {
namespace {

DistanceMap run_bfs(int n, std::vector<std::uint32_t> frontier, DistanceMap dist) {
  std::size_t head = 0;
  frontier.reserve(dist.size());
  while (head < frontier.size()) {
    const std::uint32_t cur = frontier[head++];
    const GroupElement g = element_at(cur, n);
    const std::uint16_t next = static_cast<std::uint16_t>(dist[cur] + 1);
    for (Generator s : kAllGenerators) {
      const auto idx = static_cast<std::uint32_t>(element_index(apply(g, s)));
      if (dist[idx] == kUnreached) {
        dist[idx] = next;
        frontier.push_back(idx);
      }
    }
  }
  return dist;
}

// Largest distance between consecutive marks on an arc of `length` steps;
// `marked(s)` says whether step s of the arc is marked. Both ends are marks.
template <class Marked>
int largest_gap(int length, Marked marked) {
  int best = 0;
  int last = 0;
  for (int s = 1; s <= length; ++s) {
    if (s == length || marked(s)) {
      best = std::max(best, s - last);
      last = s;
    }
  }
  return best;
}

}  // namespace

DistanceMap bfs_distances(const GroupElement& source, const Budget& budget) {
  const int n = static_cast<int>(source.n);
  validate_modulus(n);
  budget.check(n, "bfs_distances");
  DistanceMap dist(group_order(n), kUnreached);
  const auto src = static_cast<std::uint32_t>(element_index(source));
  dist[src] = 0;
  return run_bfs(n, {src}, std::move(dist));
}

DistanceMap bfs_set_distances(int n, const std::function<bool(const GroupElement&)>& in_set,
                              const Budget& budget) {
  validate_modulus(n);
  budget.check(n, "bfs_set_distances");
  DistanceMap dist(group_order(n), kUnreached);
  std::vector<std::uint32_t> frontier;
  for (std::uint64_t i = 0; i < dist.size(); ++i) {
    if (in_set(element_at(i, n))) {
      dist[i] = 0;
      frontier.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return run_bfs(n, std::move(frontier), std::move(dist));
}

WordMetric::WordMetric(int n, const Budget& budget)
    : n_(n), table_(bfs_distances(identity(n), budget)) {}

int WordMetric::diameter() const { return *std::max_element(table_.begin(), table_.end()); }

RhoBounds rho_bounds(const GroupElement& u, const GroupElement& v) {
  if (u.n != v.n) throw ModulusMismatch(static_cast<int>(u.n), static_cast<int>(v.n));
  const int n = static_cast<int>(u.n);
  const int k = static_cast<int>(u.pos);
  const int l = static_cast<int>(v.pos);
  const std::uint64_t diff = u.lamps ^ v.lamps;
  auto lit = [&](int j) { return ((diff >> (((j % n) + n) % n)) & 1U) != 0; };

  RhoBounds b;
  b.p1 = ((l - k) % n + n) % n;
  b.p2 = n - b.p1;
  b.g1 = largest_gap(b.p1, [&](int s) { return lit(k + s); });
  b.g2 = largest_gap(b.p2, [&](int s) { return lit(k - s); });
  b.lower = std::max(0, std::min(b.p1 + 2 * (b.p2 - b.g2), b.p2 + 2 * (b.p1 - b.g1)));
  b.upper = b.lower + 2;
  return b;
}

IntervalReport interval_report(const GroupElement& u, const GroupElement& v) {
  if (u.n != v.n) throw ModulusMismatch(static_cast<int>(u.n), static_cast<int>(v.n));
  const int n = static_cast<int>(u.n);
  const std::uint64_t diff = u.lamps ^ v.lamps;
  const std::uint64_t marks = diff | (std::uint64_t{1} << u.pos) | (std::uint64_t{1} << v.pos);
  auto marked = [&](int j) { return ((marks >> j) & 1U) != 0; };

  IntervalReport r;
  int j = 0;
  while (j < n && !marked(j)) ++j;
  r.e_vertex_count = j;
  j = n - 1;
  while (j >= 0 && !marked(j)) {
    ++r.e_vertex_count;
    --j;
  }
  if (j >= 0 && ((diff >> j) & 1U) == 0) ++r.e_vertex_count;

  std::vector<int> ms;
  for (int i = 0; i < n; ++i) {
    if (marked(i)) ms.push_back(i);
  }
  if (ms.size() == 1) {
    r.tau = 1;
    r.g_free = n - 1;
    r.j_contains_zero = ms.front() == 0;
    return r;
  }
  // Cyclic gaps between consecutive marks; J is the complement of the
  // interior of a largest gap. Among tied gaps prefer one that swallows 0.
  int best = 0;
  bool zero_outside = false;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const int a = ms[i];
    const int b = i + 1 < ms.size() ? ms[i + 1] : ms.front() + n;
    const int gap = b - a;
    const bool swallows_zero = b > n;  // interior covers position n == 0
    if (gap > best) {
      best = gap;
      zero_outside = swallows_zero;
    } else if (gap == best) {
      zero_outside = zero_outside || swallows_zero;
    }
  }
  r.g_free = best - 1;
  r.tau = n - r.g_free;
  r.j_contains_zero = !zero_outside;
  return r;
}

}  // namespace lamplighter
