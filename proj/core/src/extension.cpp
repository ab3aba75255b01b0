#include "lamplighter/extension.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "lamplighter/horocyclic.hpp"
#include "lamplighter/thread_pool.hpp"

namespace lamplighter {
namespace {

using detail::GridPoint;
using detail::GridTree;

struct PlacedSet {
  std::vector<GroupElement> elements;
  std::array<std::vector<GridPoint>, 2> centers;

  void push(const GroupElement& g, const GridPoint& a, const GridPoint& b) {
    elements.push_back(g);
    centers[0].push_back(a);
    centers[1].push_back(b);
  }
};

std::int64_t ticks_per_step(const Rational& lip, std::int64_t scale) {
  const Rational t = lip * scale;
  if (t.denominator() != 1) throw std::logic_error("grid scale does not absorb the constant");
  return t.numerator();
}

// Places every element of `order` after the points already in `placed`.
void extend_on_grid(const GridTree& grid, const Rational& lip, PlacedSet& placed,
                    std::span<const GroupElement> order, const WordMetric& metric,
                    const ExtendOptions& options) {
  const std::int64_t step = ticks_per_step(lip, grid.scale());
  std::vector<std::int64_t> radii;
  PlacedSet near;
  std::vector<std::size_t> near_index;

  for (const GroupElement& b : order) {
    if (placed.elements.empty()) {
      throw std::invalid_argument("extension needs at least one seed point");
    }
    const auto row = metric.row(b);
    const PlacedSet* system = &placed;
    radii.clear();
    if (options.prune_radius) {
      near = {};
      near_index.clear();
      for (std::size_t k = 0; k < placed.elements.size(); ++k) {
        const int d = row(placed.elements[k]);
        if (d <= *options.prune_radius) {
          near.push(placed.elements[k], placed.centers[0][k], placed.centers[1][k]);
          near_index.push_back(k);
          radii.push_back(step * d);
        }
      }
      if (near.elements.empty()) {
        throw std::runtime_error("prune radius " + std::to_string(*options.prune_radius) +
                                 " leaves no constraint for " + to_string(b));
      }
      system = &near;
    } else {
      radii.reserve(placed.elements.size());
      for (const GroupElement& a : placed.elements) radii.push_back(step * row(a));
    }

    std::array<GridPoint, 2> image;
    for (int c = 0; c < 2; ++c) {
      try {
        image[static_cast<std::size_t>(c)] =
            detail::grid_ball_intersect(grid, system->centers[static_cast<std::size_t>(c)],
                                        radii, options.pool)
                .point;
      } catch (const BallSystemInfeasible& e) {
        throw InfeasibleExtension(b, c, system->elements[e.first()],
                                  system->elements[e.second()]);
      }
    }
    placed.push(b, image[0], image[1]);
  }
}

}  // namespace

InfeasibleExtension::InfeasibleExtension(const GroupElement& p, int c, const GroupElement& a,
                                         const GroupElement& b)
    : std::runtime_error("no common point for " + to_string(p) + " in tree coordinate " +
                         std::to_string(c) + ": balls around the images of " + to_string(a) +
                         " and " + to_string(b) + " are disjoint"),
      point(p),
      coordinate(c),
      witness_a(a),
      witness_b(b) {}

ExtendedMap::ExtendedMap(int n, int piece, Rational lip, std::int64_t scale)
    : n_(n), piece_(piece), lip_(lip), grid_(scale) {}

PiPoint ExtendedMap::operator()(const GroupElement& g) const {
  if (static_cast<int>(g.n) != n_) throw ModulusMismatch(static_cast<int>(g.n), n_);
  const auto& img = grid_images_.at(element_index(g));
  return {grid_.to_tree_point(img[0]), grid_.to_tree_point(img[1])};
}

std::vector<GroupElement> extension_order(int i, int n, const Budget& budget) {
  const CycleArc arc = cycle_arc(i, n);
  const DistanceMap to_piece = bfs_set_distances(
      n, [&](const GroupElement& g) { return arc.contains(static_cast<int>(g.pos)); }, budget);
  std::vector<std::uint64_t> idx;
  for (std::uint64_t k = 0; k < to_piece.size(); ++k) {
    if (to_piece[k] > 0) idx.push_back(k);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::uint64_t a, std::uint64_t b) {
    return to_piece[a] < to_piece[b];
  });
  std::vector<GroupElement> out;
  out.reserve(idx.size());
  for (std::uint64_t k : idx) out.push_back(element_at(k, n));
  return out;
}

std::vector<PiPoint> extend_from(std::span<const std::pair<GroupElement, PiPoint>> seeds,
                                 std::span<const GroupElement> order, const Rational& lip,
                                 const WordMetric& metric, const ExtendOptions& options) {
  if (lip <= 0) throw std::invalid_argument("Lipschitz constant must be positive");
  std::int64_t scale = lip.denominator();
  for (const auto& [g, p] : seeds) {
    if (static_cast<int>(g.n) != metric.n()) throw ModulusMismatch(static_cast<int>(g.n), metric.n());
    scale = std::lcm(scale, p.p1.offset().denominator());
    scale = std::lcm(scale, p.p2.offset().denominator());
  }
  const GridTree grid(scale);
  PlacedSet placed;
  for (const auto& [g, p] : seeds) {
    placed.push(g, grid.from_tree_point(p.p1), grid.from_tree_point(p.p2));
  }
  const std::size_t first_new = placed.elements.size();
  extend_on_grid(grid, lip, placed, order, metric, options);

  std::vector<PiPoint> out;
  out.reserve(order.size());
  for (std::size_t k = first_new; k < placed.elements.size(); ++k) {
    out.push_back({grid.to_tree_point(placed.centers[0][k]),
                   grid.to_tree_point(placed.centers[1][k])});
  }
  return out;
}

ExtendedMap extend(int i, const Rational& lip, const WordMetric& metric,
                   const ExtendOptions& options) {
  const int n = metric.n();
  require_divisible_by_six(n);
  if (lip <= 0) throw std::invalid_argument("Lipschitz constant must be positive");

  ExtendedMap map(n, i, lip, lip.denominator());
  const GridTree& grid = map.grid_;
  PlacedSet placed;
  for (const GroupElement& g : piece_elements(i, n)) {
    const HoroPoint w = encode_phi(i, g);
    placed.push(g, grid.vertex(w.a1), grid.vertex(w.a2));
  }
  map.order_ = extension_order(i, n);
  map.prune_radius_ = options.prune_radius;
  extend_on_grid(grid, lip, placed, map.order_, metric, options);

  map.grid_images_.resize(group_order(n));
  for (std::size_t k = 0; k < placed.elements.size(); ++k) {
    map.grid_images_[element_index(placed.elements[k])] = {placed.centers[0][k],
                                                          placed.centers[1][k]};
  }

  if (options.prune_radius) {
    if (auto bad = find_lipschitz_violation(map, metric, options.pool)) {
      throw std::runtime_error("pruned extension breaks the Lipschitz bound at " +
                               to_string(bad->first) + ", " + to_string(bad->second) +
                               "; rerun with a larger prune radius");
    }
  }
  return map;
}

std::optional<std::pair<GroupElement, GroupElement>> find_lipschitz_violation(
    const ExtendedMap& map, const WordMetric& metric, ThreadPool* pool) {
  const int n = map.n();
  const std::uint64_t order = group_order(n);
  const std::int64_t step = ticks_per_step(map.lip_constant(), map.scale());
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  const std::size_t rows_per_shard = std::max<std::size_t>(1, (1U << 22) / order);

  struct Hit {
    std::uint64_t u = kNone;
    std::uint64_t v = kNone;
  };
  const Hit hit = reduce_shards(
      pool, order, rows_per_shard, Hit{},
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t a = begin; a < end; ++a) {
          const GroupElement u = element_at(a, n);
          const auto row = metric.row(u);
          for (std::uint64_t b = a + 1; b < order; ++b) {
            const GroupElement v = element_at(b, n);
            if (map.distance_ticks(u, v) > step * row(v)) return Hit{a, b};
          }
        }
        return Hit{};
      },
      [](Hit acc, Hit next) { return acc.u != kNone ? acc : next; });
  if (hit.u == kNone) return std::nullopt;
  return std::make_pair(element_at(hit.u, n), element_at(hit.v, n));
}

Rational phi_distance(const PhiImage& x, const PhiImage& y) {
  Rational best(0);
  for (std::size_t i = 0; i < 3; ++i) best = std::max(best, d_inf(x.parts[i], y.parts[i]));
  return best;
}

PhiImage PhiMap::operator()(const GroupElement& g) const {
  return {{parts_[0](g), parts_[1](g), parts_[2](g)}};
}

std::int64_t PhiMap::distance_ticks(const GroupElement& u, const GroupElement& v) const {
  std::int64_t best = 0;
  for (const auto& part : parts_) best = std::max(best, part.distance_ticks(u, v));
  return best;
}

PhiMap assemble_phi(std::vector<ExtendedMap> maps) {
  std::array<std::optional<ExtendedMap>, 3> slots;
  for (auto& m : maps) {
    if (m.piece() < 1 || m.piece() > 3) throw std::invalid_argument("extension piece out of range");
    auto& slot = slots[static_cast<std::size_t>(m.piece() - 1)];
    if (slot) throw std::invalid_argument("duplicate extension for piece " + std::to_string(m.piece()));
    slot.emplace(std::move(m));
  }
  for (int i = 0; i < 3; ++i) {
    if (!slots[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("missing extension for piece " + std::to_string(i + 1));
    }
  }
  const ExtendedMap& first = *slots[0];
  for (const auto& s : slots) {
    if (s->n() != first.n() || s->lip_constant() != first.lip_constant() ||
        s->scale() != first.scale()) {
      throw std::invalid_argument("extensions disagree on n, constant or grid");
    }
  }
  return PhiMap({std::move(*slots[0]), std::move(*slots[1]), std::move(*slots[2])});
}

PhiMap build_phi(const Rational& lip, const WordMetric& metric, const ExtendOptions& options) {
  std::vector<ExtendedMap> maps;
  for (int i = 1; i <= 3; ++i) maps.push_back(extend(i, lip, metric, options));
  return assemble_phi(std::move(maps));
}

}  // namespace lamplighter
