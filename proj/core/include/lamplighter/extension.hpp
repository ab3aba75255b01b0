#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lamplighter/detail/grid_tree.hpp"
#include "lamplighter/group.hpp"
#include "lamplighter/metric.hpp"
#include "lamplighter/rational.hpp"
#include "lamplighter/tree.hpp"

namespace lamplighter {

class ThreadPool;

struct ExtendOptions {
  /// Constrain each new point only by assigned points within this word
  /// distance. The finished map is then checked against every pair.
  std::optional<int> prune_radius;
  ThreadPool* pool = nullptr;
};

/// A one-point extension step found two disjoint balls: the requested
/// constant is below the Lipschitz constant of the data.
class InfeasibleExtension : public std::runtime_error {
 public:
  InfeasibleExtension(const GroupElement& point, int coordinate, const GroupElement& a,
                      const GroupElement& b);

  GroupElement point;
  int coordinate;
  GroupElement witness_a;
  GroupElement witness_b;
};

/// Map from the whole group into the l_inf-sum of two metric trees.
class ExtendedMap {
 public:
  ExtendedMap(int n, int piece, Rational lip, std::int64_t scale);

  int n() const { return n_; }
  int piece() const { return piece_; }
  const Rational& lip_constant() const { return lip_; }
  /// Images sit on the grid of 1/scale edge units.
  std::int64_t scale() const { return grid_.scale(); }
  const std::vector<GroupElement>& extension_order() const { return order_; }
  std::optional<int> prune_radius() const { return prune_radius_; }

  PiPoint operator()(const GroupElement& g) const;
  /// d_inf between images, in grid units.
  std::int64_t distance_ticks(const GroupElement& u, const GroupElement& v) const {
    const auto& a = grid_images_[element_index(u)];
    const auto& b = grid_images_[element_index(v)];
    const std::int64_t x = grid_.dist(a[0], b[0]);
    const std::int64_t y = grid_.dist(a[1], b[1]);
    return x > y ? x : y;
  }
  Rational distance(const GroupElement& u, const GroupElement& v) const {
    return Rational(distance_ticks(u, v), scale());
  }

 private:
  friend ExtendedMap extend(int, const Rational&, const WordMetric&, const ExtendOptions&);

  int n_;
  int piece_;
  Rational lip_;
  detail::GridTree grid_;
  std::vector<std::array<detail::GridPoint, 2>> grid_images_;
  std::vector<GroupElement> order_;
  std::optional<int> prune_radius_;
};

/// Elements off piece i, nearest to the piece first, ties in canonical order.
std::vector<GroupElement> extension_order(int i, int n, const Budget& budget = {});

/// One-point extensions in the given order. Every new point gets, in each
/// tree coordinate, a common point of the balls centred at the images of
/// the already placed points with radii lip * rho. Returns the images of
/// `order`.
std::vector<PiPoint> extend_from(std::span<const std::pair<GroupElement, PiPoint>> seeds,
                                 std::span<const GroupElement> order, const Rational& lip,
                                 const WordMetric& metric, const ExtendOptions& options = {});

/// Extension of phi_i from its piece to the whole group. `lip` must be at
/// least the Lipschitz constant of phi_i with respect to (rho, d_inf).
ExtendedMap extend(int i, const Rational& lip, const WordMetric& metric,
                   const ExtendOptions& options = {});

/// First pair (in canonical order) with d_inf(f u, f v) > lip * rho(u, v).
std::optional<std::pair<GroupElement, GroupElement>> find_lipschitz_violation(
    const ExtendedMap& map, const WordMetric& metric, ThreadPool* pool = nullptr);

struct PhiImage {
  std::array<PiPoint, 3> parts;
};

Rational phi_distance(const PhiImage& x, const PhiImage& y);

/// The product map into the l_inf-sum of six metric trees.
class PhiMap {
 public:
  int n() const { return parts_[0].n(); }
  const Rational& lip_constant() const { return parts_[0].lip_constant(); }
  const ExtendedMap& part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

  PhiImage operator()(const GroupElement& g) const;
  std::int64_t distance_ticks(const GroupElement& u, const GroupElement& v) const;
  Rational distance(const GroupElement& u, const GroupElement& v) const {
    return Rational(distance_ticks(u, v), parts_[0].scale());
  }

 private:
  friend PhiMap assemble_phi(std::vector<ExtendedMap> maps);
  explicit PhiMap(std::array<ExtendedMap, 3> parts) : parts_(std::move(parts)) {}

  std::array<ExtendedMap, 3> parts_;
};

/// Needs one extension per piece 1, 2, 3, all with the same n, constant and
/// grid; throws std::invalid_argument otherwise.
PhiMap assemble_phi(std::vector<ExtendedMap> maps);

PhiMap build_phi(const Rational& lip, const WordMetric& metric, const ExtendOptions& options = {});

}  // namespace lamplighter
