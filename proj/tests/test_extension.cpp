#include <gtest/gtest.h>

#include "lamplighter/extension.hpp"
#include "lamplighter/horocyclic.hpp"
#include "lamplighter/thread_pool.hpp"
#include "lamplighter/verify.hpp"

using namespace lamplighter;

namespace {

const WordMetric& metric6() {
  static const WordMetric m(6);
  return m;
}

const Rational& lip6() {
  static const Rational l = *audit_phi(1, metric6(), AuditMode::exhaustive()).lip;
  return l;
}

PiPoint vertex_pair(const char* a, const char* b) {
  return {TreePoint(TreeNode::parse(a)), TreePoint(TreeNode::parse(b))};
}

}  // namespace

TEST(ExtensionOrder, WorkedExample) {
  const auto order = extension_order(1, 6);
  ASSERT_EQ(order.size(), 64U);
  for (const auto& g : order) EXPECT_EQ(g.pos, 0U);
  const auto order12 = extension_order(2, 12);
  EXPECT_EQ(order12.size(), group_order(12) - (9U << 12));
  const DistanceMap d = bfs_set_distances(12, [](const GroupElement& g) { return in_piece(2, g); });
  for (std::size_t k = 1; k < order12.size(); ++k) {
    EXPECT_LE(d[element_index(order12[k - 1])], d[element_index(order12[k])]);
  }
}

TEST(ExtendFrom, ZeroNewPointsAndSingleStep) {
  const GroupElement a = identity(6);
  const GroupElement b = apply(a, Generator::t);
  const std::vector<std::pair<GroupElement, PiPoint>> seeds{{a, vertex_pair("01", "0000")}};
  EXPECT_TRUE(extend_from(seeds, {}, Rational(3), metric6()).empty());

  const std::vector<GroupElement> order{b};
  const auto out = extend_from(seeds, order, Rational(3, 2), metric6());
  ASSERT_EQ(out.size(), 1U);
  EXPECT_LE(d_inf(out[0], seeds[0].second), Rational(3, 2));
}

TEST(ExtendFrom, DisjointBallsRaiseInfeasible) {
  const GroupElement a = identity(6);
  const GroupElement c = apply(apply(a, Generator::t), Generator::t);
  const GroupElement b = apply(a, Generator::t);
  const std::vector<std::pair<GroupElement, PiPoint>> seeds{{a, vertex_pair("0000000000", "")},
                                                            {c, vertex_pair("1111111111", "")}};
  const std::vector<GroupElement> order{b};
  try {
    extend_from(seeds, order, Rational(1), metric6());
    FAIL() << "expected infeasible extension";
  } catch (const InfeasibleExtension& e) {
    EXPECT_EQ(e.point, b);
    EXPECT_EQ(e.coordinate, 0);
  }
}

TEST(Extend, LipschitzRestrictionAndInjectivityOfTheProduct) {
  ThreadPool pool(2);
  const PhiMap phi = build_phi(lip6(), metric6(), ExtendOptions{std::nullopt, &pool});
  for (int i = 1; i <= 3; ++i) {
    const ExtendedMap& part = phi.part(i);
    EXPECT_EQ(part.piece(), i);
    EXPECT_FALSE(find_lipschitz_violation(part, metric6(), &pool).has_value());
    for (const auto& u : piece_elements(i, 6)) EXPECT_EQ(part(u), to_pi_point(encode_phi(i, u)));
  }
  const auto group = enumerate_group(6);
  for (const auto& u : group) {
    for (const auto& v : group) {
      const Rational d = phi.distance(u, v);
      EXPECT_EQ(d, phi_distance(phi(u), phi(v)));
      EXPECT_GE(4 * d, Rational(metric6().distance(u, v)));
    }
  }
}

TEST(Extend, IsDeterministicAcrossThreadCounts) {
  ThreadPool one(1);
  ThreadPool three(3);
  const ExtendedMap a = extend(2, lip6(), metric6(), ExtendOptions{std::nullopt, &one});
  const ExtendedMap b = extend(2, lip6(), metric6(), ExtendOptions{std::nullopt, &three});
  for (const auto& g : enumerate_group(6)) EXPECT_EQ(a(g), b(g));
}

TEST(Extend, PruneRadius) {
  const ExtendedMap full = extend(1, lip6(), metric6());
  const ExtendedMap wide = extend(1, lip6(), metric6(), ExtendOptions{100, nullptr});
  for (const auto& g : enumerate_group(6)) EXPECT_EQ(full(g), wide(g));
  EXPECT_EQ(wide.prune_radius(), 100);
  EXPECT_THROW(extend(1, lip6(), metric6(), ExtendOptions{0, nullptr}), std::runtime_error);
}

TEST(Extend, RejectsBadArguments) {
  EXPECT_THROW(extend(1, Rational(0), metric6()), std::invalid_argument);
  EXPECT_THROW(extend(1, lip6(), WordMetric(4)), InvalidModulus);
}

TEST(AssemblePhi, RequiresOneMapPerPiece) {
  std::vector<ExtendedMap> two;
  two.push_back(extend(1, lip6(), metric6()));
  two.push_back(extend(1, lip6(), metric6()));
  EXPECT_THROW(assemble_phi(two), std::invalid_argument);
  two.pop_back();
  EXPECT_THROW(assemble_phi(two), std::invalid_argument);
}
