#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lamplighter/audit.hpp"
#include "lamplighter/extension.hpp"
#include "lamplighter/horocyclic.hpp"
#include "lamplighter/metric.hpp"
#include "lamplighter/tree.hpp"
#include "lamplighter/verify.hpp"

using namespace lamplighter;

namespace {

std::vector<GroupElement> random_elements(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t order = static_cast<std::uint64_t>(n) << n;
  std::vector<GroupElement> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(element_at(rng() % order, n));
  return out;
}

void BM_BfsDistances(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bfs_distances(identity(n)));
  state.SetItemsProcessed(state.iterations() * (static_cast<std::int64_t>(n) << n));
}
BENCHMARK(BM_BfsDistances)->Arg(6)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_WordMetricRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WordMetric metric(n);
  const auto targets = random_elements(n, 4096, 1);
  const WordMetric::Row row(metric, targets.front());
  for (auto _ : state) {
    for (const auto& v : targets) benchmark::DoNotOptimize(row(v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(targets.size()));
}
BENCHMARK(BM_WordMetricRow)->Arg(6)->Arg(12);

void BM_RhoBounds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto us = random_elements(n, 4096, 2);
  const auto vs = random_elements(n, 4096, 3);
  for (auto _ : state) {
    for (std::size_t k = 0; k < us.size(); ++k) benchmark::DoNotOptimize(rho_bounds(us[k], vs[k]));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(us.size()));
}
BENCHMARK(BM_RhoBounds)->Arg(6)->Arg(12)->Arg(30);

void BM_BallIntersect(benchmark::State& state) {
  const std::size_t count = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  std::vector<TreePoint> centers;
  std::vector<Rational> radii;
  const TreeNode hub = TreeNode::parse("0110");
  for (std::size_t k = 0; k < count; ++k) {
    TreeNode node = hub;
    for (int d = 0; d < 4; ++d) node = node.child(static_cast<int>(rng() & 1U));
    centers.emplace_back(node);
    radii.emplace_back(static_cast<std::int64_t>(tree_dist(node, hub)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(ball_intersect(centers, radii));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}
BENCHMARK(BM_BallIntersect)->Arg(8)->Arg(64)->Arg(512);

void BM_ExtendPieceOne(benchmark::State& state) {
  const WordMetric metric(6);
  for (auto _ : state) benchmark::DoNotOptimize(extend(1, Rational(5), metric));
}
BENCHMARK(BM_ExtendPieceOne)->Unit(benchmark::kMillisecond);

void BM_AuditPhi1(benchmark::State& state) {
  const WordMetric metric(6);
  for (auto _ : state) benchmark::DoNotOptimize(audit_phi(1, metric, AuditMode::exhaustive(), nullptr));
}
BENCHMARK(BM_AuditPhi1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
