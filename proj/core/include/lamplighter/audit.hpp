#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lamplighter/group.hpp"
#include "lamplighter/rational.hpp"
#include "lamplighter/thread_pool.hpp"
#include "lamplighter/tree.hpp"

namespace lamplighter {

/// Either every unordered pair of the domain, or `count` seeded draws of
/// ordered pairs of distinct points.
struct AuditMode {
  enum class Kind { exhaustive, sampled };

  Kind kind = Kind::exhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  static AuditMode exhaustive() { return {}; }
  static AuditMode sampled(std::uint64_t count, std::uint64_t seed) {
    return {Kind::sampled, count, seed};
  }
  bool is_sampled() const { return kind == Kind::sampled; }
  std::string name() const { return is_sampled() ? "sampled" : "exhaustive"; }
};

struct Violation {
  std::string rule_id;
  std::string u;
  std::string v;
  std::string lhs;
  std::string rhs;
};

/// Cap on violations stored per report; violation_count keeps the total.
inline constexpr std::size_t kMaxRecordedViolations = 32;

struct DistortionReport {
  int n = 0;
  std::string rule_id;
  std::string mode = "exhaustive";
  std::uint64_t pairs_tested = 0;
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  std::optional<Rational> lip;
  std::optional<Rational> colip;
  std::optional<Rational> distortion;
  std::optional<std::pair<std::string, std::string>> witness_max;
  std::optional<std::pair<std::string, std::string>> witness_min;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;

  bool ok() const { return violation_count == 0; }
};

inline std::string describe(const GroupElement& g) { return to_string(g); }
inline std::string describe(const TreeNode& a) { return a.to_string(); }
inline std::string describe(const HoroPoint& w) {
  return "(" + w.a1.to_string() + "," + w.a2.to_string() + ")";
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// The j-th seeded draw of an ordered pair of distinct indices in [0, size),
/// uniform over all such pairs.
inline std::pair<std::size_t, std::size_t> sampled_pair(std::uint64_t seed, std::uint64_t j,
                                                        std::size_t size) {
  const std::uint64_t h1 = splitmix64(seed * 0x2545f4914f6cdd1dULL + 2 * j);
  const std::uint64_t h2 = splitmix64(seed * 0x2545f4914f6cdd1dULL + 2 * j + 1);
  const std::size_t a = static_cast<std::size_t>(h1 % size);
  std::size_t b = static_cast<std::size_t>(h2 % (size - 1));
  if (b >= a) ++b;
  return {a, b};
}

inline Rational as_rational(std::int64_t v) { return Rational(v); }
inline Rational as_rational(int v) { return Rational(v); }
inline Rational as_rational(const Rational& v) { return v; }

}  // namespace detail

/// Visits pairs (i, j) of [0, size) per `mode`, sharded deterministically.
/// `visit(shard, i, j)` updates a shard accumulator; shards fold in order.
template <class Shard, class Visit, class Fold>
Shard scan_pairs(std::size_t size, const AuditMode& mode, ThreadPool* pool, Visit visit,
                 Fold fold) {
  if (size < 2) return Shard{};
  if (mode.is_sampled()) {
    return reduce_shards(
        pool, mode.count, 4096, Shard{},
        [&](std::size_t begin, std::size_t end) {
          Shard s{};
          for (std::size_t k = begin; k < end; ++k) {
            const auto [i, j] = detail::sampled_pair(mode.seed, k, size);
            visit(s, i, j);
          }
          return s;
        },
        fold);
  }
  const std::size_t rows = std::max<std::size_t>(1, (std::size_t{1} << 21) / (size + 1));
  return reduce_shards(
      pool, size, rows, Shard{},
      [&](std::size_t begin, std::size_t end) {
        Shard s{};
        for (std::size_t i = begin; i < end; ++i) {
          for (std::size_t j = i + 1; j < size; ++j) visit(s, i, j);
        }
        return s;
      },
      fold);
}

/// Accumulator for pass/fail rules over pairs.
struct RuleTally {
  std::uint64_t tested = 0;
  std::uint64_t failed = 0;
  std::vector<Violation> recorded;

  void fail(Violation v) {
    ++failed;
    if (recorded.size() < kMaxRecordedViolations) recorded.push_back(std::move(v));
  }
};

inline RuleTally fold_tally(RuleTally acc, RuleTally next) {
  acc.tested += next.tested;
  acc.failed += next.failed;
  for (auto& v : next.recorded) {
    if (acc.recorded.size() >= kMaxRecordedViolations) break;
    acc.recorded.push_back(std::move(v));
  }
  return acc;
}

inline void apply_tally(DistortionReport& report, RuleTally tally) {
  report.pairs_tested += tally.tested;
  report.violation_count += tally.failed;
  for (auto& v : tally.recorded) {
    if (report.violations.size() >= kMaxRecordedViolations) break;
    report.violations.push_back(std::move(v));
  }
}

/// Default pair rule: the map must not collapse distinct points.
struct InjectivityCheck {
  template <class S, class T>
  std::optional<std::pair<std::string, std::string>> operator()(const S&, const T& tgt) const {
    if (tgt > 0) return std::nullopt;
    return std::make_pair(std::string("0"), std::string("> 0"));
  }
};

/// Lipschitz and co-Lipschitz constants of f: (domain, d_src) -> d_tgt over
/// the pairs selected by `mode`. d_src and d_tgt take domain indices and
/// return int64 or Rational. Witnesses are the first extremal pairs in scan
/// order. Every pair for which `check(src, tgt)` returns an (lhs, rhs)
/// description is recorded as a violation; by default that is every pair
/// the map collapses.
template <class Elem, class DSrc, class DTgt, class Check = InjectivityCheck>
DistortionReport audit_map(std::string rule_id, int n, std::span<const Elem> domain,
                           DSrc&& d_src, DTgt&& d_tgt, const AuditMode& mode,
                           ThreadPool* pool = nullptr, Check check = {}) {
  const auto started = std::chrono::steady_clock::now();
  if (domain.size() < 2) throw std::invalid_argument("audit_map needs at least two points");

  using V = std::decay_t<decltype(d_tgt(std::size_t{0}, std::size_t{1}))>;
  struct Ratio {
    V num{};
    V den{};
    std::size_t i = 0;
    std::size_t j = 0;
    bool set = false;
  };
  struct Shard {
    RuleTally tally;
    Ratio max;
    Ratio min;
  };
  // a.num / a.den > b.num / b.den, dens positive.
  auto greater = [](const Ratio& a, const Ratio& b) { return a.num * b.den > b.num * a.den; };

  Shard total = scan_pairs<Shard>(
      domain.size(), mode, pool,
      [&](Shard& s, std::size_t i, std::size_t j) {
        const auto src = d_src(i, j);
        const V tgt = d_tgt(i, j);
        if (!(src > 0)) {
          throw std::invalid_argument("audit_map: source distance vanishes on distinct points " +
                                      describe(domain[i]) + ", " + describe(domain[j]));
        }
        ++s.tally.tested;
        const Ratio r{tgt, static_cast<V>(src), i, j, true};
        if (!s.max.set || greater(r, s.max)) s.max = r;
        if (!s.min.set || greater(s.min, r)) s.min = r;
        if (auto bad = check(src, tgt)) {
          s.tally.fail({rule_id, describe(domain[i]), describe(domain[j]), std::move(bad->first),
                        std::move(bad->second)});
        }
      },
      [&](Shard acc, Shard next) {
        acc.tally = fold_tally(std::move(acc.tally), std::move(next.tally));
        if (next.max.set && (!acc.max.set || greater(next.max, acc.max))) acc.max = next.max;
        if (next.min.set && (!acc.min.set || greater(acc.min, next.min))) acc.min = next.min;
        return acc;
      });

  DistortionReport report;
  report.n = n;
  report.rule_id = std::move(rule_id);
  report.mode = mode.name();
  report.seed = mode.seed;
  for (auto& v : total.tally.recorded) v.rule_id = report.rule_id;
  apply_tally(report, std::move(total.tally));
  if (total.max.set) {
    report.lip = detail::as_rational(total.max.num) / detail::as_rational(total.max.den);
    report.colip = detail::as_rational(total.min.num) / detail::as_rational(total.min.den);
    report.witness_max = {describe(domain[total.max.i]), describe(domain[total.max.j])};
    report.witness_min = {describe(domain[total.min.i]), describe(domain[total.min.j])};
    if (*report.colip > 0) report.distortion = *report.lip / *report.colip;
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace lamplighter
