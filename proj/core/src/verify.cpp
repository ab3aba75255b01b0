#include "lamplighter/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>

#include "lamplighter/horocyclic.hpp"

namespace lamplighter {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

DistortionReport new_rule(const std::string& id, int n, const AuditMode& mode) {
  DistortionReport r;
  r.rule_id = id;
  r.n = n;
  r.mode = mode.name();
  r.seed = mode.seed;
  return r;
}

std::string str(std::int64_t v) { return std::to_string(v); }

void check_pair_budget(std::uint64_t size, const AuditMode& mode, const VerifyOptions& options,
                       const char* what) {
  if (mode.is_sampled()) return;
  const std::uint64_t pairs = size * (size - 1) / 2;
  if (pairs > options.max_exhaustive_pairs) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(pairs) +
                         " pairs exceed the exhaustive budget");
  }
}

// Per-element group checks: identities, inverses, Cayley symmetry, rotation.
void group_rules(int n, const std::vector<GroupElement>& group, const AuditMode& mode,
                 std::vector<DistortionReport>& out) {
  const auto t0 = Clock::now();
  const GroupElement e = identity(n);
  DistortionReport ident = new_rule("group_identity_inverse", n, AuditMode::exhaustive());
  DistortionReport sym = new_rule("cayley_symmetry", n, AuditMode::exhaustive());
  RuleTally ti;
  RuleTally ts;
  for (const GroupElement& g : group) {
    ++ti.tested;
    const GroupElement inv = inverse(g);
    if (wreath_mul(e, g) != g || wreath_mul(g, e) != g || wreath_mul(g, inv) != e ||
        wreath_mul(inv, g) != e) {
      ti.fail({ident.rule_id, to_string(g), to_string(inv), "g*g^-1", "e"});
    }
    const auto nb = neighbors(g);
    ++ts.tested;
    if (n >= 3 && nb.size() != 4) {
      ts.fail({sym.rule_id, to_string(g), "", "degree " + str(static_cast<std::int64_t>(nb.size())), "4"});
    }
    for (const GroupElement& h : nb) {
      const auto back = neighbors(h);
      if (std::find(back.begin(), back.end(), g) == back.end()) {
        ts.fail({sym.rule_id, to_string(g), to_string(h), "h in N(g)", "g in N(h)"});
      }
    }
  }
  apply_tally(ident, std::move(ti));
  apply_tally(sym, std::move(ts));
  ident.elapsed_ms = ms_since(t0);
  sym.elapsed_ms = ident.elapsed_ms;
  out.push_back(std::move(ident));
  out.push_back(std::move(sym));

  // Associativity over triples: all of them when cheap, seeded draws otherwise.
  const auto t1 = Clock::now();
  const std::uint64_t size = group.size();
  const bool all = !mode.is_sampled() && size * size * size <= (std::uint64_t{1} << 27);
  const AuditMode triples_mode =
      all ? AuditMode::exhaustive()
          : AuditMode::sampled(mode.is_sampled() ? mode.count : 100000, mode.seed);
  DistortionReport assoc = new_rule("group_associativity", n, triples_mode);
  RuleTally ta;
  auto check = [&](const GroupElement& a, const GroupElement& b, const GroupElement& c) {
    ++ta.tested;
    if (wreath_mul(wreath_mul(a, b), c) != wreath_mul(a, wreath_mul(b, c))) {
      ta.fail({assoc.rule_id, to_string(a), to_string(b) + "," + to_string(c), "(ab)c", "a(bc)"});
    }
  };
  if (all) {
    for (const auto& a : group)
      for (const auto& b : group)
        for (const auto& c : group) check(a, b, c);
  } else {
    for (std::uint64_t k = 0; k < triples_mode.count; ++k) {
      const std::uint64_t h = detail::splitmix64(triples_mode.seed ^ (0xa5a5ULL + 3 * k));
      check(group[h % size], group[detail::splitmix64(h) % size],
            group[detail::splitmix64(h + 1) % size]);
    }
  }
  apply_tally(assoc, std::move(ta));
  assoc.elapsed_ms = ms_since(t1);
  out.push_back(std::move(assoc));

  if (n % 3 == 0) {
    const auto t2 = Clock::now();
    DistortionReport rot = new_rule("rotation_automorphism", n, AuditMode::exhaustive());
    RuleTally tr;
    for (const GroupElement& g : group) {
      ++tr.tested;
      std::set<GroupElement> lhs;
      std::set<GroupElement> rhs;
      for (const auto& h : neighbors(rotate(g))) lhs.insert(h);
      for (const auto& h : neighbors(g)) rhs.insert(rotate(h));
      if (lhs != rhs || rotate(g, 3) != g) {
        tr.fail({rot.rule_id, to_string(g), "", "N(rot g)", "rot N(g)"});
      }
    }
    apply_tally(rot, std::move(tr));
    rot.elapsed_ms = ms_since(t2);
    out.push_back(std::move(rot));
  }
}

// Word-metric rules over pairs of the whole group.
void metric_rules(int n, const std::vector<GroupElement>& group, const WordMetric& metric,
                  const VerifyOptions& options, std::vector<DistortionReport>& out) {
  const auto t0 = Clock::now();
  const AuditMode& mode = options.mode;
  check_pair_budget(group.size(), mode, options, "rho_sandwich");
  struct Shard {
    RuleTally sandwich;
    RuleTally tau;
  };
  Shard s = scan_pairs<Shard>(
      group.size(), mode, options.pool,
      [&](Shard& acc, std::size_t i, std::size_t j) {
        const GroupElement& u = group[i];
        const GroupElement& v = group[j];
        const int rho = metric.distance(u, v);
        const RhoBounds b = rho_bounds(u, v);
        ++acc.sandwich.tested;
        if (rho < b.lower || rho > b.upper) {
          acc.sandwich.fail({"rho_sandwich", to_string(u), to_string(v), "rho=" + str(rho),
                             "[" + str(b.lower) + "," + str(b.upper) + "]"});
        }
        const IntervalReport ir = interval_report(u, v);
        ++acc.tau.tested;
        if (rho < ir.tau - 1) {
          acc.tau.fail({"tau_lower", to_string(u), to_string(v), "rho=" + str(rho),
                        ">= tau-1=" + str(ir.tau - 1)});
        }
      },
      [](Shard a, Shard b) {
        a.sandwich = fold_tally(std::move(a.sandwich), std::move(b.sandwich));
        a.tau = fold_tally(std::move(a.tau), std::move(b.tau));
        return a;
      });
  DistortionReport sandwich = new_rule("rho_sandwich", n, mode);
  DistortionReport tau = new_rule("tau_lower", n, mode);
  apply_tally(sandwich, std::move(s.sandwich));
  apply_tally(tau, std::move(s.tau));
  sandwich.elapsed_ms = tau.elapsed_ms = ms_since(t0);
  out.push_back(std::move(sandwich));
  out.push_back(std::move(tau));

  // Independent BFS from sampled sources against the left-invariant table.
  const auto t1 = Clock::now();
  DistortionReport inv = new_rule("left_invariance", n, AuditMode::sampled(8, mode.seed));
  RuleTally ti;
  const std::uint64_t size = group.size();
  for (std::uint64_t k = 0; k < 8; ++k) {
    const GroupElement& u = group[detail::splitmix64(mode.seed + 17 * k) % size];
    const GroupElement& g = group[detail::splitmix64(mode.seed + 17 * k + 1) % size];
    const DistanceMap from_u = bfs_distances(u, options.budget);
    const DistanceMap from_gu = bfs_distances(wreath_mul(g, u), options.budget);
    for (const GroupElement& v : group) {
      ++ti.tested;
      const int direct = from_u[element_index(v)];
      if (direct != from_gu[element_index(wreath_mul(g, v))] || direct != metric.distance(u, v)) {
        ti.fail({inv.rule_id, to_string(u), to_string(v), "bfs=" + str(direct),
                 "table=" + str(metric.distance(u, v))});
      }
    }
  }
  apply_tally(inv, std::move(ti));
  inv.elapsed_ms = ms_since(t1);
  out.push_back(std::move(inv));
}

void encoding_rules(int n, const std::vector<GroupElement>& group, const WordMetric& metric,
                    const VerifyOptions& options, std::vector<DistortionReport>& out) {
  const auto t0 = Clock::now();
  DistortionReport cover = new_rule("covering", n, AuditMode::exhaustive());
  RuleTally tc;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      ++tc.tested;
      bool found = false;
      for (int i = 1; i <= 3 && !found; ++i) found = arc_contains(i, k, n) && arc_contains(i, l, n);
      if (!found) tc.fail({cover.rule_id, str(k), str(l), "no arc", "some arc"});
    }
  }
  apply_tally(cover, std::move(tc));
  cover.elapsed_ms = ms_since(t0);
  out.push_back(std::move(cover));

  const auto t1 = Clock::now();
  DistortionReport bij = new_rule("phi_bijectivity", n, AuditMode::exhaustive());
  RuleTally tb;
  const std::vector<HoroPoint> w = enumerate_w(n, options.budget);
  const std::uint64_t expected = static_cast<std::uint64_t>(2 * n / 3 + 1) << n;
  ++tb.tested;
  if (w.size() != expected) {
    tb.fail({bij.rule_id, "|W_n|", "", str(static_cast<std::int64_t>(w.size())),
             str(static_cast<std::int64_t>(expected))});
  }
  for (int i = 1; i <= 3; ++i) {
    const auto piece = piece_elements(i, n, options.budget);
    ++tb.tested;
    if (piece.size() != expected) {
      tb.fail({bij.rule_id, "|P_" + str(i) + "|", "", str(static_cast<std::int64_t>(piece.size())),
               str(static_cast<std::int64_t>(expected))});
    }
    for (const GroupElement& u : piece) {
      ++tb.tested;
      const HoroPoint img = encode_phi(i, u);
      if (!in_w(img, n) || decode_phi(i, img, n) != u) {
        tb.fail({bij.rule_id, to_string(u), describe(img), "decode(encode(u))", "u"});
      }
    }
    for (const HoroPoint& p : w) {
      ++tb.tested;
      const GroupElement g = decode_phi(i, p, n);
      if (!in_piece(i, g) || encode_phi(i, g) != p) {
        tb.fail({bij.rule_id, describe(p), to_string(g), "encode(decode(w))", "w"});
      }
    }
  }
  apply_tally(bij, std::move(tb));
  bij.elapsed_ms = ms_since(t1);
  out.push_back(std::move(bij));

  // Rotation is an isometry carrying piece 1 onto pieces 2 and 3 with the
  // same encodings.
  const auto t2 = Clock::now();
  DistortionReport iso = new_rule("rotation_isometry", n, options.mode);
  RuleTally tr = scan_pairs<RuleTally>(
      group.size(), options.mode, options.pool,
      [&](RuleTally& acc, std::size_t i, std::size_t j) {
        const GroupElement& u = group[i];
        const GroupElement& v = group[j];
        ++acc.tested;
        if (metric.distance(rotate(u), rotate(v)) != metric.distance(u, v)) {
          acc.fail({"rotation_isometry", to_string(u), to_string(v), "rho(rot u, rot v)", "rho(u,v)"});
        }
        if (in_piece(1, u)) {
          const HoroPoint base = encode_phi1(u);
          if (encode_phi(2, rotate(u, 1)) != base || encode_phi(3, rotate(u, 2)) != base) {
            acc.fail({"rotation_isometry", to_string(u), "", "phi_i(rot^(i-1) u)", "phi_1(u)"});
          }
        }
      },
      fold_tally);
  apply_tally(iso, std::move(tr));
  iso.elapsed_ms = ms_since(t2);
  out.push_back(std::move(iso));
}

enum Step1Rule : std::size_t {
  kUpper,
  kUpperGap,
  kUpperDinf,
  kLowerExcl,
  kLowerIncl,
  kObservation,
  kDwIdentity,
  kDiameter,
  kQuarter,
  kStep1Count
};

constexpr const char* kStep1Ids[kStep1Count] = {
    "step1_upper",        "step1_upper_gap",        "step1_upper_dinf",
    "step1_lower_j_excludes_zero", "step1_lower_j_contains_zero", "observation_e_count",
    "dw_identity",        "diameter_w",             "phi1_quarter_colipschitz"};

void step1_rules(int n, const WordMetric& metric, const VerifyOptions& options,
                 std::vector<DistortionReport>& out) {
  const auto t0 = Clock::now();
  const auto piece = piece_elements(1, n, options.budget);
  check_pair_budget(piece.size(), options.mode, options, "step1");
  std::vector<HoroPoint> img;
  img.reserve(piece.size());
  for (const auto& u : piece) img.push_back(encode_phi1(u));

  using Shard = std::array<RuleTally, kStep1Count>;
  Shard s = scan_pairs<Shard>(
      piece.size(), options.mode, options.pool,
      [&](Shard& acc, std::size_t i, std::size_t j) {
        const GroupElement& u = piece[i];
        const GroupElement& v = piece[j];
        const int rho = metric.distance(u, v);
        const int d1 = d_1(img[i], img[j]);
        const int dinf = d_inf(img[i], img[j]);
        const int lgc_sum = lgc(img[i].a1, img[j].a1) + lgc(img[i].a2, img[j].a2);
        const IntervalReport ir = interval_report(u, v);
        auto rule = [&](Step1Rule r, bool ok, std::string lhs, std::string rhs) {
          ++acc[r].tested;
          if (!ok) acc[r].fail({kStep1Ids[r], to_string(u), to_string(v), std::move(lhs), std::move(rhs)});
        };
        const std::string rho_s = "rho=" + str(rho);
        rule(kUpper, rho <= 2 + d1, rho_s, "<= 2+d1=" + str(2 + d1));
        rule(kUpperGap, rho <= 2 + 2 * (n - ir.g_free), rho_s, "<= 2+2(n-g)=" + str(2 + 2 * (n - ir.g_free)));
        rule(kUpperDinf, rho <= 2 + 2 * dinf, rho_s, "<= 2+2dinf=" + str(2 + 2 * dinf));
        if (!ir.j_contains_zero) {
          // rho >= d1/2 - 1 and, a fortiori, >= dinf/2 - 1.
          rule(kLowerExcl, 2 * rho >= d1 - 2 && 2 * rho >= dinf - 2, rho_s, ">= d1/2-1, d1=" + str(d1));
        } else {
          // rho >= n/3 - 2 >= dinf/6 - 2.
          rule(kLowerIncl, 3 * rho >= n - 6 && 6 * rho >= dinf - 12, rho_s, ">= n/3-2");
        }
        rule(kObservation, ir.e_vertex_count == lgc_sum, "E=" + str(ir.e_vertex_count),
             "lgc sum=" + str(lgc_sum));
        rule(kDwIdentity, d1 == 2 * (n - lgc_sum), "d1=" + str(d1), "2(n-lgc sum)=" + str(2 * (n - lgc_sum)));
        rule(kDiameter, d1 <= 2 * n, "d1=" + str(d1), "<= 2n=" + str(2 * n));
        rule(kQuarter, 4 * dinf >= rho, "4dinf=" + str(4 * dinf), ">= rho=" + str(rho));
      },
      [](Shard a, Shard b) {
        for (std::size_t r = 0; r < kStep1Count; ++r) a[r] = fold_tally(std::move(a[r]), std::move(b[r]));
        return a;
      });
  const std::int64_t ms = ms_since(t0);
  for (std::size_t r = 0; r < kStep1Count; ++r) {
    DistortionReport rep = new_rule(kStep1Ids[r], n, options.mode);
    apply_tally(rep, std::move(s[r]));
    rep.elapsed_ms = ms;
    out.push_back(std::move(rep));
  }
}

// Node depths are drawn from [0, depth] with depth at least 12.
constexpr int kTreeL1MinDepth = 12;

void tree_l1_rule(int n, const AuditMode& mode, std::vector<DistortionReport>& out) {
  const auto t0 = Clock::now();
  const std::uint64_t count = mode.is_sampled() ? std::min<std::uint64_t>(mode.count, 10000) : 10000;
  DistortionReport rep = new_rule("tree_l1_isometry", n, AuditMode::sampled(count, mode.seed));
  RuleTally t;
  const int depth = std::clamp(n, kTreeL1MinDepth, kMaxTreeDepth);
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t h = detail::splitmix64(mode.seed * 31 + k);
    const std::uint64_t h2 = detail::splitmix64(h);
    const TreeNode a = TreeNode::from_bits(h, static_cast<int>(h2 % (depth + 1)));
    const TreeNode b = TreeNode::from_bits(h2, static_cast<int>((h >> 32) % (depth + 1)));
    ++t.tested;
    const std::int64_t l1 = l1_distance(tree_to_l1(a), tree_to_l1(b));
    if (l1 != tree_dist(a, b)) {
      t.fail({rep.rule_id, a.to_string(), b.to_string(), "l1=" + str(l1), "d_T=" + str(tree_dist(a, b))});
    }
  }
  apply_tally(rep, std::move(t));
  rep.elapsed_ms = ms_since(t0);
  out.push_back(std::move(rep));
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(rules.begin(), rules.end(), [](const auto& r) { return r.ok(); });
}

const DistortionReport* VerifyReport::find(const std::string& rule_id) const {
  for (const auto& r : rules) {
    if (r.rule_id == rule_id) return &r;
  }
  return nullptr;
}

DistortionReport audit_phi(int i, const WordMetric& metric, const AuditMode& mode,
                           ThreadPool* pool) {
  const int n = metric.n();
  const auto piece = piece_elements(i, n);
  std::vector<HoroPoint> img;
  img.reserve(piece.size());
  for (const auto& u : piece) img.push_back(encode_phi(i, u));
  return audit_map<GroupElement>(
      "phi" + std::to_string(i) + "_distortion", n, piece,
      [&](std::size_t a, std::size_t b) { return std::int64_t{metric.distance(piece[a], piece[b])}; },
      [&](std::size_t a, std::size_t b) { return std::int64_t{d_inf(img[a], img[b])}; }, mode, pool);
}

DistortionReport audit_tree_embedding(const WordMetric& metric, ThreadPool* pool) {
  const int n = metric.n();
  const auto nodes = tree_nodes(n / 2);
  std::vector<GroupElement> emb;
  emb.reserve(nodes.size());
  for (const auto& a : nodes) emb.push_back(embed_tree(a, n));
  return audit_map<TreeNode>(
      "tree_embedding", n, nodes,
      [&](std::size_t a, std::size_t b) { return std::int64_t{tree_dist(nodes[a], nodes[b])}; },
      [&](std::size_t a, std::size_t b) { return std::int64_t{metric.distance(emb[a], emb[b])}; },
      AuditMode::exhaustive(), pool);
}

DistortionReport audit_tree_subset(int n, ThreadPool* pool) {
  const auto u = tree_subset_U(n);
  std::vector<TreeNode> nodes;
  for (const auto& w : u) nodes.push_back(w.a1);
  // d_T <= d_inf <= 2 d_T on every pair.
  return audit_map<TreeNode>(
      "tree_subset_bounds", n, nodes,
      [&](std::size_t a, std::size_t b) { return std::int64_t{tree_dist(u[a].a1, u[b].a1)}; },
      [&](std::size_t a, std::size_t b) { return std::int64_t{d_inf(u[a], u[b])}; },
      AuditMode::exhaustive(), pool,
      [](std::int64_t dt, std::int64_t dinf) -> std::optional<std::pair<std::string, std::string>> {
        if (dinf >= dt && dinf <= 2 * dt) return std::nullopt;
        return std::make_pair("dinf=" + std::to_string(dinf), "in [" + std::to_string(dt) + "," +
                                                                   std::to_string(2 * dt) + "]");
      });
}

DistortionReport audit_extended(const ExtendedMap& map, const WordMetric& metric,
                                const AuditMode& mode, ThreadPool* pool) {
  const int n = map.n();
  const auto group = enumerate_group(n);
  const std::int64_t scale = map.scale();
  const Rational lip = map.lip_constant();
  // Ratios tgt/src are ticks / (scale * rho) = d_inf / rho.
  auto report = audit_map<GroupElement>(
      "phibar" + std::to_string(map.piece()) + "_lipschitz", n, group,
      [&](std::size_t a, std::size_t b) { return scale * metric.distance(group[a], group[b]); },
      [&](std::size_t a, std::size_t b) { return map.distance_ticks(group[a], group[b]); }, mode,
      pool,
      [&](std::int64_t src, std::int64_t ticks) -> std::optional<std::pair<std::string, std::string>> {
        if (Rational(ticks) <= lip * src) return std::nullopt;
        return std::make_pair("dinf=" + to_string(Rational(ticks, scale)),
                              "<= L*rho=" + to_string(lip * Rational(src, scale)));
      });
  return report;
}

DistortionReport audit_product(const PhiMap& phi, const WordMetric& metric, const AuditMode& mode,
                               ThreadPool* pool) {
  const int n = phi.n();
  const auto group = enumerate_group(n);
  const std::int64_t scale = phi.part(1).scale();
  const Rational lip = phi.lip_constant();
  return audit_map<GroupElement>(
      "phi_product", n, group,
      [&](std::size_t a, std::size_t b) { return scale * metric.distance(group[a], group[b]); },
      [&](std::size_t a, std::size_t b) { return phi.distance_ticks(group[a], group[b]); }, mode,
      pool,
      [&](std::int64_t src, std::int64_t ticks) -> std::optional<std::pair<std::string, std::string>> {
        if (4 * ticks < src) {
          return std::make_pair("d=" + to_string(Rational(ticks, scale)),
                                ">= rho/4=" + to_string(Rational(src, 4 * scale)));
        }
        if (Rational(ticks) > lip * src) {
          return std::make_pair("d=" + to_string(Rational(ticks, scale)),
                                "<= L*rho=" + to_string(lip * Rational(src, scale)));
        }
        return std::nullopt;
      });
}

VerifyReport verify_inequalities(int n, const VerifyOptions& options) {
  const auto t0 = Clock::now();
  require_divisible_by_six(n);
  options.budget.check(n, "verify");

  VerifyReport report;
  report.n = n;
  report.mode = options.mode.name();
  report.seed = options.mode.seed;
  report.sample = options.mode.is_sampled() ? options.mode.count : 0;

  const WordMetric metric(n, options.budget);
  const auto group = enumerate_group(n, options.budget);

  group_rules(n, group, options.mode, report.rules);
  metric_rules(n, group, metric, options, report.rules);
  encoding_rules(n, group, metric, options, report.rules);
  step1_rules(n, metric, options, report.rules);

  // The extension needs the exact constant, so phi_1 is audited in full.
  const std::uint64_t p1 = piece_elements(1, n, options.budget).size();
  if (p1 * (p1 - 1) / 2 > options.max_exhaustive_pairs) {
    throw BudgetExceeded("phi1 Lipschitz audit exceeds the exhaustive pair budget");
  }
  DistortionReport phi1 = audit_phi(1, metric, AuditMode::exhaustive(), options.pool);
  if (!phi1.distortion || *phi1.distortion > kPhiEnvelope) {
    phi1.violations.push_back({phi1.rule_id, phi1.witness_max ? phi1.witness_max->first : "",
                               phi1.witness_max ? phi1.witness_max->second : "",
                               phi1.distortion ? to_string(*phi1.distortion) : "unbounded",
                               "<= " + to_string(kPhiEnvelope)});
    ++phi1.violation_count;
  }
  report.lip_constant = phi1.lip;
  if (!options.mode.is_sampled()) {
    for (int i = 2; i <= 3; ++i) {
      DistortionReport other = audit_phi(i, metric, AuditMode::exhaustive(), options.pool);
      if (other.lip != phi1.lip || other.colip != phi1.colip) {
        other.violations.push_back({other.rule_id, "", "",
                                    to_string(*other.lip) + "/" + to_string(*other.colip),
                                    to_string(*phi1.lip) + "/" + to_string(*phi1.colip)});
        ++other.violation_count;
      }
      report.rules.push_back(std::move(other));
    }
  }
  report.rules.insert(report.rules.end() - (options.mode.is_sampled() ? 0 : 2), std::move(phi1));

  tree_l1_rule(n, options.mode, report.rules);
  report.rules.push_back(audit_tree_subset(n, options.pool));
  report.rules.push_back(audit_tree_embedding(metric, options.pool));

  if (options.include_phi) {
    const auto t1 = Clock::now();
    ExtendOptions ext;
    ext.prune_radius = options.prune_radius;
    ext.pool = options.pool;
    PhiMap phi = build_phi(*report.lip_constant, metric, ext);

    DistortionReport restriction = new_rule("phibar_restriction", n, AuditMode::exhaustive());
    RuleTally tr;
    for (int i = 1; i <= 3; ++i) {
      for (const GroupElement& u : piece_elements(i, n)) {
        ++tr.tested;
        if (phi.part(i)(u) != to_pi_point(encode_phi(i, u))) {
          tr.fail({restriction.rule_id, to_string(u), "", "phibar_" + str(i) + "(u)", "phi_" + str(i) + "(u)"});
        }
      }
    }
    apply_tally(restriction, std::move(tr));
    restriction.elapsed_ms = ms_since(t1);
    report.rules.push_back(std::move(restriction));
    for (int i = 1; i <= 3; ++i) {
      report.rules.push_back(audit_extended(phi.part(i), metric, options.mode, options.pool));
    }
    report.rules.push_back(audit_product(phi, metric, options.mode, options.pool));
  }

  report.elapsed_ms = ms_since(t0);
  return report;
}

Baseline compute_baseline(int n, ThreadPool* pool) {
  const WordMetric metric(n);
  Baseline b;
  b.n = n;
  const DistortionReport phi1 = audit_phi(1, metric, AuditMode::exhaustive(), pool);
  b.phi1_lip = *phi1.lip;
  b.phi1_colip = *phi1.colip;
  b.phi1_distortion = *phi1.distortion;
  b.tree_distortion = *audit_tree_embedding(metric, pool).distortion;
  const PhiMap phi = build_phi(b.phi1_lip, metric, ExtendOptions{std::nullopt, pool});
  const DistortionReport prod = audit_product(phi, metric, AuditMode::exhaustive(), pool);
  b.phi_lip = *prod.lip;
  b.phi_colip = *prod.colip;
  b.phi_distortion = *prod.distortion;
  return b;
}

}  // namespace lamplighter
