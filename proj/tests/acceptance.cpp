// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "lamplighter/horocyclic.hpp"
#include "lamplighter/report_json.hpp"
#include "lamplighter/thread_pool.hpp"
#include "lamplighter/verify.hpp"

using namespace lamplighter;
using nlohmann::json;

namespace {

// Pinned limits. Ratios are compared exactly, so there is no numeric tolerance.
constexpr double kGroupSeconds = 5;
constexpr double kSandwichSixSeconds = 60;
constexpr double kSandwichTwelveSeconds = 600;
constexpr double kExtensionSeconds = 300;
constexpr std::uint64_t kSampledPairs = 100000;
constexpr std::uint64_t kSampleSeed = 7;
constexpr std::uint64_t kL1Pairs = 10000;
constexpr int kL1Depth = 12;
const Rational kQuarter(1, 4);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " |"
            << o.detail.str() << std::endl;
}

const DistortionReport& rule(const VerifyReport& r, const std::string& id) {
  const DistortionReport* p = r.find(id);
  if (p == nullptr) throw std::runtime_error("missing rule " + id);
  return *p;
}

const json& rule(const json& r, const std::string& id) {
  for (const auto& x : r.at("rules")) {
    if (x.at("rule_id") == id) return x;
  }
  throw std::runtime_error("missing rule " + id + " in the n=12 report");
}

Rational q(const json& v) { return parse_rational(v.get<std::string>()); }

void strip_elapsed(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) strip_elapsed(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_elapsed(v);
  }
}

json run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = lampctl::run(args, out, err);
  if (!err.str().empty()) std::cerr << err.str();
  return json::parse(out.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <baseline.json>\n";
    return 2;
  }
  std::ifstream baseline_file(argv[1]);
  if (!baseline_file) {
    std::cerr << "cannot read " << argv[1] << "\n";
    return 2;
  }
  const Baseline frozen = baseline_from_json(json::parse(baseline_file));

  ThreadPool pool;
  const WordMetric metric6(6);

  VerifyOptions opt6;
  opt6.pool = &pool;
  const VerifyReport r6 = verify_inequalities(6, opt6);

  const std::vector<std::string> sampled_args = {
      "verify", "--n", "12", "--seed", std::to_string(kSampleSeed), "--sample",
      std::to_string(kSampledPairs)};
  auto with_threads = [&](const char* t) {
    auto a = sampled_args;
    a.push_back("--threads");
    a.push_back(t);
    return a;
  };
  int code_a = -1;
  int code_b = -1;
  const auto t12 = Clock::now();
  json r12 = run_cli(with_threads("1"), code_a);
  const double verify12_seconds = seconds_since(t12);
  json r12_again = run_cli(with_threads("4"), code_b);

  report(1, "group axioms and Cayley symmetry at n=6", [&](Outcome& o) {
    std::int64_t ms = 0;
    for (const char* id :
         {"group_identity_inverse", "group_associativity", "cayley_symmetry", "rotation_automorphism"}) {
      const auto& r = rule(r6, id);
      o.require(r.ok(), id);
      ms += r.elapsed_ms;
    }
    const auto& assoc = rule(r6, "group_associativity");
    o.require(assoc.pairs_tested >= kSampledPairs, "at least 1e5 triples");
    o.require(rule(r6, "group_identity_inverse").pairs_tested == 384, "all 384 elements");
    o.require(ms < kGroupSeconds * 1000, "time");
    o.detail << " triples=" << assoc.pairs_tested << " (" << assoc.mode << ") ms=" << ms;
  });

  report(2, "rho sandwich, all ordered pairs at n=6 and sampled at n=12", [&](Outcome& o) {
    const auto t0 = Clock::now();
    const auto group = enumerate_group(6);
    std::uint64_t pairs = 0;
    std::uint64_t bad = 0;
    for (const auto& u : group) {
      const DistanceMap d = bfs_distances(u);
      for (const auto& v : group) {
        const int rho = d[element_index(v)];
        const RhoBounds b = rho_bounds(u, v);
        ++pairs;
        if (rho < b.lower || rho > b.lower + 2) ++bad;
      }
    }
    const double s6 = seconds_since(t0);
    o.require(pairs == 384 * 384 && bad == 0, "n=6 exhaustive");
    o.require(rule(r6, "rho_sandwich").ok(), "n=6 verify rule");
    o.require(s6 < kSandwichSixSeconds, "n=6 time");
    const auto& s = rule(r12, "rho_sandwich");
    o.require(s.at("pairs_tested").get<std::uint64_t>() >= kSampledPairs, "n=12 sample size");
    o.require(s.at("violation_count") == 0, "n=12 violations");
    o.require(verify12_seconds < kSandwichTwelveSeconds, "n=12 time");
    o.detail << " n6 pairs=" << pairs << " violations=" << bad << " s=" << s6
             << "; n12 pairs=" << s.at("pairs_tested") << " violations=" << s.at("violation_count")
             << " verify s=" << verify12_seconds;
  });

  const std::vector<std::string> step1 = {
      "step1_upper",        "step1_upper_gap",     "step1_upper_dinf",
      "step1_lower_j_excludes_zero", "step1_lower_j_contains_zero", "observation_e_count",
      "dw_identity",        "diameter_w"};
  report(3, "Step-1 bounds on piece 1, exhaustive at n=6 and sampled at n=12", [&](Outcome& o) {
    for (const auto& id : step1) {
      o.require(rule(r6, id).ok(), id + " n=6");
      o.require(rule(r12, id).at("violation_count") == 0, id + " n=12");
    }
    const std::uint64_t all = 320 * 319 / 2;
    const auto excl = rule(r6, "step1_lower_j_excludes_zero").pairs_tested;
    const auto incl = rule(r6, "step1_lower_j_contains_zero").pairs_tested;
    o.require(rule(r6, "step1_upper").pairs_tested == all, "all 320-element pairs");
    o.require(excl + incl == all && excl > 0 && incl > 0, "both J cases exercised");
    o.detail << " n6 pairs=" << all << " (J excludes 0: " << excl << ", contains 0: " << incl
             << "); n12 pairs=" << rule(r12, "step1_upper").at("pairs_tested");
  });

  report(4, "phi bijectivity for n in {6, 12}", [&](Outcome& o) {
    for (int n : {6, 12}) {
      const std::size_t expected = static_cast<std::size_t>(2 * n / 3 + 1) << n;
      const std::size_t piece = piece_elements(1, n).size();
      const std::size_t w = enumerate_w(n).size();
      o.require(piece == expected && w == expected, "cardinality n=" + std::to_string(n));
      o.detail << " n=" << n << ": |P1|=" << piece << " |W|=" << w;
    }
    o.require(rule(r6, "phi_bijectivity").ok(), "round trips n=6");
    o.require(rule(r12, "phi_bijectivity").at("violation_count") == 0, "round trips n=12");
  });

  report(5, "distortion of phi_1 frozen at n=6 and within 72", [&](Outcome& o) {
    const auto& p6 = rule(r6, "phi1_distortion");
    const auto& p12 = rule(r12, "phi1_distortion");
    o.require(p6.mode == "exhaustive" && p12.at("mode") == "exhaustive", "exhaustive audits");
    o.require(*p6.distortion == frozen.phi1_distortion, "D6 equals the frozen baseline");
    o.require(*p6.lip == frozen.phi1_lip && *p6.colip == frozen.phi1_colip, "constants frozen");
    o.require(*p6.distortion <= kPhiEnvelope, "n=6 envelope");
    o.require(q(p12.at("distortion")) <= kPhiEnvelope, "n=12 envelope");
    o.detail << " D6=" << to_string(*p6.distortion) << " (lip " << to_string(*p6.lip) << ", colip "
             << to_string(*p6.colip) << "); D12=" << p12.at("distortion").get<std::string>()
             << "; envelope " << to_string(kPhiEnvelope);
  });

  report(6, "extension of phi_1 at n=6 with the audited constant", [&](Outcome& o) {
    const Rational lip = *rule(r6, "phi1_distortion").lip;
    const auto t0 = Clock::now();
    const ExtendedMap map = extend(1, lip, metric6, ExtendOptions{std::nullopt, &pool});
    const double s = seconds_since(t0);
    const DistortionReport audit = audit_extended(map, metric6, AuditMode::exhaustive(), &pool);
    std::size_t mismatched = 0;
    for (const auto& u : piece_elements(1, 6)) {
      if (map(u) != to_pi_point(encode_phi1(u))) ++mismatched;
    }
    o.require(audit.ok() && *audit.lip <= lip, "Lip(extension) <= L");
    o.require(audit.pairs_tested == 384 * 383 / 2, "all pairs");
    o.require(mismatched == 0, "restriction equals phi_1");
    o.require(s < kExtensionSeconds, "time");
    o.detail << " L=" << to_string(lip) << " audited=" << to_string(*audit.lip)
             << " mismatches=" << mismatched << " s=" << s;
  });

  report(7, "product map co-Lipschitz 1/4 at n=6, baseline re-asserted at n=12", [&](Outcome& o) {
    const auto& p6 = rule(r6, "phi_product");
    const auto& p12 = rule(r12, "phi_product");
    o.require(p6.ok() && p6.pairs_tested == 384 * 383 / 2, "all pairs n=6");
    o.require(*p6.colip >= kQuarter, "colip >= 1/4 n=6");
    o.require(*p6.distortion == frozen.phi_distortion, "n=6 distortion equals the frozen baseline");
    o.require(p12.at("violation_count") == 0 && q(p12.at("colip")) >= kQuarter, "n=12 sample");
    o.require(q(p12.at("distortion")) <= frozen.phi_distortion, "n=12 within the frozen bound");
    o.detail << " n6 distortion=" << to_string(*p6.distortion) << " colip=" << to_string(*p6.colip)
             << "; n12 sampled distortion=" << p12.at("distortion").get<std::string>()
             << " colip=" << p12.at("colip").get<std::string>();
  });

  report(8, "tree subset bounds and embedded tree distortion", [&](Outcome& o) {
    const auto& u6 = rule(r6, "tree_subset_bounds");
    const auto& u12 = rule(r12, "tree_subset_bounds");
    o.require(u6.ok() && u12.at("violation_count") == 0, "U pairs in [d_T, 2 d_T]");
    o.require(u12.at("mode") == "exhaustive", "n=12 exhaustive");
    const auto& t6 = rule(r6, "tree_embedding");
    o.require(t6.ok() && *t6.distortion <= frozen.tree_distortion, "D_tree baseline");
    o.detail << " U pairs n6=" << u6.pairs_tested << " n12=" << u12.at("pairs_tested")
             << "; tree distortion=" << to_string(*t6.distortion) << " frozen "
             << to_string(frozen.tree_distortion);
  });

  report(9, "tree to l1 isometry at depth 12", [&](Outcome& o) {
    std::mt19937_64 rng(kSampleSeed);
    std::uniform_int_distribution<int> depth(0, kL1Depth);
    std::uint64_t bad = 0;
    for (std::uint64_t k = 0; k < kL1Pairs; ++k) {
      const TreeNode a = TreeNode::from_bits(rng(), depth(rng));
      const TreeNode b = TreeNode::from_bits(rng(), depth(rng));
      if (l1_distance(tree_to_l1(a), tree_to_l1(b)) != tree_dist(a, b)) ++bad;
    }
    o.require(bad == 0, "exact equality");
    o.detail << " pairs=" << kL1Pairs << " mismatches=" << bad;
  });

  report(10, "determinism across thread counts", [&](Outcome& o) {
    o.require(code_a == 0 && code_b == 0, "both runs exit 0");
    json a = r12;
    json b = r12_again;
    strip_elapsed(a);
    strip_elapsed(b);
    const std::string da = a.dump(2);
    const std::string db = b.dump(2);
    o.require(da == db, "identical reports");
    o.detail << " threads 1 vs 4, report bytes=" << da.size();
  });

  std::cout << (failures == 0 ? "ALL PASS" : "SOME FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
