#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lamplighter/horocyclic.hpp"
#include "lamplighter/report_json.hpp"
#include "lamplighter/thread_pool.hpp"
#include "lamplighter/verify.hpp"

namespace lampctl {
namespace {

using namespace lamplighter;
using nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 6;
  std::uint64_t seed = 0;
  std::uint64_t sample = 0;
  unsigned threads = 0;
  std::string out_path;
  std::string format = "json";
  std::string map = "phi1";
  std::string from;
  std::string to;
  std::optional<int> prune_radius;

  AuditMode mode() const {
    return sample > 0 ? AuditMode::sampled(sample, seed) : AuditMode::exhaustive();
  }
};

void require_pipeline_n(const RunConfig& c) {
  if (c.n < 6 || c.n % 6 != 0) {
    throw ConfigError(c.command + " needs --n to be a positive multiple of 6");
  }
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

Rational phi1_constant(const WordMetric& metric, ThreadPool& pool) {
  return *audit_phi(1, metric, AuditMode::exhaustive(), &pool).lip;
}

ExtendOptions extend_options(const RunConfig& c, ThreadPool& pool) {
  ExtendOptions o;
  o.prune_radius = c.prune_radius;
  o.pool = &pool;
  return o;
}

int cmd_verify(const RunConfig& c, ThreadPool& pool, std::ostream& out) {
  require_pipeline_n(c);
  VerifyOptions options;
  options.mode = c.mode();
  options.pool = &pool;
  options.prune_radius = c.prune_radius;
  const VerifyReport report = verify_inequalities(c.n, options);
  if (c.format == "csv") {
    write_csv(out, report);
  } else {
    emit_json(out, to_json(report));
  }
  return report.ok() ? kOk : kViolations;
}

int cmd_embed(const RunConfig& c, ThreadPool& pool, std::ostream& out) {
  require_pipeline_n(c);
  const WordMetric metric(c.n);
  const PhiMap phi = build_phi(phi1_constant(metric, pool), metric, extend_options(c, pool));
  const std::uint64_t order = group_order(c.n);
  const std::uint64_t count = c.sample > 0 ? c.sample : order;
  if (c.format == "csv") out << "element,t1,t2,t3,t4,t5,t6\n";
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t index = c.sample > 0 ? detail::splitmix64(c.seed + k) % order : k;
    const GroupElement g = element_at(index, c.n);
    const PhiImage img = phi(g);
    std::vector<std::string> points;
    for (const PiPoint& p : img.parts) {
      points.push_back(p.p1.to_string());
      points.push_back(p.p2.to_string());
    }
    if (c.format == "csv") {
      out << to_string(g);
      for (const auto& s : points) out << ',' << s;
      out << '\n';
    } else {
      out << ordered_json{{"element", to_string(g)}, {"images", points}}.dump() << '\n';
    }
  }
  return kOk;
}

int cmd_audit(const RunConfig& c, ThreadPool& pool, std::ostream& out) {
  require_pipeline_n(c);
  const WordMetric metric(c.n);
  DistortionReport report;
  if (c.map == "phi1" || c.map == "phi2" || c.map == "phi3") {
    report = audit_phi(c.map.back() - '0', metric, c.mode(), &pool);
  } else if (c.map == "phibar1") {
    const ExtendedMap map = extend(1, phi1_constant(metric, pool), metric, extend_options(c, pool));
    report = audit_extended(map, metric, c.mode(), &pool);
  } else if (c.map == "Phi") {
    const PhiMap phi = build_phi(phi1_constant(metric, pool), metric, extend_options(c, pool));
    report = audit_product(phi, metric, c.mode(), &pool);
  } else if (c.map == "treeU") {
    report = audit_tree_subset(c.n, &pool);
  } else {
    throw ConfigError("unknown map '" + c.map + "'");
  }
  if (c.format == "csv") {
    write_csv(out, report);
  } else {
    emit_json(out, to_json(report));
  }
  return report.ok() ? kOk : kViolations;
}

int cmd_bfs(const RunConfig& c, std::ostream& out) {
  if (c.from.empty() || c.to.empty()) throw ConfigError("bfs needs --from and --to");
  const GroupElement u = parse_element(c.from, c.n);
  const GroupElement v = parse_element(c.to, c.n);
  const DistanceMap dist = bfs_distances(u);
  const RhoBounds b = rho_bounds(u, v);
  const IntervalReport ir = interval_report(u, v);
  emit_json(out, ordered_json{
                     {"n", c.n},
                     {"from", to_string(u)},
                     {"to", to_string(v)},
                     {"distance", dist[element_index(v)]},
                     {"rho_bounds",
                      {{"lower", b.lower}, {"upper", b.upper}, {"p1", b.p1}, {"p2", b.p2},
                       {"g1", b.g1}, {"g2", b.g2}}},
                     {"interval",
                      {{"e_vertex_count", ir.e_vertex_count}, {"tau", ir.tau},
                       {"j_contains_zero", ir.j_contains_zero}, {"g_free", ir.g_free}}},
                 });
  return kOk;
}

int cmd_tree_embed(const RunConfig& c, ThreadPool& pool, std::ostream& out) {
  require_pipeline_n(c);
  const WordMetric metric(c.n);
  ordered_json u_set = ordered_json::array();
  for (const HoroPoint& w : tree_subset_U(c.n)) u_set.push_back(describe(w));
  ordered_json embedded = ordered_json::array();
  for (const TreeNode& node : tree_nodes(c.n / 2)) {
    embedded.push_back({{"node", node.to_string()}, {"element", to_string(embed_tree(node, c.n))}});
  }
  const DistortionReport subset = audit_tree_subset(c.n, &pool);
  const DistortionReport embedding = audit_tree_embedding(metric, &pool);
  emit_json(out, ordered_json{{"n", c.n},
                              {"U", std::move(u_set)},
                              {"embedded", std::move(embedded)},
                              {"tree_subset", to_json(subset)},
                              {"embedding", to_json(embedding)},
                              {"distortion", embedding.distortion ? to_string(*embedding.distortion)
                                                                   : std::string()}});
  return subset.ok() && embedding.ok() ? kOk : kViolations;
}

int cmd_export_cayley(const RunConfig& c, std::ostream& out) {
  validate_modulus(c.n);
  for (const GroupElement& g : enumerate_group(c.n)) {
    const std::uint64_t gi = element_index(g);
    for (const GroupElement& h : neighbors(g)) {
      if (element_index(h) > gi) out << to_string(g) << ' ' << to_string(h) << '\n';
    }
  }
  return kOk;
}

int cmd_baseline(const RunConfig& c, ThreadPool& pool, std::ostream& out) {
  require_pipeline_n(c);
  emit_json(out, to_json(compute_baseline(c.n, &pool)));
  return kOk;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.n < 2) throw ConfigError("--n must be at least 2");
  if (c.format != "json" && c.format != "csv") throw ConfigError("--format must be json or csv");
  ThreadPool pool(c.threads);
  if (c.command == "verify") return cmd_verify(c, pool, out);
  if (c.command == "embed") return cmd_embed(c, pool, out);
  if (c.command == "audit") return cmd_audit(c, pool, out);
  if (c.command == "bfs") return cmd_bfs(c, out);
  if (c.command == "tree-embed") return cmd_tree_embed(c, pool, out);
  if (c.command == "export-cayley") return cmd_export_cayley(c, out);
  if (c.command == "baseline") return cmd_baseline(c, pool, out);
  throw ConfigError("unknown command " + c.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Word metrics and tree embeddings of finite lamplighter groups", "lampctl"};
  app.set_config("--config", "", "TOML/INI file with default flag values");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", c.n, "Cycle length n of the group Z2 wr Zn");
  app.add_option("--seed", c.seed, "Seed for sampled audits");
  app.add_option("--sample", c.sample, "Number of sampled pairs (0 audits every pair)");
  app.add_option("--threads", c.threads, "Worker threads (0 uses every core)");
  app.add_option("--out", c.out_path, "Write the report to this file");
  app.add_option("--format", c.format, "json or csv");
  app.add_option("--map", c.map, "phi1, phi2, phi3, phibar1, Phi or treeU");
  app.add_option("--from", c.from, "Source element as hexmask:pos");
  app.add_option("--to", c.to, "Target element as hexmask:pos");
  app.add_option("--prune-radius", c.prune_radius,
                 "Constrain extension steps only by points this close");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"verify", "Run the full inequality catalogue"},
      {"embed", "Print the product-map images of group elements"},
      {"audit", "Lipschitz audit of one named map"},
      {"bfs", "Exact distance and its interval bounds"},
      {"tree-embed", "Tree subset and embedded tree distortion"},
      {"export-cayley", "Cayley graph edge list"},
      {"baseline", "Exhaustive reference distortions"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&c, name = name] { c.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (c.out_path.empty()) return dispatch(c, out);
    std::ofstream file(c.out_path);
    if (!file) throw ConfigError("cannot open " + c.out_path);
    const int code = dispatch(c, file);
    file.close();
    if (!file) throw std::runtime_error("failed writing " + c.out_path);
    return code;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidModulus& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kViolations;
  }
}

}  // namespace lampctl
