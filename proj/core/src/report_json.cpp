#include "lamplighter/report_json.hpp"

#include <ostream>

namespace lamplighter {
namespace {

using nlohmann::ordered_json;

ordered_json opt_rational(const std::optional<Rational>& r) {
  return r ? ordered_json(to_string(*r)) : ordered_json(nullptr);
}

ordered_json opt_pair(const std::optional<std::pair<std::string, std::string>>& p) {
  return p ? ordered_json::array({p->first, p->second}) : ordered_json(nullptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_text(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }

std::string pair_text(const std::optional<std::pair<std::string, std::string>>& p) {
  return p ? p->first + " " + p->second : "";
}

void csv_header(std::ostream& out) {
  out << "n,rule_id,mode,pairs_tested,violation_count,lip,colip,distortion,witness_max,"
         "witness_min,seed,elapsed_ms\n";
}

void csv_row(std::ostream& out, const DistortionReport& r) {
  out << r.n << ',' << csv_field(r.rule_id) << ',' << r.mode << ',' << r.pairs_tested << ','
      << r.violation_count << ',' << opt_text(r.lip) << ',' << opt_text(r.colip) << ','
      << opt_text(r.distortion) << ',' << csv_field(pair_text(r.witness_max)) << ','
      << csv_field(pair_text(r.witness_min)) << ',' << r.seed << ',' << r.elapsed_ms << '\n';
}

}  // namespace

ordered_json to_json(const DistortionReport& r) {
  ordered_json violations = ordered_json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"rule_id", v.rule_id}, {"pair", {v.u, v.v}}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  return {{"n", r.n},
          {"rule_id", r.rule_id},
          {"mode", r.mode},
          {"pairs_tested", r.pairs_tested},
          {"violation_count", r.violation_count},
          {"violations", std::move(violations)},
          {"lip", opt_rational(r.lip)},
          {"colip", opt_rational(r.colip)},
          {"distortion", opt_rational(r.distortion)},
          {"witness_max", opt_pair(r.witness_max)},
          {"witness_min", opt_pair(r.witness_min)},
          {"seed", r.seed},
          {"elapsed_ms", r.elapsed_ms}};
}

ordered_json to_json(const VerifyReport& r) {
  ordered_json rules = ordered_json::array();
  std::uint64_t total = 0;
  for (const auto& rule : r.rules) {
    rules.push_back(to_json(rule));
    total += rule.violation_count;
  }
  return {{"n", r.n},
          {"mode", r.mode},
          {"seed", r.seed},
          {"sample", r.sample},
          {"lip_constant", opt_rational(r.lip_constant)},
          {"violation_count", total},
          {"ok", r.ok()},
          {"rules", std::move(rules)},
          {"elapsed_ms", r.elapsed_ms}};
}

ordered_json to_json(const Baseline& b) {
  return {{"n", b.n},
          {"phi1_lip", to_string(b.phi1_lip)},
          {"phi1_colip", to_string(b.phi1_colip)},
          {"phi1_distortion", to_string(b.phi1_distortion)},
          {"tree_distortion", to_string(b.tree_distortion)},
          {"phi_lip", to_string(b.phi_lip)},
          {"phi_colip", to_string(b.phi_colip)},
          {"phi_distortion", to_string(b.phi_distortion)}};
}

Baseline baseline_from_json(const nlohmann::json& j) {
  auto q = [&](const char* key) { return parse_rational(j.at(key).get<std::string>()); };
  Baseline b;
  b.n = j.at("n").get<int>();
  b.phi1_lip = q("phi1_lip");
  b.phi1_colip = q("phi1_colip");
  b.phi1_distortion = q("phi1_distortion");
  b.tree_distortion = q("tree_distortion");
  b.phi_lip = q("phi_lip");
  b.phi_colip = q("phi_colip");
  b.phi_distortion = q("phi_distortion");
  return b;
}

void write_csv(std::ostream& out, const VerifyReport& report) {
  csv_header(out);
  for (const auto& r : report.rules) csv_row(out, r);
}

void write_csv(std::ostream& out, const DistortionReport& report) {
  csv_header(out);
  csv_row(out, report);
}

}  // namespace lamplighter
