#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamplighter/audit.hpp"
#include "lamplighter/extension.hpp"
#include "lamplighter/metric.hpp"
#include "lamplighter/rational.hpp"

namespace lamplighter {

struct VerifyOptions {
  AuditMode mode;
  ThreadPool* pool = nullptr;
  std::optional<int> prune_radius;
  /// Build the extended maps and check the product map rules.
  bool include_phi = true;
  Budget budget;
  /// The Lipschitz constant of phi_1 is always audited over all pairs; this
  /// bounds the work that implies.
  std::uint64_t max_exhaustive_pairs = std::uint64_t{3} << 30;
};

struct VerifyReport {
  int n = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t sample = 0;
  std::optional<Rational> lip_constant;
  std::vector<DistortionReport> rules;
  std::int64_t elapsed_ms = 0;

  bool ok() const;
  const DistortionReport* find(const std::string& rule_id) const;
};

/// Guaranteed distortion envelope for phi_1: rho <= 2 + 2 d_inf together
/// with d_inf <= 6 rho + 12 gives lip / colip <= 72.
inline const Rational kPhiEnvelope{72};

/// Exact Lipschitz data of phi_i on its piece, w.r.t. (rho, d_inf).
DistortionReport audit_phi(int i, const WordMetric& metric, const AuditMode& mode,
                           ThreadPool* pool = nullptr);
/// Restriction of the product map to U's tree: tree_dist against rho.
DistortionReport audit_tree_embedding(const WordMetric& metric, ThreadPool* pool = nullptr);
DistortionReport audit_extended(const ExtendedMap& map, const WordMetric& metric,
                                const AuditMode& mode, ThreadPool* pool = nullptr);
DistortionReport audit_product(const PhiMap& phi, const WordMetric& metric,
                               const AuditMode& mode, ThreadPool* pool = nullptr);
/// (A, B) in U against d_inf on W_n, reported as a map from the tree.
DistortionReport audit_tree_subset(int n, ThreadPool* pool = nullptr);

/// Runs the whole rule catalogue for one n (a multiple of 6).
VerifyReport verify_inequalities(int n, const VerifyOptions& options);

/// Reference distortions frozen from exhaustive runs.
struct Baseline {
  int n = 0;
  Rational phi1_lip;
  Rational phi1_colip;
  Rational phi1_distortion;
  Rational tree_distortion;
  Rational phi_lip;
  Rational phi_colip;
  Rational phi_distortion;

  friend bool operator==(const Baseline&, const Baseline&) = default;
};

Baseline compute_baseline(int n, ThreadPool* pool = nullptr);

}  // namespace lamplighter
