#include <gtest/gtest.h>

#include "lamplighter/verify.hpp"

using namespace lamplighter;

namespace {

const VerifyReport& report6() {
  static const VerifyReport r = verify_inequalities(6, VerifyOptions{});
  return r;
}

const DistortionReport& rule(const char* id) {
  const DistortionReport* r = report6().find(id);
  if (r == nullptr) throw std::runtime_error(std::string("missing rule ") + id);
  return *r;
}

}  // namespace

TEST(Verify, ExhaustiveSixHasNoViolations) {
  for (const auto& r : report6().rules) EXPECT_TRUE(r.ok()) << r.rule_id;
  EXPECT_TRUE(report6().ok());
  EXPECT_EQ(report6().mode, "exhaustive");
}

TEST(Verify, CatalogueIsComplete) {
  for (const char* id :
       {"group_identity_inverse", "group_associativity", "cayley_symmetry", "rotation_automorphism",
        "rho_sandwich", "tau_lower", "left_invariance", "covering", "phi_bijectivity",
        "rotation_isometry", "step1_upper", "step1_upper_gap", "step1_upper_dinf",
        "step1_lower_j_excludes_zero", "step1_lower_j_contains_zero", "observation_e_count",
        "dw_identity", "diameter_w", "phi1_quarter_colipschitz", "phi1_distortion",
        "phi2_distortion", "phi3_distortion", "tree_l1_isometry", "tree_subset_bounds",
        "tree_embedding", "phibar_restriction", "phibar1_lipschitz", "phibar2_lipschitz",
        "phibar3_lipschitz", "phi_product"}) {
    EXPECT_NE(report6().find(id), nullptr) << id;
  }
}

TEST(Verify, PairCounts) {
  EXPECT_EQ(rule("rho_sandwich").pairs_tested, 384U * 383U / 2);
  EXPECT_EQ(rule("step1_upper").pairs_tested, 320U * 319U / 2);
  EXPECT_EQ(rule("step1_lower_j_excludes_zero").pairs_tested +
                rule("step1_lower_j_contains_zero").pairs_tested,
            320U * 319U / 2);
  EXPECT_GT(rule("step1_lower_j_excludes_zero").pairs_tested, 0U);
  EXPECT_GT(rule("step1_lower_j_contains_zero").pairs_tested, 0U);
  EXPECT_EQ(rule("phi_product").pairs_tested, 384U * 383U / 2);
}

TEST(Verify, PhiConstantsAndEnvelope) {
  const auto& p1 = rule("phi1_distortion");
  EXPECT_EQ(report6().lip_constant, p1.lip);
  EXPECT_LE(*p1.distortion, kPhiEnvelope);
  EXPECT_EQ(*rule("phi2_distortion").distortion, *p1.distortion);
  EXPECT_EQ(*rule("phi3_distortion").distortion, *p1.distortion);
  EXPECT_LE(*rule("phibar1_lipschitz").lip, *p1.lip);
  EXPECT_GE(*rule("phi_product").colip, Rational(1, 4));
}

TEST(Verify, SampledModeIsReproducible) {
  VerifyOptions o;
  o.mode = AuditMode::sampled(2000, 5);
  o.include_phi = false;
  const VerifyReport a = verify_inequalities(6, o);
  const VerifyReport b = verify_inequalities(6, o);
  ASSERT_EQ(a.rules.size(), b.rules.size());
  for (std::size_t k = 0; k < a.rules.size(); ++k) {
    EXPECT_EQ(a.rules[k].rule_id, b.rules[k].rule_id);
    EXPECT_EQ(a.rules[k].pairs_tested, b.rules[k].pairs_tested);
    EXPECT_EQ(a.rules[k].lip, b.rules[k].lip);
    EXPECT_EQ(a.rules[k].witness_max, b.rules[k].witness_max);
  }
  EXPECT_EQ(a.find("phibar1_lipschitz"), nullptr);
  EXPECT_EQ(a.find("rho_sandwich")->pairs_tested, 2000U);
}

TEST(Verify, Errors) {
  EXPECT_THROW(verify_inequalities(8, VerifyOptions{}), InvalidModulus);
  VerifyOptions tight;
  tight.max_exhaustive_pairs = 1000;
  EXPECT_THROW(verify_inequalities(6, tight), BudgetExceeded);
  VerifyOptions small_budget;
  small_budget.budget.max_elements = 100;
  EXPECT_THROW(verify_inequalities(6, small_budget), BudgetExceeded);
}

TEST(Verify, TreeSubsetAndEmbedding) {
  for (int n : {6, 12}) {
    const auto r = audit_tree_subset(n);
    EXPECT_TRUE(r.ok());
    EXPECT_GE(*r.colip, Rational(1));
    EXPECT_LE(*r.lip, Rational(2));
  }
  const auto e = audit_tree_embedding(WordMetric(6));
  EXPECT_TRUE(e.ok());
  EXPECT_EQ(e.pairs_tested, 15U * 14U / 2);
}
