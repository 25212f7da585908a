#include <gtest/gtest.h>

#include <gammaspace/gamma_checks.hpp>

#include "support.hpp"

namespace gs {
namespace {

using testing::isomorphic;

TEST(Segal, MonoidPasses) {
  Budget budget = testing::big_budget();
  const TabulatedGammaSpace z = monoid_gamma_space(2, 6, 2);
  EXPECT_TRUE(segal_check(z, 1, 1, SegalTier::iso, budget).holds());
  EXPECT_TRUE(segal_check(z, 2, 3, SegalTier::iso, budget).holds());
  EXPECT_TRUE(segal_sweep(z, 6, SegalTier::iso, budget).holds());
}

TEST(Segal, RepresentableFailsWithCounts) {
  Budget budget = testing::big_budget();
  const Verdict v = segal_check(tabulate(representable(1, 2), 2), 1, 1, SegalTier::iso, budget);
  ASSERT_TRUE(v.fails());
  EXPECT_NE(v.detail.find("3 vs 4"), std::string::npos) << v.detail;
  EXPECT_EQ(v.witness["source_cells"][0], 3);
  EXPECT_EQ(v.witness["target_cells"][0], 4);
}

TEST(Segal, ConstantSpaceFails) {
  Budget budget = testing::big_budget();
  EXPECT_TRUE(segal_check(constant_gamma_space(discrete(2, 2), 3), 1, 1, SegalTier::iso, budget).fails());
}

TEST(Segal, GroupNerveAtBothTiers) {
  Budget budget = testing::big_budget();
  const TabulatedGammaSpace b = group_nerve_gamma_space(2, 3, 2);
  // N(G x H) = N(G) x N(H).
  EXPECT_TRUE(segal_sweep(b, 3, SegalTier::iso, budget).holds());
  EXPECT_TRUE(segal_sweep(b, 3, SegalTier::cat_equiv, budget).holds());
}

TEST(Segal, TierNames) {
  EXPECT_EQ(parse_segal_tier("iso"), SegalTier::iso);
  EXPECT_EQ(parse_segal_tier("cat-equiv"), SegalTier::cat_equiv);
  EXPECT_EQ(parse_segal_tier("ho-necessary"), SegalTier::ho_necessary);
  EXPECT_EQ(to_string(SegalTier::cat_equiv), "cat-equiv");
  EXPECT_THROW(parse_segal_tier("strict"), InputError);
}

TEST(Segal, MapHasProductTarget) {
  const SegalMap s = segal_map(monoid_gamma_space(3, 3, 2), 1, 2);
  EXPECT_EQ(s.map.source().cell_count(0), 27);
  EXPECT_EQ(s.product.set.cell_count(0), 27);
  EXPECT_TRUE(s.map.is_iso());
}

TEST(HomotopyCategory, OfMonoidAndGroupNerve) {
  Budget budget = testing::big_budget();
  EXPECT_TRUE(category_iso_check(homotopy_category(monoid_gamma_space(2, 2, 2)), discrete_category(2), budget).verdict.holds());
  EXPECT_TRUE(category_iso_check(homotopy_category(group_nerve_gamma_space(3, 2, 2)), cyclic_group(3), budget).verdict.holds());
}

TEST(HomotopyCategory, NerveRecognition) {
  const SimpSet n = nerve(ordinal_category(2), 3);
  EXPECT_TRUE(is_nerve_of_tau1(n, tau1(n)));
  const SimpSet s = testing::spine2(3);
  EXPECT_FALSE(is_nerve_of_tau1(s, tau1(s)));
}

TEST(Normalization, UnitalPartIsMono) {
  for (const auto& x : {constant_gamma_space(discrete(2, 2), 3), tabulate(coproduct(representable(0, 2), representable(1, 2)), 3),
                        monoid_gamma_space(2, 3, 2)}) {
    const UnitalPart u = unital_part(x);
    EXPECT_TRUE(levelwise_mono(u.iota));
    EXPECT_TRUE(check_naturality(u.iota, 3).holds());
  }
}

TEST(Normalization, CollapsesTheBase) {
  // (Gamma^0 + Gamma^1)nor = Gamma^1.
  const TabulatedGammaSpace x = tabulate(coproduct(representable(0, 2), representable(1, 2)), 4);
  const TabulatedGammaSpace g = tabulate(representable(1, 2), 4);
  const Normalization nz = normalize(x);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_TRUE(isomorphic(nz.space.value(n), g.value(n)));
    EXPECT_EQ(nz.pushouts[n].inl, nz.eta.levels[n]);
  }
  EXPECT_TRUE(check_functoriality(nz.space, 3).holds());
  // A constant space normalizes to the terminal one.
  const Normalization c = normalize(constant_gamma_space(discrete(2, 2), 3));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(c.space.value(n).cell_count(0), 1);
}

TEST(Normalization, CounitOnNormalizedSpace) {
  const TabulatedGammaSpace z = monoid_gamma_space(2, 4, 2);
  const Normalization nz = normalize(z);
  EXPECT_TRUE(levelwise_iso(nz.eta));
  EXPECT_TRUE(levelwise_iso(normalization_counit(nz, z)));
}

TEST(Normalization, PointedMappingSpaces) {
  Budget budget = testing::big_budget();
  EXPECT_TRUE(normalized_mapping_check(monoid_gamma_space(2, 2, 1), monoid_gamma_space(2, 2, 1), 2, budget).holds());
  EXPECT_TRUE(normalized_mapping_check(tabulate(representable(1, 1), 2), monoid_gamma_space(3, 2, 1), 2, budget).holds());
}

TEST(TrivialFibration, IdentityAndInclusion) {
  Budget budget = testing::big_budget();
  const TabulatedGammaSpace z = monoid_gamma_space(2, 3, 2);
  std::vector<SimpMap> ids;
  for (int n = 0; n <= 3; ++n) ids.push_back(SimpMap::identity(z.value(n)));
  EXPECT_TRUE(trivial_fibration_check(GammaSpaceMap{z, z, ids}, 2, 2, budget).holds());
  const PresentedMap inc{representable(0, 2), representable(1, 2),
                         {CellMap{0, GammaMorphism::zero(1, 0), SimpMap::identity(point(2))}}};
  EXPECT_TRUE(trivial_fibration_check(tabulate(inc, 3), 2, 2, budget).fails());
}

TEST(Semiadditivity, RepresentableIsSemiadditive) {
  Budget budget = testing::big_budget();
  const SemiadditivityReport r = semiadditivity_probe(representable(1, 2), 5, budget);
  EXPECT_TRUE(r.coproduct.holds());
  EXPECT_TRUE(r.product.holds());
  ASSERT_EQ(r.levels.size(), 6u);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(r.levels[n]["x_times_x"][0], (n + 1) * (n + 1));
  EXPECT_TRUE(check_naturality(r.composite, 2).holds());
}

TEST(Semiadditivity, TensorWithIntervalIsNot) {
  Budget budget = testing::big_budget();
  const SemiadditivityReport r = semiadditivity_probe(tensor(1, standard_simplex(1, 2)), 3, budget);
  EXPECT_TRUE(r.coproduct.holds());
  EXPECT_TRUE(r.product.fails());
  EXPECT_EQ(r.to_json()["product_comparison"]["status"], "fails");
}

}  // namespace
}  // namespace gs
