#include <gtest/gtest.h>

#include <set>

#include <gammaspace/gamma_space.hpp>
#include <gammaspace/suite.hpp>

#include "support.hpp"

namespace gs {
namespace {

using testing::isomorphic;

int points(const SimpSet& s) { return s.cell_count(0); }

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST(Presented, RepresentableCounts) {
  for (int k = 0; k <= 3; ++k)
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(points(evaluate(representable(k, 2), n)), ipow(n + 1, k)) << k << " " << n;
}

TEST(Presented, TensorAndCoproduct) {
  const PresentedGammaSpace x = tensor(1, standard_simplex(1, 2));
  for (int n = 0; n <= 4; ++n) {
    const SimpSet v = evaluate(x, n);
    EXPECT_EQ(v.cell_count(0), 2 * (n + 1));
    EXPECT_EQ(v.cell_count(1), n + 1);
  }
  const PresentedGammaSpace c = coproduct(representable(0, 2), representable(1, 2));
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(points(evaluate(c, n)), n + 2);
}

TEST(Presented, GluedCorpusShapes) {
  for (const auto& x : suite::presented_corpus(2)) {
    if (x.name == "G1vG1")
      for (int n = 0; n <= 4; ++n) EXPECT_EQ(points(evaluate(x.space, n)), 2 * n + 1);
    if (x.name == "cone")
      for (int n = 0; n <= 4; ++n) {
        const SimpSet v = evaluate(x.space, n);
        EXPECT_EQ(v.cell_count(0), n + 2);
        EXPECT_EQ(v.cell_count(1), n + 1);
        EXPECT_EQ(components(v).size(), 1u);
      }
  }
  EXPECT_GE(suite::presented_corpus(2).size(), 10u);
}

TEST(Tabulated, MonoidActsBySums) {
  const TabulatedGammaSpace z = monoid_gamma_space(3, 3, 2);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(points(z.value(n)), ipow(3, n));
  EXPECT_TRUE(check_functoriality(z, 3).holds());
  // The fold 2+ -> 1+ is surjective with fibers of size 3.
  const SimpMap fold = z.act(GammaMorphism::make(2, 1, {1, 1}));
  std::vector<int> fiber(3, 0);
  for (int p = 0; p < 9; ++p) ++fiber[fold(0, p)];
  EXPECT_EQ(fiber, (std::vector<int>{3, 3, 3}));
  // The zero map 1+ -> 0+ sends everything to the one point.
  const SimpMap zero = z.act(GammaMorphism::zero(1, 0));
  EXPECT_EQ(zero(0, 0), zero(0, 2));
}

TEST(Tabulated, GroupNerveLevels) {
  const TabulatedGammaSpace b = group_nerve_gamma_space(2, 2, 2);
  EXPECT_EQ(points(b.value(2)), 1);
  EXPECT_EQ(b.value(2).size(1), 4);
  EXPECT_EQ(b.value(2).size(2), 16);
  EXPECT_TRUE(check_functoriality(b, 2).holds());
}

TEST(Tabulated, ProductCounts) {
  const TabulatedGammaSpace p = levelwise_product(monoid_gamma_space(2, 3, 2), tabulate(representable(1, 2), 3));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(points(p.value(n)), ipow(2, n) * (n + 1));
}

TEST(Tabulated, NaturalityDetectsABadMap) {
  const TabulatedGammaSpace z = monoid_gamma_space(2, 2, 2);
  std::vector<SimpMap> levels;
  for (int n = 0; n <= 2; ++n) levels.push_back(SimpMap::identity(z.value(n)));
  EXPECT_TRUE(check_naturality(GammaSpaceMap{z, z, levels}, 2).holds());
  // Swap the two points at level 1 only.
  const SimpSet& z1 = z.value(1);
  levels[1] = SimpMap(z1, z1, {{z1.table_id(0, 1), z1.table_id(0, 0)}, {}, {}});
  EXPECT_TRUE(check_naturality(GammaSpaceMap{z, z, levels}, 2).fails());
}

TEST(Day, RepresentablesMultiply) {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const PresentedGammaSpace d = day_convolve(representable(a, 2), representable(b, 2));
      for (int n = 0; n <= 3; ++n) EXPECT_TRUE(isomorphic(evaluate(d, n), evaluate(representable(a * b, 2), n)));
    }
}

TEST(Day, CoendOracleOnSmallSpaces) {
  const PresentedGammaSpace x = tensor(1, standard_simplex(1, 2));
  const PresentedGammaSpace y = coproduct(representable(1, 2), representable(2, 2));
  const TabulatedGammaSpace tx = tabulate(x, 1), ty = tabulate(y, 2);
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(isomorphic(coend_oracle(tx, 1, ty, 2, n), evaluate(day_convolve(x, y), n)));
}

TEST(Day, HMapImage) {
  const GammaSpaceMap h = tabulate(h_map(1, 1, 2), 4);
  for (int n = 0; n <= 4; ++n) {
    std::set<int> image;
    for (int p = 0; p < h.levels[n].source().size(0); ++p) image.insert(h.levels[n](0, p));
    // Two copies of n+1 points meeting at the zero map.
    EXPECT_EQ(static_cast<int>(image.size()), 2 * n + 1);
    EXPECT_EQ(points(h.target.value(n)), (n + 1) * (n + 1));
  }
}

TEST(MappingSpace, YonedaOnMonoid) {
  Budget budget = testing::big_budget();
  const TabulatedGammaSpace z = monoid_gamma_space(2, 4, 2);
  for (int n = 0; n <= 4; ++n) {
    const MappingSpace m = mapping_space(representable(n, 2), z, budget);
    EXPECT_EQ(points(m.set), ipow(2, n));
    EXPECT_TRUE(yoneda_map(m, z, n).is_iso());
  }
}

TEST(MappingSpace, CountMatchesMappingSpace) {
  const TabulatedGammaSpace targets[] = {monoid_gamma_space(2, 3, 2), group_nerve_gamma_space(2, 3, 2),
                                         tabulate(tensor(1, standard_simplex(1, 2)), 3)};
  for (const auto& y : targets)
    for (const auto& x : suite::presented_corpus(2)) {
      if (x.space.generation_bound() > 1) continue;
      Budget b1 = testing::big_budget(), b2 = testing::big_budget();
      EXPECT_EQ(count_natural_maps(x.space, y, b1), static_cast<std::uint64_t>(mapping_space(x.space, y, b2).set.size(0)))
          << x.name;
    }
}

TEST(MappingSpace, MonoidEndomorphisms) {
  // Maps of Gamma-spaces Z/2 -> Z/2 are monoid maps: identity and zero.
  // Up to level 1 only the basepoint is constrained.
  Budget budget = testing::big_budget();
  const TabulatedGammaSpace z = monoid_gamma_space(2, 2, 1);
  EXPECT_EQ(points(natural_mapping_space(z, z, 2, false, budget)), 2);
  const TabulatedGammaSpace z3 = monoid_gamma_space(3, 2, 1);
  EXPECT_EQ(points(natural_mapping_space(z3, z3, 1, false, budget)), 9);
}

TEST(InternalHom, PrecomposeSmashBounds) {
  const TabulatedGammaSpace g = tabulate(representable(1, 2), 6);
  EXPECT_EQ(precompose_smash(g, 2).level_bound(), 3);
  EXPECT_EQ(precompose_smash(g, 4).level_bound(), 1);
  EXPECT_EQ(precompose_smash(g, 0).level_bound(), 6);
  const TabulatedGammaSpace p = precompose_smash(g, 3);
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(points(p.value(k)), 3 * k + 1);
}

TEST(InternalHom, RepresentableComparison) {
  Budget budget = testing::big_budget();
  const TabulatedGammaSpace z = monoid_gamma_space(2, 6, 2);
  for (int n = 1; n <= 3; ++n) {
    const InternalHom h = internal_hom(representable(n, 2), z, budget);
    EXPECT_EQ(h.space.level_bound(), 6 / n);
    const GammaSpaceMap c = internal_hom_comparison(h, z, n);
    EXPECT_TRUE(levelwise_iso(c));
    EXPECT_TRUE(check_naturality(c, std::min(2, h.space.level_bound())).holds());
  }
}

TEST(InternalHom, TooSmallTargetIsAResourceError) {
  Budget budget = testing::big_budget();
  EXPECT_THROW(mapping_space(representable(3, 2), monoid_gamma_space(2, 2, 2), budget), ResourceError);
}

}  // namespace
}  // namespace gs
