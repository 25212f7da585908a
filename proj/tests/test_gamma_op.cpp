#include <gtest/gtest.h>

#include <random>

#include <gammaspace/gamma_op.hpp>

namespace gs {
namespace {

// Brute force: every inert map n -> k that is order preserving on its
// support, and every active k -> m, with a o i = f.
int factorizations(const GammaMorphism& f, GammaMorphism* found_inert, GammaMorphism* found_active) {
  int count = 0;
  for (int k = 0; k <= f.src; ++k)
    for (const auto& i : enumerate_homs(f.src, k)) {
      if (!i.is_inert()) continue;
      int last = 0;
      bool monotone = true;
      for (int v : i.map)
        if (v != 0) {
          monotone = monotone && v > last;
          last = v;
        }
      if (!monotone) continue;
      for (const auto& a : enumerate_homs(k, f.dst)) {
        if (!a.is_active()) continue;
        if (compose(a, i) == f) {
          ++count;
          *found_inert = i;
          *found_active = a;
        }
      }
    }
  return count;
}

TEST(GammaOp, ExhaustiveFactorizationUpToLevelThree) {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : enumerate_homs(n, m)) {
        GammaMorphism i, a;
        ASSERT_EQ(factorizations(f, &i, &a), 1) << f.name();
        const InertActive ia = factor_inert_active(f);
        EXPECT_EQ(ia.inert, i) << f.name();
        EXPECT_EQ(ia.active, a) << f.name();
        EXPECT_EQ(ia.support, f.support());
      }
}

TEST(GammaOp, FactorizationExample) {
  // 3+ -> 2+ with 1 -> 0, 2 -> 1, 3 -> 2.
  const GammaMorphism f = GammaMorphism::make(3, 2, {0, 1, 2});
  EXPECT_EQ(f.support(), (std::vector<int>{2, 3}));
  const InertActive ia = factor_inert_active(f);
  EXPECT_EQ(ia.inert, GammaMorphism::make(3, 2, {0, 1, 2}));
  EXPECT_EQ(ia.active, GammaMorphism::identity(2));
}

TEST(GammaOp, ClassesOfMaps) {
  EXPECT_TRUE(GammaMorphism::identity(3).is_inert());
  EXPECT_TRUE(GammaMorphism::identity(3).is_active());
  EXPECT_TRUE(delta_first(2, 1).is_inert());
  EXPECT_FALSE(delta_first(2, 1).is_active());
  EXPECT_TRUE(GammaMorphism::make(2, 1, {1, 1}).is_active());
  EXPECT_FALSE(GammaMorphism::make(2, 1, {1, 1}).is_inert());
  EXPECT_FALSE(GammaMorphism::zero(2, 1).is_active());
  EXPECT_THROW(GammaMorphism::make(2, 1, {1, 2}), InputError);
}

TEST(GammaOp, EncodeDecodeRoundTrip) {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const auto all = enumerate_homs(n, m);
      ASSERT_EQ(all.size(), hom_count(n, m));
      for (std::size_t k = 0; k < all.size(); ++k) {
        EXPECT_EQ(encode(all[k]), k);
        EXPECT_EQ(decode(n, m, k), all[k]);
      }
    }
}

TEST(GammaOp, CompositionIsAssociative) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int a = rng() % 4, b = rng() % 4, c = rng() % 4, d = rng() % 4;
    const auto f = decode(a, b, rng() % hom_count(a, b));
    const auto g = decode(b, c, rng() % hom_count(b, c));
    const auto h = decode(c, d, rng() % hom_count(c, d));
    EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
    EXPECT_EQ(compose(f, GammaMorphism::identity(a)), f);
  }
}

TEST(GammaOp, SmashIsAFunctor) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int a = 1 + rng() % 3, b = 1 + rng() % 3, c = rng() % 3;
    const int p = 1 + rng() % 2, q = rng() % 3;
    const auto f = decode(a, b, rng() % hom_count(a, b));
    const auto g = decode(b, c, rng() % hom_count(b, c));
    const auto u = decode(p, q, rng() % hom_count(p, q));
    const auto idp = GammaMorphism::identity(p);
    EXPECT_EQ(smash(compose(g, f), compose(GammaMorphism::identity(q), u)), compose(smash(g, u), smash(f, idp)));
  }
  EXPECT_EQ(smash(GammaMorphism::identity(2), GammaMorphism::identity(3)), GammaMorphism::identity(6));
  // (i, j) -> (i - 1) * l + j.
  EXPECT_EQ(smash_index(2, 3, 3), 6);
  EXPECT_EQ(smash_index(0, 3, 3), 0);
}

TEST(GammaOp, ProjectionsAndInclusions) {
  const auto d1 = delta_first(2, 3), d2 = delta_second(2, 3);
  EXPECT_EQ(d1.map, (std::vector<int>{1, 2, 0, 0, 0}));
  EXPECT_EQ(d2.map, (std::vector<int>{0, 0, 1, 2, 3}));
  EXPECT_EQ(compose(d1, include_first(2, 3)), GammaMorphism::identity(2));
  EXPECT_EQ(compose(d2, include_second(2, 3)), GammaMorphism::identity(3));
  EXPECT_EQ(compose(d1, include_second(2, 3)), GammaMorphism::zero(3, 2));
}

TEST(GammaOp, CategoryOnSmallLevels) {
  const FinCat c = gamma_op_category(2);
  EXPECT_EQ(c.object_count(), 3);
  EXPECT_EQ(c.arrow_count(), 23);
  for (int a = 0; a < c.arrow_count(); ++a) EXPECT_EQ(gamma_arrow(c, gamma_of_arrow(c, a)), a);
  EXPECT_THROW(gamma_op_category(5), ResourceError);
}

}  // namespace
}  // namespace gs
