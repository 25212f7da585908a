#include <gtest/gtest.h>

#include <gammaspace/fincat.hpp>
#include <gammaspace/simpset_ops.hpp>

#include "support.hpp"

namespace gs {
namespace {

using testing::binom;

std::vector<FinCat> small_categories() {
  return {terminal_category(), discrete_category(2), ordinal_category(1), ordinal_category(2),
          walking_iso(),       cyclic_group(2),      cyclic_group(3),     product_category(ordinal_category(1), walking_iso())};
}

int composable_pairs(const FinCat& c) {
  int n = 0;
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int f = 0; f < c.arrow_count(); ++f)
      if (c.arrow(f).dst == c.arrow(g).src) ++n;
  return n;
}

TEST(FinCat, StandardCategoryShapes) {
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(ordinal_category(n).arrow_count(), static_cast<int>(binom(n + 2, 2)));
  EXPECT_EQ(walking_iso().arrow_count(), 4);
  EXPECT_EQ(cyclic_group(3).arrow_count(), 3);
  EXPECT_EQ(product_category(ordinal_category(1), ordinal_category(1)).arrow_count(), 9);
}

TEST(FinCat, InversesAndGroupoids) {
  const FinCat c = ordinal_category(2);
  for (int a = 0; a < c.arrow_count(); ++a) EXPECT_EQ(c.is_iso(a), c.is_identity(a));
  const SubCat g = max_subgroupoid(c);
  EXPECT_EQ(g.cat.object_count(), 3);
  EXPECT_EQ(g.cat.arrow_count(), 3);
  EXPECT_EQ(max_subgroupoid(walking_iso()).cat.arrow_count(), 4);
  // Idempotent.
  Budget budget = testing::big_budget();
  for (const auto& k : small_categories()) {
    const SubCat j = max_subgroupoid(k);
    EXPECT_TRUE(category_iso_check(max_subgroupoid(j.cat).cat, j.cat, budget).verdict.holds());
    EXPECT_TRUE(is_functor(j.cat, k, j.inclusion));
  }
}

TEST(FinCat, MakeCategoryRejectsBadComposition) {
  EXPECT_THROW(make_category({"x"}, {{"1", 0, 0}, {"f", 0, 0}}, {{"x", "1"}}, {{"f", "f", "g"}}), InputError);
  // f o f undefined in a one-object category.
  EXPECT_THROW(make_category({"x"}, {{"1", 0, 0}, {"f", 0, 0}}, {{"x", "1"}}, {}), InputError);
}

TEST(Functors, CountsOnPosets) {
  Budget budget = testing::big_budget();
  int n = 0;
  enumerate_functors(ordinal_category(1), ordinal_category(1), budget, false, [&](const CatFunctor&) {
    ++n;
    return true;
  });
  EXPECT_EQ(n, 3);
  n = 0;
  enumerate_functors(ordinal_category(1), walking_iso(), budget, false, [&](const CatFunctor&) {
    ++n;
    return true;
  });
  EXPECT_EQ(n, 4);
  // Functors Z/2 -> Z/3 are trivial only.
  n = 0;
  enumerate_functors(cyclic_group(2), cyclic_group(3), budget, false, [&](const CatFunctor&) {
    ++n;
    return true;
  });
  EXPECT_EQ(n, 1);
}

TEST(Functors, FunctorCategoryOfPosets) {
  Budget budget = testing::big_budget();
  const FunctorCategory fc = functor_category(ordinal_category(1), ordinal_category(1), budget);
  EXPECT_EQ(fc.cat.object_count(), 3);
  // The poset 00 <= 01 <= 11.
  EXPECT_TRUE(category_iso_check(fc.cat, ordinal_category(2), budget).verdict.holds());
}

TEST(Equivalence, ContractibleGroupoidIsTerminal) {
  Budget budget = testing::big_budget();
  EXPECT_TRUE(equivalence_check(walking_iso(), terminal_category(), budget).verdict.holds());
  EXPECT_FALSE(equivalence_check(discrete_category(2), terminal_category(), budget).verdict.holds());
  EXPECT_FALSE(equivalence_check(ordinal_category(1), walking_iso(), budget).verdict.holds());
  EXPECT_EQ(skeleton(walking_iso()).cat.object_count(), 1);
}

TEST(Slices, CosliceOfOrdinal) {
  Budget budget = testing::big_budget();
  const Slice s = coslice(ordinal_category(2), 0);
  EXPECT_TRUE(category_iso_check(s.cat, ordinal_category(2), budget).verdict.holds());
  const Slice t = coslice(ordinal_category(2), 2);
  EXPECT_EQ(t.cat.object_count(), 1);
  EXPECT_TRUE(is_functor(s.cat, ordinal_category(2), s.projection));
}

TEST(Nerve, SimplexCounts) {
  for (const auto& c : small_categories()) {
    const SimpSet n = nerve(c, 3);
    EXPECT_EQ(n.size(0), c.object_count());
    EXPECT_EQ(n.size(1), c.arrow_count());
    EXPECT_EQ(n.size(2), composable_pairs(c));
    EXPECT_TRUE(simplicial_identities_hold(n));
  }
  EXPECT_TRUE(testing::isomorphic(nerve(ordinal_category(2), 3), standard_simplex(2, 3)));
}

TEST(Nerve, ChainsRoundTrip) {
  const FinCat c = cyclic_group(3);
  const SimpSet n = nerve(c, 3);
  for (int k = 1; k <= 3; ++k)
    for (int x = 0; x < n.size(k); ++x) EXPECT_EQ(static_cast<int>(nerve_chain(c, n, k, x).size()), k);
}

TEST(Tau1, InvertsNerve) {
  Budget budget = testing::big_budget();
  for (const auto& c : small_categories()) {
    const Tau1 t = tau1(nerve(c, 3));
    EXPECT_TRUE(category_iso_check(t.cat, c, budget).verdict.holds()) << c.arrow_count();
  }
}

TEST(Tau1, SimplicesAndSpines) {
  Budget budget = testing::big_budget();
  for (int n = 0; n <= 3; ++n) {
    const Tau1 t = tau1(standard_simplex(n, 3));
    EXPECT_TRUE(category_iso_check(t.cat, ordinal_category(n), budget).verdict.holds());
  }
  const Tau1 free = tau1(testing::spine2(2));
  EXPECT_EQ(free.cat.object_count(), 3);
  EXPECT_EQ(free.cat.arrow_count(), 6);
}

TEST(Tau1, FreeMonoidHitsWordCap) {
  EXPECT_THROW(tau1(testing::circle(2), 8), ResourceError);
}

TEST(Tau1, InterchangesIsomorphicEdges) {
  // Nerve of the interval groupoid: every edge invertible.
  const Tau1 t = tau1(interval_groupoid_nerve(3));
  for (int e = 0; e < interval_groupoid_nerve(3).size(1); ++e) EXPECT_TRUE(t.cat.is_iso(t.arrow_of_edge[e]));
}

}  // namespace
}  // namespace gs
