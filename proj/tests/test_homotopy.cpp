#include <gtest/gtest.h>

#include <gammaspace/homotopy.hpp>

#include "support.hpp"

namespace gs {
namespace {

using testing::isomorphic;

TEST(J, SimplexAndGroupoid) {
  EXPECT_TRUE(isomorphic(j_qcat(standard_simplex(1, 2)).set, discrete(2, 2)));
  const SimpSet ni = nerve(walking_iso(), 3);
  EXPECT_TRUE(j_qcat(ni).inclusion.is_iso());
  const Sub j = j_qcat(nerve(product_category(ordinal_category(1), walking_iso()), 3));
  EXPECT_TRUE(isomorphic(j.set, coproduct(ni, ni).set));
}

TEST(J, Idempotent) {
  for (const SimpSet& x : {standard_simplex(2, 2), nerve(cyclic_group(2), 2), nerve(ordinal_category(1), 3)}) {
    const Sub j = j_qcat(x);
    EXPECT_TRUE(j_qcat(j.set).inclusion.is_iso());
  }
}

TEST(J, FreeMonoidExceedsWordCap) {
  EXPECT_THROW(j_qcat(testing::circle(2), 8), ResourceError);
}

TEST(RestrictedExp, PointExponent) {
  Budget budget = testing::big_budget();
  for (const SimpSet& x : {standard_simplex(1, 2), nerve(walking_iso(), 2)}) {
    const RestrictedExp r = restricted_exp(x, point(2), budget);
    EXPECT_TRUE(isomorphic(r.sub.set, x));
  }
}

TEST(RestrictedExp, SmallerThanHomotopyMappingSpace) {
  // Maps Δ[1] -> Δ[1] landing in J(Δ[1]) are the two constants, while J of
  // the exponential N([2]) keeps all three vertices.
  Budget budget = testing::big_budget();
  const SimpSet i = standard_simplex(1, 2);
  const RestrictedExp r = restricted_exp(i, i, budget);
  const HomotopyMappingSpace h = h_map_space(i, i, budget);
  EXPECT_EQ(r.sub.set.size(0), 2);
  EXPECT_EQ(h.sub.set.size(0), 3);
  // J of the restricted exponential sits inside both.
  const Sub jr = j_qcat(r.sub.set);
  const Sub jr_in_exp{jr.set, jr.inclusion.then(r.sub.inclusion)};
  EXPECT_TRUE(is_contained(jr_in_exp, r.sub));
  EXPECT_TRUE(is_contained(jr_in_exp, h.sub));
}

TEST(HMap, IntoGroupoid) {
  Budget budget = testing::big_budget();
  const HomotopyMappingSpace h = h_map_space(standard_simplex(1, 2), nerve(walking_iso(), 2), budget);
  EXPECT_EQ(h.sub.set.size(0), 4);
  EXPECT_EQ(h.sub.set.cell_count(1), 12);
  const FunctorCategory fc = functor_category(ordinal_category(1), walking_iso(), budget);
  EXPECT_TRUE(isomorphic(h.sub.set, nerve(max_subgroupoid(fc.cat).cat, 2)));
}

TEST(Containment, DetectsMissingSimplices) {
  const SimpSet d = standard_simplex(2, 2);
  const Sub whole{d, SimpMap::identity(d)};
  const Sub bd{boundary(2, 2), boundary_inclusion(2, 2)};
  EXPECT_TRUE(is_contained(bd, whole));
  EXPECT_FALSE(is_contained(whole, bd));
}

}  // namespace
}  // namespace gs
