#include <gtest/gtest.h>

#include <random>

#include <gammaspace/fincat.hpp>
#include <gammaspace/simpset.hpp>
#include <gammaspace/simpset_ops.hpp>

#include "support.hpp"

namespace gs {
namespace {

using testing::binom;
using testing::isomorphic;

TEST(StandardSimplex, CellAndTableCounts) {
  for (int n = 0; n <= 3; ++n) {
    const SimpSet d = standard_simplex(n, 4);
    for (int k = 0; k <= 4; ++k) {
      EXPECT_EQ(d.cell_count(k), static_cast<int>(binom(n + 1, k + 1))) << n << " " << k;
      // Monotone maps [k] -> [n].
      EXPECT_EQ(d.size(k), static_cast<int>(binom(n + k + 1, k + 1))) << n << " " << k;
    }
    EXPECT_TRUE(simplicial_identities_hold(d));
  }
}

TEST(StandardSimplex, BoundaryAndHornCounts) {
  const SimpSet b = boundary(3, 3);
  EXPECT_EQ(b.cell_count(2), 4);
  EXPECT_EQ(b.cell_count(3), 0);
  const SimpSet h = horn(3, 1, 3);
  EXPECT_EQ(h.cell_count(2), 3);
  EXPECT_EQ(h.cell_count(1), 6);
  EXPECT_TRUE(horn_inclusion(3, 1, 3).is_mono());
  EXPECT_FALSE(horn_inclusion(3, 1, 3).is_surjective());
}

TEST(StandardSimplex, VertexSequences) {
  const SimpSet d = standard_simplex(3, 3);
  for (int k = 0; k <= 3; ++k)
    for (int x = 0; x < d.size(k); ++x) {
      const auto v = simplex_vertices(d, k, x);
      ASSERT_EQ(static_cast<int>(v.size()), k + 1);
      EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
      EXPECT_EQ(simplex_from_vertices(d, v), x);
    }
}

TEST(SimpSet, DegenerateFacesObeyIdentities) {
  const SimpSet d = standard_simplex(2, 4);
  for (int n = 0; n < 4; ++n)
    for (int x = 0; x < d.size(n); ++x)
      for (int j = 0; j <= n; ++j) {
        const int s = d.degen(n, x, j);
        EXPECT_EQ(d.face(n + 1, s, j), x);
        EXPECT_EQ(d.face(n + 1, s, j + 1), x);
        EXPECT_LT(d.cell_of(n + 1, s), 0);
      }
}

TEST(SimpSet, CoskeletalReadAboveBound) {
  // Δ[2] truncated at 2 has as many 3-simplices as monotone maps [3] -> [2].
  const SimpSet d = standard_simplex(2, 2);
  EXPECT_EQ(d.dim_bound(), 2);
  EXPECT_EQ(d.size(2), static_cast<int>(binom(5, 3)));
}

TEST(Product, SquareCounts) {
  const SimpSet i = standard_simplex(1, 3);
  const Product p = product(i, i);
  EXPECT_EQ(p.set.cell_count(0), 4);
  EXPECT_EQ(p.set.cell_count(1), 5);
  EXPECT_EQ(p.set.cell_count(2), 2);
  EXPECT_EQ(p.set.cell_count(3), 0);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(p.set.size(m), (m + 2) * (m + 2));
}

TEST(Product, PrismCounts) {
  // Δ[2] x Δ[1]: three nondegenerate 3-simplices.
  const Product p = product(standard_simplex(2, 3), standard_simplex(1, 3));
  EXPECT_EQ(p.set.cell_count(3), 3);
  EXPECT_EQ(p.set.cell_count(0), 6);
}

TEST(Coproduct, CountsAdd) {
  const Coproduct c = coproduct(standard_simplex(2, 2), standard_simplex(1, 2));
  EXPECT_EQ(c.set.cell_count(0), 5);
  EXPECT_EQ(c.set.cell_count(1), 4);
  EXPECT_TRUE(c.inl.is_mono());
  EXPECT_TRUE(c.inr.is_mono());
}

TEST(Pushout, GluingTwoEdgesAlongAVertex) {
  const SimpSet pt = point(2);
  const SimpSet i = standard_simplex(1, 2);
  // End of the first edge to start of the second.
  const SimpMap end(pt, i, {{i.table_id(0, 1)}, {}, {}});
  const SimpMap start(pt, i, {{i.table_id(0, 0)}, {}, {}});
  const Pushout po = pushout(end, start);
  EXPECT_EQ(po.set.cell_count(0), 3);
  EXPECT_EQ(po.set.cell_count(1), 2);
  EXPECT_TRUE(isomorphic(po.set, testing::spine2(2)));
}

TEST(Pushout, CollapseBoundaryGivesSphere) {
  const Pushout c = collapse(boundary_inclusion(2, 2));
  EXPECT_EQ(c.set.cell_count(0), 1);
  EXPECT_EQ(c.set.cell_count(1), 0);
  EXPECT_EQ(c.set.cell_count(2), 1);
  EXPECT_TRUE(c.set.basepoint().has_value());
}

TEST(Pointed, SmashUnitAndZero) {
  const SimpSet x = add_basepoint(standard_simplex(1, 2));
  EXPECT_TRUE(isomorphic(smash(x, sphere0(2)), x));
  const SimpSet pt = point(2).with_basepoint(0);
  EXPECT_TRUE(isomorphic(smash(x, pt), pt));
}

TEST(Pointed, WedgeOfCircles) {
  const SimpSet c = testing::circle(2).with_basepoint(0);
  const Pushout w = wedge(c, c);
  EXPECT_EQ(w.set.cell_count(0), 1);
  EXPECT_EQ(w.set.cell_count(1), 2);
}

TEST(Homs, CountsMatchTableSizes) {
  Budget budget = testing::big_budget();
  const SimpSet d2 = standard_simplex(2, 3);
  for (int n = 0; n <= 2; ++n)
    EXPECT_EQ(count_homs(standard_simplex(n, 3), d2, budget), static_cast<std::uint64_t>(d2.size(n)));
  // Maps from the spine to X are composable pairs of edges.
  const SimpSet spine = testing::spine2(3);
  std::uint64_t pairs = 0;
  for (int a = 0; a < d2.size(1); ++a)
    for (int b = 0; b < d2.size(1); ++b)
      if (d2.face(1, a, 0) == d2.face(1, b, 1)) ++pairs;
  EXPECT_EQ(count_homs(spine, d2, budget), pairs);
}

TEST(Exponential, PowerOfPointIsIdentity) {
  Budget budget = testing::big_budget();
  const SimpSet x = standard_simplex(2, 2);
  const Exponential e = exponential(x, point(2), budget);
  EXPECT_TRUE(isomorphic(e.set, x));
}

TEST(Exponential, VerticesAreMaps) {
  Budget budget = testing::big_budget();
  const SimpSet x = standard_simplex(2, 2);
  const SimpSet a = standard_simplex(1, 2);
  const Exponential e = exponential(x, a, budget);
  EXPECT_EQ(static_cast<std::uint64_t>(e.set.size(0)), count_homs(a, x, budget));
  // Edges of X^A are maps Δ[1] x Δ[1] -> X.
  const Product sq = product(standard_simplex(1, 2), a);
  EXPECT_EQ(static_cast<std::uint64_t>(e.set.size(1)), count_homs(sq.set, x, budget));
}

TEST(Lifting, QuasicategoryChecks) {
  Budget budget = testing::big_budget();
  EXPECT_TRUE(is_quasicategory_up_to(standard_simplex(2, 3), 3, budget).holds());
  EXPECT_FALSE(is_quasicategory_up_to(testing::spine2(3), 3, budget).holds());
  EXPECT_TRUE(is_quasicategory_up_to(nerve(walking_iso(), 3), 3, budget).holds());
  // The circle with one edge is not a quasi-category: e o e has no filler.
  EXPECT_FALSE(is_quasicategory_up_to(testing::circle(3), 3, budget).holds());
}

TEST(Lifting, KanComplexesLiftAgainstBoundaries) {
  Budget budget = testing::big_budget();
  const SimpMap to_point = SimpMap(standard_simplex(0, 2), point(2), {{0}, {}, {}});
  EXPECT_TRUE(has_rlp(to_point, boundary_inclusion(1, 2), 2, budget).holds());
  // Δ[1] -> pt fails against ∂Δ[1] ⊂ Δ[1] when the endpoints go 1 -> 0.
  const SimpSet i = standard_simplex(1, 2);
  const SimpMap p(i, point(2), std::vector<std::vector<int>>{{0, 0}, {0}, {}});
  EXPECT_FALSE(has_rlp(p, boundary_inclusion(1, 2), 2, budget).holds());
}

TEST(Iso, DistinguishesNonIsomorphic) {
  EXPECT_TRUE(isomorphic(standard_simplex(1, 2), nerve(ordinal_category(1), 2)));
  EXPECT_FALSE(isomorphic(standard_simplex(1, 2), nerve(walking_iso(), 2)));
  EXPECT_FALSE(isomorphic(testing::spine2(2), standard_simplex(2, 2)));
}

TEST(Components, CountsPieces) {
  const Coproduct c = coproduct(standard_simplex(2, 2), testing::circle(2));
  EXPECT_EQ(components(c.set).size(), 2u);
}

TEST(PushoutProduct, MonosGiveMonos) {
  std::mt19937 rng(7);
  const std::vector<SimpMap> monos = {
      boundary_inclusion(1, 3), boundary_inclusion(2, 3), horn_inclusion(2, 0, 3), horn_inclusion(2, 1, 3),
      horn_inclusion(2, 2, 3), SimpMap(empty_set(3), point(3), std::vector<std::vector<int>>(4)),
  };
  int cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& f = monos[rng() % monos.size()];
    const auto& g = monos[rng() % monos.size()];
    const SimpMap pp = pushout_product(f, g);
    EXPECT_TRUE(pp.is_mono()) << trial;
    ++cases;
  }
  EXPECT_GE(cases, 50);
}

TEST(PushoutProduct, BoundaryTimesBoundaryFillsTheSquareBoundary) {
  // ∂Δ[1] □ ∂Δ[1]: source is the boundary of the square (4 vertices, 4 edges).
  const SimpMap pp = pushout_product(boundary_inclusion(1, 2), boundary_inclusion(1, 2));
  EXPECT_EQ(pp.source().cell_count(0), 4);
  EXPECT_EQ(pp.source().cell_count(1), 4);
  EXPECT_EQ(pp.target().cell_count(1), 5);
}

TEST(Subcomplex, SkeletonOfSimplex) {
  const SimpSet d = standard_simplex(2, 2);
  const Sub sk = subcomplex(d, [&d](int n, int x) { return d.base_dim(n, x) <= 1; });
  EXPECT_TRUE(isomorphic(sk.set, boundary(2, 2)));
  EXPECT_TRUE(sk.inclusion.is_mono());
}

}  // namespace
}  // namespace gs
