#include <gtest/gtest.h>

#include <gammaspace/marked.hpp>

#include "support.hpp"

namespace gs {
namespace {

TEST(Marking, FlatAndSharp) {
  const SimpSet d = standard_simplex(2, 2);
  const MarkedSimpSet f = flat(d), s = sharp(d);
  EXPECT_EQ(f.nondegenerate_marked_count(), 0);
  EXPECT_EQ(s.nondegenerate_marked_count(), 3);
  // Degenerate edges are always marked.
  EXPECT_EQ(static_cast<int>(f.marked_edges().size()), 3);
  EXPECT_EQ(static_cast<int>(s.marked_edges().size()), d.size(1));
  EXPECT_EQ(d.size(1), 6);
}

TEST(Marking, PreservationAndCounts) {
  Budget budget = testing::big_budget();
  const SimpSet i = standard_simplex(1, 2);
  // Only the constant maps send the marked edge to a degenerate one.
  EXPECT_EQ(count_marked_homs(sharp(i), flat(i), budget), 2u);
  EXPECT_EQ(count_marked_homs(flat(i), flat(i), budget), 3u);
  EXPECT_EQ(count_marked_homs(sharp(i), sharp(nerve(walking_iso(), 2)), budget), 4u);
  EXPECT_TRUE(preserves_marking(SimpMap::identity(i), flat(i), sharp(i)));
  EXPECT_FALSE(preserves_marking(SimpMap::identity(i), sharp(i), flat(i)));
}

TEST(Marking, ProductMarksPairsOfMarkedEdges) {
  const SimpSet i = standard_simplex(1, 2);
  const MarkedProduct p = marked_product(sharp(i), flat(i));
  // Nondegenerate marked edges: (e, degenerate) for the two vertices of the flat factor.
  EXPECT_EQ(p.set.nondegenerate_marked_count(), 2);
  const MarkedProduct q = marked_product(sharp(i), sharp(i));
  EXPECT_EQ(q.set.nondegenerate_marked_count(), 5);
}

TEST(MarkedHom, PlusMarkingOfSharpTarget) {
  Budget budget = testing::big_budget();
  const SimpSet i = standard_simplex(1, 2);
  const MarkedHom h = hom_marked(flat(i), sharp(nerve(walking_iso(), 2)), budget);
  EXPECT_EQ(h.flat().size(0), 4);
  // Every edge of [X, Y] extends over the sharp interval when Y is sharp.
  EXPECT_EQ(static_cast<int>(h.plus.marked_edges().size()), h.flat().size(1));
  EXPECT_TRUE(h.sharp.inclusion.is_iso());
  const MarkedHom g = hom_marked(flat(i), flat(i), budget);
  EXPECT_EQ(g.flat().size(0), 3);
  EXPECT_LT(g.sharp.set.size(1), g.flat().size(1));
}

TEST(MarkedHom, AdjunctionCounts) {
  Budget budget = testing::big_budget();
  const SimpSet i = standard_simplex(1, 2);
  for (const SimpSet& k : {point(2), i, boundary(1, 2)})
    for (const MarkedSimpSet& x : {flat(i), sharp(i)})
      for (const MarkedSimpSet& y : {flat(nerve(walking_iso(), 2)), sharp(i)})
        for (Marking v : {Marking::flat, Marking::sharp}) {
          const AdjunctionCounts c = marked_adjunction_counts(k, x, y, v, budget);
          EXPECT_EQ(c.left, c.right);
        }
}

TEST(MarkedGammaSpace, FlatAndSharpLevels) {
  const TabulatedGammaSpace b = group_nerve_gamma_space(2, 2, 2);
  const MarkedGammaSpace s = gamma_sharp(b);
  const MarkedGammaSpace f = gamma_flat(b);
  EXPECT_EQ(s.value(2).nondegenerate_marked_count(), 3);
  EXPECT_EQ(f.value(2).nondegenerate_marked_count(), 0);
  EXPECT_EQ(s.level_bound(), 2);
}

TEST(MarkedGammaSpace, RejectsMarkingNotPreserved) {
  const TabulatedGammaSpace b = group_nerve_gamma_space(2, 2, 2);
  // Mark the generator at level 1 only; the inclusions carry it to unmarked edges.
  std::vector<std::vector<int>> marked(3);
  marked[1] = {b.value(1).table_id(1, 0)};
  EXPECT_THROW(MarkedGammaSpace(b, marked), InputError);
}

TEST(MarkedGammaSpace, MappingSpaces) {
  Budget budget = testing::big_budget();
  const TabulatedGammaSpace z = monoid_gamma_space(2, 2, 1);
  // Endomorphisms of Z/2: identity and zero.
  EXPECT_EQ(marked_mapping_space(gamma_sharp(z), gamma_sharp(z), 2, budget).size(0), 2);
  const SimpSet flat_maps = marked_mapping_space(gamma_flat(z), gamma_flat(z), 2, budget);
  EXPECT_TRUE(testing::isomorphic(flat_maps, natural_mapping_space(z, z, 2, false, budget)));
}

}  // namespace
}  // namespace gs
