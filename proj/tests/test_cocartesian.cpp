#include <gtest/gtest.h>

#include <gammaspace/cocartesian.hpp>
#include <gammaspace/gamma_op.hpp>
#include <gammaspace/suite.hpp>

#include "support.hpp"

namespace gs {
namespace {

using testing::isomorphic;

const suite::NamedDiagram& diagram(const std::vector<suite::NamedDiagram>& all, const std::string& name) {
  for (const auto& d : all)
    if (d.name == name) return d;
  throw std::runtime_error("no diagram " + name);
}

TEST(RelativeNerve, ValidateRejectsBrokenDiagrams) {
  RelativeNerveInput in = constant_diagram(ordinal_category(1), standard_simplex(1, 2));
  EXPECT_NO_THROW(validate(in));
  // An arrow whose source is not the value at its source object.
  RelativeNerveInput wrong = in;
  wrong.arrows[1] = SimpMap::identity(point(2));
  EXPECT_THROW(validate(wrong), InputError);
  RelativeNerveInput short_values = in;
  short_values.values.pop_back();
  EXPECT_THROW(validate(short_values), InputError);
}

TEST(RelativeNerve, ConstantPointIsTheNerve) {
  Budget budget = testing::big_budget();
  for (const FinCat& c : {ordinal_category(2), walking_iso(), cyclic_group(2)}) {
    const RelativeNerve rn = relative_nerve(constant_diagram(c, point(3)), 3, budget);
    EXPECT_TRUE(isomorphic(rn.total, nerve(c, 3)));
  }
}

TEST(RelativeNerve, ConstantDiagramIsAProduct) {
  Budget budget = testing::big_budget();
  const RelativeNerveInput in = constant_diagram(ordinal_category(1), standard_simplex(1, 2));
  const RelativeNerve rn = relative_nerve(in, 2, budget);
  for (int n = 0; n <= 2; ++n) {
    EXPECT_EQ(rn.total.size(n), (n + 2) * (n + 2));
    Budget b = testing::big_budget();
    EXPECT_EQ(relative_nerve_count(in, n, b), static_cast<std::uint64_t>((n + 2) * (n + 2)));
  }
  EXPECT_TRUE(isomorphic(rn.total, product(nerve(ordinal_category(1), 2), standard_simplex(1, 2)).set));
}

TEST(RelativeNerve, FibersAndEdges) {
  const auto all = suite::diagram_corpus();
  for (const auto& d : all) {
    Budget budget = testing::big_budget();
    const RelativeNerve rn = relative_nerve(d.input, d.dim_cap, budget);
    for (int o = 0; o < d.input.base.object_count(); ++o)
      EXPECT_TRUE(fiber_to_value(rn, fiber(rn, o), d.input, o).is_iso()) << d.name << " " << o;
    EXPECT_EQ(relative_nerve_edge_count(d.input), static_cast<std::uint64_t>(rn.total.size(1))) << d.name;
  }
}

TEST(Cocartesian, EdgesOverAFunctorToTheGroupoid) {
  const auto all = suite::diagram_corpus();
  const auto& d = diagram(all, "[1] -> I");
  Budget budget = testing::big_budget();
  const RelativeNerve rn = relative_nerve(d.input, 3, budget);
  // Three edges over each object's identity in N([1]), four in N(I), four over the arrow.
  EXPECT_EQ(rn.total.size(1), 11);
  const CocartesianResult r = cocartesian_edges(rn.proj, 3, budget);
  EXPECT_TRUE(r.detection.holds());
  // Only the non-identity arrow of [1] is not invertible.
  EXPECT_EQ(r.edges.size(), 10u);
  EXPECT_TRUE(cocartesian_crosscheck(rn, d.input, r).holds());
  EXPECT_TRUE(r.fibration.holds());
}

TEST(Cocartesian, GroupActionHasOnlyCocartesianEdges) {
  const auto all = suite::diagram_corpus();
  const auto& d = diagram(all, "Z/2 swaps two points");
  Budget budget = testing::big_budget();
  const RelativeNerve rn = relative_nerve(d.input, 3, budget);
  const CocartesianResult r = cocartesian_edges(rn.proj, 3, budget);
  EXPECT_EQ(static_cast<int>(r.edges.size()), rn.total.size(1));
}

TEST(Cocartesian, DegenerateEdgesAreCocartesian) {
  Budget budget = testing::big_budget();
  const SimpSet d = standard_simplex(2, 3);
  const SimpMap p = SimpMap::identity(d);
  for (int v = 0; v < 3; ++v) EXPECT_TRUE(is_cocartesian_edge(p, d.degen(0, d.table_id(0, v), 0), 3, budget).holds());
}

TEST(SmQcat, MonoidHoldsRepresentableFails) {
  const TabulatedGammaSpace z = monoid_gamma_space(2, 3, 1);
  const TabulatedGammaSpace g = tabulate(representable(1, 1), 3);
  for (const auto* x : {&z, &g}) {
    const RelativeNerveInput in = gamma_diagram(*x, 3);
    Budget budget = testing::big_budget();
    const RelativeNerve rn = relative_nerve(in, 1, budget);
    const SmQcatResult r = sm_qcat_check(rn, in, SegalTier::iso, 3, budget);
    EXPECT_EQ(r.verdict.holds(), x == &z);
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(isomorphic(r.fibers.value(n), x->value(n)));
  }
}

TEST(OverBase, NelgVertices) {
  // Vertices of the coslice: maps 1+ -> n+ for n up to the bound.
  EXPECT_EQ(nelg(gamma_op_category(1), 1, 2).total.set().size(0), 3);
  EXPECT_EQ(nelg(gamma_op_category(2), 1, 2).total.set().size(0), 6);
  EXPECT_EQ(nelg(gamma_op_category(2), 0, 2).total.set().size(0), 3);
  const OverObject x = nelg(gamma_op_category(2), 1, 2);
  EXPECT_EQ(x.total.nondegenerate_marked_count(), x.total.set().size(1) - x.total.set().size(0));
}

TEST(OverBase, UpsilonCommutesWithProjections) {
  const Upsilon u = upsilon(gamma_op_category(2), 1, 1, 2);
  EXPECT_EQ(u.map.then(u.target.proj), u.source.proj);
}

TEST(OverBase, TensorHomAdjunction) {
  const FinCat gop = gamma_op_category(1);
  const OverObject x = nelg(gop, 1, 2), y = nelg(gop, 0, 2);
  Budget budget = testing::big_budget();
  const OverHom h = hom_over_base(x, y, budget);
  for (const SimpSet& a : {point(2), standard_simplex(1, 2), discrete(2, 2)}) {
    Budget b1 = testing::big_budget(), b2 = testing::big_budget();
    EXPECT_EQ(count_over_base_maps(tensor_over_base(a, x), y, b1), count_homs(a, h.exp.set, b2));
  }
}

TEST(Corpus, FunctorByEndpointsRejectsAmbiguousHoms) {
  EXPECT_NO_THROW(suite::functor_by_endpoints(ordinal_category(1), walking_iso(), {0, 1}));
  EXPECT_THROW(suite::functor_by_endpoints(ordinal_category(1), cyclic_group(2), {0, 0}), InputError);
}

}  // namespace
}  // namespace gs
