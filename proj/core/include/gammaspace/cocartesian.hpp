#pragma once

#include <cstdint>
#include <vector>

#include <gammaspace/common.hpp>
#include <gammaspace/fincat.hpp>
#include <gammaspace/gamma_checks.hpp>
#include <gammaspace/gamma_space.hpp>
#include <gammaspace/marked.hpp>

namespace gs {

// ---- relative nerves ----

// Functor from a finite category to simplicial sets.
struct RelativeNerveInput {
  FinCat base;
  std::vector<SimpSet> values;  // per object
  std::vector<SimpMap> arrows;  // per arrow
};
// Endpoints, identities and composition of the diagram.
void validate(const RelativeNerveInput& in);

RelativeNerveInput constant_diagram(const FinCat& base, const SimpSet& value);
// n+ -> X(n+) over the full subcategory of Γop on levels <= max_level.
RelativeNerveInput gamma_diagram(const TabulatedGammaSpace& x, int max_level);
// Nerves of categories along functors.
RelativeNerveInput category_diagram(const FinCat& base, const std::vector<FinCat>& cats,
                                    const std::vector<CatFunctor>& functors, int dim_bound);

struct RelativeNerve {
  SimpSet total;
  SimpSet base_nerve;
  SimpMap proj;
  int dim_cap = 0;
  // Per dimension and table id: the chain (arrows; the object when n = 0) and
  // one value simplex per nonempty subset J of [n], indexed by bitmask - 1.
  std::vector<std::vector<std::vector<int>>> chain;
  std::vector<std::vector<std::vector<int>>> sigma;
  std::vector<std::vector<std::vector<int>>> objects;  // n + 1 objects per simplex

  int object(int n, int t, int position) const { return objects[n][t][position]; }
};
// Simplices up to dim_cap, which must not exceed the bounds of the values.
RelativeNerve relative_nerve(const RelativeNerveInput& in, int dim_cap, Budget& budget);

// Sub-simplicial set over the degenerate simplices at an object, and its
// comparison map to the value there.
Sub fiber(const RelativeNerve& rn, int object);
SimpMap fiber_to_value(const RelativeNerve& rn, const Sub& fib, const RelativeNerveInput& in, int object);

// Number of n-simplices by direct enumeration of chains and all compatible
// families, checking every inclusion of subsets.
std::uint64_t relative_nerve_count(const RelativeNerveInput& in, int n, Budget& budget);
// Edges as triples (e, x, h : f(e)(x) -> x').
std::uint64_t relative_nerve_edge_count(const RelativeNerveInput& in);

// ---- coCartesian edges ----

// Lifting against Λ^0[n] ⊂ Δ[n] for 2 <= n <= dim_cap, with the edge 0 -> 1 pinned.
Verdict is_cocartesian_edge(const SimpMap& p, int edge, int dim_cap, Budget& budget);

struct CocartesianResult {
  std::vector<int> edges;  // table ids of detected edges
  Verdict detection;       // range actually searched
  Verdict fibration;       // inner fibration plus coCartesian lifts of base edges
  MarkedSimpSet natural_marking;
};
CocartesianResult cocartesian_edges(const SimpMap& p, int dim_cap, Budget& budget);

// For category-valued diagrams: an edge (e, x, h) should be detected exactly
// when h is invertible. Fails with the first disagreeing edge.
Verdict cocartesian_crosscheck(const RelativeNerve& rn, const RelativeNerveInput& in, const CocartesianResult& r,
                               int word_cap = 16);

// Fibers over Γop levels assembled into a Γ-space, transported along the
// diagram arrows; the comparison then follows the Segal tiers up to max_sum.
struct SmQcatResult {
  Verdict verdict;
  TabulatedGammaSpace fibers;
};
SmQcatResult sm_qcat_check(const RelativeNerve& rn, const RelativeNerveInput& in, SegalTier tier, int max_sum,
                           Budget& budget, int word_cap = 16);

// ---- over the nerve of a base category ----

struct OverObject {
  MarkedSimpSet total;
  SimpMap proj;  // into the base nerve, all of whose edges count as marked
};
OverObject make_over_object(MarkedSimpSet total, SimpMap proj);

// Sharp nerve of the coslice k+/Γop over Γop (levels <= max_level).
OverObject nelg(const FinCat& gop, int k, int dim_bound);
struct Upsilon {
  Coproduct source_set;
  OverObject source;  // nelg(k) ⊔ nelg(l)
  OverObject target;  // nelg(k + l)
  SimpMap map;
};
Upsilon upsilon(const FinCat& gop, int k, int l, int dim_bound);

struct OverHom {
  Exponential exp;     // marked maps Δ[n]^♭ x X -> Y over the base
  MarkedSimpSet plus;
  Sub sharp;
};
OverHom hom_over_base(const OverObject& x, const OverObject& y, Budget& budget);
std::uint64_t count_over_base_maps(const OverObject& x, const OverObject& y, Budget& budget);
// A^♭ x X over the base.
OverObject tensor_over_base(const SimpSet& a, const OverObject& x);
// Pullback of [A^♭, X]^+ along the constant maps of the base; A nonempty.
OverObject cotensor_over_base(const OverObject& x, const SimpSet& a, Budget& budget);
// [nelg(k), X]^+ over Γop.
MarkedSimpSet r_plus_level(const OverObject& x, const FinCat& gop, int k, Budget& budget);

}  // namespace gs
