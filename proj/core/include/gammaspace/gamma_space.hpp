#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gammaspace/common.hpp>
#include <gammaspace/gamma_op.hpp>
#include <gammaspace/simpset.hpp>
#include <gammaspace/simpset_ops.hpp>

namespace gs {

// Functor from Γop (levels 0..level_bound) to simplicial sets. Values are
// stored; the action is computed on demand and memoized.
class TabulatedGammaSpace {
 public:
  using Action = std::function<SimpMap(const GammaMorphism&)>;

  TabulatedGammaSpace() = default;
  TabulatedGammaSpace(int level_bound, std::vector<SimpSet> values, Action action);

  int level_bound() const;
  int dim_bound() const;  // smallest bound among the values
  const SimpSet& value(int n) const;
  SimpMap act(const GammaMorphism& f) const;

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

// Checks action(id) = id and action(g o f) = action(g) o action(f) for all
// morphisms between levels <= max_level.
Verdict check_functoriality(const TabulatedGammaSpace& x, int max_level);

TabulatedGammaSpace terminal_gamma_space(int level_bound, int dim_bound = 4);
TabulatedGammaSpace constant_gamma_space(const SimpSet& s, int level_bound);
// n+ -> M^n for M = Z/modulus, discrete; f sends (a_i) to (sum over f(i) = j of a_i)_j.
TabulatedGammaSpace monoid_gamma_space(int modulus, int level_bound, int dim_bound = 4);
// n+ -> nerve of the one-object category on (Z/modulus)^n, action by the same sums.
TabulatedGammaSpace group_nerve_gamma_space(int modulus, int level_bound, int dim_bound = 2);
TabulatedGammaSpace levelwise_product(const TabulatedGammaSpace& x, const TabulatedGammaSpace& y);

struct GammaSpaceMap {
  TabulatedGammaSpace source;
  TabulatedGammaSpace target;
  std::vector<SimpMap> levels;  // 0..min of the level bounds
};
Verdict check_naturality(const GammaSpaceMap& f, int max_level);
GammaSpaceMap compose(const GammaSpaceMap& f, const GammaSpaceMap& g);  // g after f
bool levelwise_iso(const GammaSpaceMap& f);
bool levelwise_mono(const GammaSpaceMap& f);

// ---- presented Γ-spaces ----

// Basic cell Γ^level ⊗ shape.
struct GammaCell {
  int level = 0;
  SimpSet shape;
  std::string name;
};

// Map of basic cells from -> to: precomposition with phi : level(to)+ -> level(from)+
// on the representable part, and shape_map : shape(from) -> shape(to).
struct GammaGlue {
  int from = 0;
  int to = 0;
  GammaMorphism phi;
  SimpMap shape_map;
};

// Colimit of basic cells along glue maps.
class PresentedGammaSpace {
 public:
  PresentedGammaSpace() = default;
  PresentedGammaSpace(std::vector<GammaCell> cells, std::vector<GammaGlue> glue, std::string name = {});

  const std::vector<GammaCell>& cells() const { return cells_; }
  const std::vector<GammaGlue>& glue() const { return glue_; }
  const std::string& name() const { return name_; }
  int generation_bound() const;  // largest cell level
  int dim_bound() const;         // common bound of the shapes

 private:
  std::vector<GammaCell> cells_;
  std::vector<GammaGlue> glue_;
  std::string name_;
};

PresentedGammaSpace representable(int k, int dim_bound = 4);
PresentedGammaSpace tensor(int k, const SimpSet& shape, std::string name = {});
PresentedGammaSpace coproduct(const PresentedGammaSpace& x, const PresentedGammaSpace& y);

SimpSet evaluate(const PresentedGammaSpace& x, int n);
TabulatedGammaSpace tabulate(const PresentedGammaSpace& x, int level_bound);

// Bilinear expansion: (Γ^a ⊗ S) * (Γ^b ⊗ T) = Γ^{ab} ⊗ (S x T).
PresentedGammaSpace day_convolve(const PresentedGammaSpace& x, const PresentedGammaSpace& y);

// Direct coend over levels k <= gen_x, l <= gen_y of Γop(k ∧ l, n) x X(k) x Y(l),
// computed through a generating set of X and Y. Both inputs must be tabulated
// up to their generation bounds.
SimpSet coend_oracle(const TabulatedGammaSpace& x, int gen_x, const TabulatedGammaSpace& y, int gen_y, int n);

// Map of presented spaces sending each source cell into one target cell.
struct CellMap {
  int target_cell = 0;
  GammaMorphism phi;  // level(target cell)+ -> level(source cell)+
  SimpMap shape_map;  // source shape -> target shape
};
struct PresentedMap {
  PresentedGammaSpace source;
  PresentedGammaSpace target;
  std::vector<CellMap> cells;
};
// Tabulated map; checks compatibility with the source glue levelwise.
GammaSpaceMap tabulate(const PresentedMap& f, int level_bound);
// f * id_Y on bilinear expansions.
PresentedMap day_convolve(const PresentedMap& f, const PresentedGammaSpace& y);
PresentedMap day_convolve(const PresentedGammaSpace& x, const PresentedMap& g);

// h_k^l : Γ^k ⊔ Γ^l -> Γ^{k+l} induced by the two projections.
PresentedMap h_map(int k, int l, int dim_bound = 4);

// ---- mapping spaces ----

struct MappingSpace {
  SimpSet set;
  std::vector<Exponential> exps;  // per source cell: Y(level)^shape
  // Per dimension and table id: table id of each component in exps.
  std::vector<std::vector<std::vector<int>>> families;
  std::vector<std::map<std::vector<int>, int>> index;
};

// Map(X, Y)_n = natural maps X ⊗ Δ[n] -> Y, as compatible families over the cells of X.
MappingSpace mapping_space(const PresentedGammaSpace& x, const TabulatedGammaSpace& y, Budget& budget);

// Number of maps X -> Y (the vertices of Map(X, Y)), counted from the maps
// out of each cell shape without building the mapping space.
std::uint64_t count_natural_maps(const PresentedGammaSpace& x, const TabulatedGammaSpace& y, Budget& budget);

// Natural families of maps X(k) x Δ[n] -> Y(k) for k <= max_level, checked
// against every morphism between those levels. With `pointed`, each component
// also sends the image of X(0+) to the image of Y(0+); both spaces must then be
// normalized. `level_filter` restricts the candidate maps at each level.
SimpSet natural_mapping_space(const TabulatedGammaSpace& x, const TabulatedGammaSpace& y, int max_level,
                              bool pointed, Budget& budget,
                              const std::function<ShapeFilter(int)>& level_filter = {});

// Canonical comparison Map(Γ^n, Y) -> Y(n+), evaluating at the generator.
SimpMap yoneda_map(const MappingSpace& m, const TabulatedGammaSpace& y, int n);

// X(n+ ∧ -), with level bound floor(N / n) (N when n = 0).
TabulatedGammaSpace precompose_smash(const TabulatedGammaSpace& x, int n);

// [X, Y](n+) = Map(X * Γ^n, Y); level bound floor(N / generation bound of X).
struct InternalHom {
  TabulatedGammaSpace space;
  std::vector<MappingSpace> levels;
};
InternalHom internal_hom(const PresentedGammaSpace& x, const TabulatedGammaSpace& y, Budget& budget,
                         int max_level = -1);

// For X = Γ^n: the canonical map [Γ^n, Y] -> Y(n+ ∧ -).
GammaSpaceMap internal_hom_comparison(const InternalHom& h, const TabulatedGammaSpace& y, int n);

}  // namespace gs
