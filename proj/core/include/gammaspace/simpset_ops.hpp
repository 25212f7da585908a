#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gammaspace/common.hpp>
#include <gammaspace/simpset.hpp>

namespace gs {

// ---- products, coproducts, pushouts ----

struct Product {
  SimpSet set;
  SimpMap pr1, pr2;
  std::vector<int> left_size;  // |X_n| per dimension
  std::vector<int> right_size;  // |Y_n| per dimension
  std::vector<std::vector<int>> to_set;

  // Table id of the pair (x, y) of n-simplices.
  int pair(int n, int x, int y) const { return to_set[n][x * right_size[n] + y]; }
};

// Dimensionwise product truncated at `bound` (default: min of the bounds).
Product product(const SimpSet& x, const SimpSet& y, std::optional<int> bound = std::nullopt);
// f x g : A x B -> C x D, given both products.
SimpMap product_map(const Product& src, const Product& tgt, const SimpMap& f, const SimpMap& g);

struct Coproduct {
  SimpSet set;
  SimpMap inl, inr;
};
Coproduct coproduct(const SimpSet& x, const SimpSet& y);

struct Pushout {
  SimpSet set;
  SimpMap inl, inr;
  // For each simplex of `set`: (side, table id) of a representative,
  // side 0 for the left leg, 1 for the right.
  std::vector<std::vector<std::pair<int, int>>> rep;

  // Mediating map out of the pushout for a cocone (u on the left, v on the right).
  SimpMap induced(const SimpMap& u, const SimpMap& v) const;
};

// Pushout of X <-f- A -g-> Y, computed by dimensionwise quotient of X + Y.
Pushout pushout(const SimpMap& f, const SimpMap& g);

// Collapses the image of a monomorphism A -> X to a point; pointed at the collapsed point.
Pushout collapse(const SimpMap& incl);

// Pointed constructions.
SimpSet pointed_product(const SimpSet& x, const SimpSet& y);
Pushout wedge(const SimpSet& x, const SimpSet& y);
SimpSet smash(const SimpSet& x, const SimpSet& y);
SimpSet add_basepoint(const SimpSet& x);  // X_+
SimpSet sphere0(int dim_bound = 4);        // two points, pointed

// Induced map (V x W) +_{U x W} (U x X) -> V x X.
SimpMap pushout_product(const SimpMap& f, const SimpMap& g);

// ---- maps ----

struct HomQuery {
  const SimpSet* source = nullptr;
  const SimpSet* target = nullptr;
  int top = -1;  // highest dimension enumerated; default min of the bounds
  // Required image (target table id) per nondegenerate source cell, or -1.
  std::vector<std::vector<int>> fixed;
  // Extra admissibility test on (dimension, source cell, candidate table id).
  std::function<bool(int, int, int)> filter;
  // Isomorphism mode: nondegenerate cells go injectively to nondegenerate
  // cells with the same color.
  bool injective_cells = false;
  const std::vector<std::vector<std::uint64_t>>* source_colors = nullptr;
  const std::vector<std::vector<std::uint64_t>>* target_colors = nullptr;
};

using CellImages = std::vector<std::vector<int>>;

// Depth-first enumeration of maps; `visit` returns false to stop.
// Maps into a truncated target are read coskeletally: only the source
// skeleton up to the target's bound is enumerated.
void enumerate_homs(const HomQuery& q, Budget& budget, const std::function<bool(const CellImages&)>& visit);
std::vector<SimpMap> hom_set(const SimpSet& a, const SimpSet& x, Budget& budget);
std::uint64_t count_homs(const SimpSet& a, const SimpSet& x, Budget& budget);

// Function complex: (X^A)_n = hom(Δ[n] x A, X), truncated at min of the bounds.
struct Exponential {
  SimpSet set;
  SimpSet target;  // X
  // Nondegenerate-cell images of the map Δ[n] x A -> X represented by each
  // table simplex of `set` in dimension n, concatenated by cell dimension.
  std::vector<std::vector<std::vector<int>>> maps;
  std::vector<Product> shapes;  // Δ[n] x A
  std::vector<std::vector<int>> offsets;  // per n: start of each cell dimension in a flattened map
  std::vector<std::map<std::vector<int>, int>> index;

  // Table id of the n-simplex with the given flattened images, or -1.
  int find(int n, const std::vector<int>& flat) const;
  // Image of simplex t (dimension m, table id of shapes[n]) under map x.
  int apply(int n, int x, int m, int t) const;
};
// Admissibility of a candidate for (level n, shape Δ[n] x A, dim, cell, candidate).
// Used for marked and over-base variants; must be stable under the
// simplicial operators of the function complex.
using ShapeFilter = std::function<bool(int, const Product&, int, int, int)>;
Exponential exponential(const SimpSet& x, const SimpSet& a, Budget& budget, const ShapeFilter& filter = {});

// ---- lifting ----

// Right lifting property of p : X -> S against the monomorphism i : A -> B,
// searched over squares in dimensions <= dim_cap. `top_fixed` optionally pins
// the images of some cells of A (target table ids, -1 for free).
Verdict has_rlp(const SimpMap& p, const SimpMap& i, int dim_cap, Budget& budget,
                const std::vector<std::vector<int>>& top_fixed = {});
// Inner horn fillers for 0 < k < n <= d.
Verdict is_quasicategory_up_to(const SimpSet& x, int d, Budget& budget);
// Inner horn lifting for a map (inner fibration test) for n <= d.
Verdict is_inner_fibration_up_to(const SimpMap& p, int d, Budget& budget);

// ---- isomorphism ----

struct IsoResult {
  Verdict verdict;
  std::optional<SimpMap> witness;
};
// Exhaustive isomorphism search with component splitting and color refinement.
IsoResult iso_check(const SimpSet& x, const SimpSet& y, Budget& budget);

// Connected components as sub-simplicial sets.
std::vector<Sub> components(const SimpSet& x);

// Quotient of a full table by a congruence given as representative per simplex.
// `cls[n][x]` must be constant on classes and compatible with faces and
// degeneracies; returns the quotient table and per-simplex class ids.
struct QuotientTable {
  FullTable table;
  std::vector<std::vector<int>> class_of;
  std::vector<std::vector<int>> rep;  // a member per class
};
QuotientTable quotient_table(const FullTable& t, const std::vector<std::vector<int>>& root);

// Small union-find used by quotients.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace gs
