#pragma once

#include <cstdint>
#include <vector>

#include <gammaspace/common.hpp>
#include <gammaspace/gamma_space.hpp>
#include <gammaspace/simpset.hpp>
#include <gammaspace/simpset_ops.hpp>

namespace gs {

// Simplicial set with a set of marked edges; degenerate edges are always marked.
class MarkedSimpSet {
 public:
  MarkedSimpSet() = default;
  // `marked` holds table ids of edges; degenerate edges are added.
  MarkedSimpSet(SimpSet set, const std::vector<int>& marked);

  const SimpSet& set() const { return set_; }
  bool is_marked(int edge) const { return !marked_.empty() && marked_[edge] != 0; }
  std::vector<int> marked_edges() const;  // table ids, ascending
  int nondegenerate_marked_count() const;
  bool operator==(const MarkedSimpSet&) const = default;

 private:
  SimpSet set_;
  std::vector<char> marked_;  // per table edge
};

enum class Marking { flat, sharp };
MarkedSimpSet mark(const SimpSet& x, Marking kind);
inline MarkedSimpSet flat(const SimpSet& x) { return mark(x, Marking::flat); }
inline MarkedSimpSet sharp(const SimpSet& x) { return mark(x, Marking::sharp); }

bool preserves_marking(const SimpMap& f, const MarkedSimpSet& a, const MarkedSimpSet& b);

// Product with the componentwise marking.
struct MarkedProduct {
  Product product;
  MarkedSimpSet set;
};
MarkedProduct marked_product(const MarkedSimpSet& x, const MarkedSimpSet& y);

// Marking-preserving maps A -> X.
std::vector<SimpMap> marked_hom_set(const MarkedSimpSet& a, const MarkedSimpSet& x, Budget& budget);
std::uint64_t count_marked_homs(const MarkedSimpSet& a, const MarkedSimpSet& x, Budget& budget);

// [X, Y]^+ with its underlying [X, Y]^♭ and the sub-simplicial set [X, Y]^♯.
struct MarkedHom {
  Exponential exp;      // n-simplices: marked maps Δ[n]^♭ x X -> Y
  MarkedSimpSet plus;   // edges marked when they extend over Δ[1]^♯
  Sub sharp;            // simplices whose edges are all marked
  const SimpSet& flat() const { return plus.set(); }
};
MarkedHom hom_marked(const MarkedSimpSet& x, const MarkedSimpSet& y, Budget& budget);

// Edge marking of [X, Y]^+ for an exponential whose simplices are marked maps.
std::vector<int> plus_marking(const Exponential& e, const MarkedSimpSet& x, const MarkedSimpSet& y);

// Both sides of sSet(K, [X,Y]^♭) ≅ sSet+(K^♭ x X, Y), or the ♯ variant.
struct AdjunctionCounts {
  std::uint64_t left = 0;
  std::uint64_t right = 0;
};
AdjunctionCounts marked_adjunction_counts(const SimpSet& k, const MarkedSimpSet& x, const MarkedSimpSet& y,
                                          Marking variant, Budget& budget);

// ---- marked Γ-spaces ----

class MarkedGammaSpace {
 public:
  MarkedGammaSpace() = default;
  // Checks that the action preserves markings between levels <= check_level.
  MarkedGammaSpace(TabulatedGammaSpace space, std::vector<std::vector<int>> marked, int check_level = 3);

  const TabulatedGammaSpace& underlying() const { return space_; }
  const MarkedSimpSet& value(int n) const { return values_[n]; }
  int level_bound() const { return space_.level_bound(); }

 private:
  TabulatedGammaSpace space_;
  std::vector<MarkedSimpSet> values_;
};

MarkedGammaSpace gamma_flat(const TabulatedGammaSpace& x);
MarkedGammaSpace gamma_sharp(const TabulatedGammaSpace& x);

// Natural families of marked maps X(k) x Δ[n]^♭ -> Y(k), k <= max_level.
SimpSet marked_mapping_space(const MarkedGammaSpace& x, const MarkedGammaSpace& y, int max_level, Budget& budget);

}  // namespace gs
