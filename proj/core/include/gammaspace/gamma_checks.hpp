#pragma once

#include <string>
#include <vector>

#include <gammaspace/common.hpp>
#include <gammaspace/fincat.hpp>
#include <gammaspace/gamma_space.hpp>

namespace gs {

// ---- Segal condition ----

enum class SegalTier { iso, cat_equiv, ho_necessary };
SegalTier parse_segal_tier(const std::string& s);  // "iso", "cat-equiv", "ho-necessary"
std::string to_string(SegalTier t);

struct SegalMap {
  Product product;  // X(k+) x X(l+)
  SimpMap map;      // X((k+l)+) -> X(k+) x X(l+)
};
SegalMap segal_map(const TabulatedGammaSpace& x, int k, int l);

// Tests the Segal map at the requested tier. cat-equiv falls back to
// ho-necessary, with an explicit note, when a side is not the nerve of its τ1.
Verdict segal_check(const TabulatedGammaSpace& x, int k, int l, SegalTier tier, Budget& budget, int word_cap = 16);
// All (k, l) with k, l >= 1 and k + l <= max_sum; first failure wins.
Verdict segal_sweep(const TabulatedGammaSpace& x, int max_sum, SegalTier tier, Budget& budget, int word_cap = 16);

// Functor τ1(X) -> τ1(Y) induced by f; arrows of τ1(X) are reached by closing edge images under composition.
CatFunctor tau1_map(const Tau1& x, const Tau1& y, const SimpMap& f);
// Whether the canonical map X -> N(τ1 X) is an isomorphism.
bool is_nerve_of_tau1(const SimpSet& x, const Tau1& t);

FinCat homotopy_category(const TabulatedGammaSpace& x, int word_cap = 16);

// ---- unital part and normalization ----

struct UnitalPart {
  TabulatedGammaSpace space;  // constant at X(0+)
  GammaSpaceMap iota;         // X(0_n) at level n
};
UnitalPart unital_part(const TabulatedGammaSpace& x);

struct Normalization {
  TabulatedGammaSpace space;
  GammaSpaceMap eta;
  std::vector<Pushout> pushouts;  // X(n+) <- X(0+) -> pt, per level
};
Normalization normalize(const TabulatedGammaSpace& x);

// ε_Y : (U Y)nor -> Y for normalized Y.
GammaSpaceMap normalization_counit(const Normalization& n, const TabulatedGammaSpace& y);

// U(Map•(X, Y)) against Map(UX, UY) for normalized X, Y, as an isomorphism
// of simplicial sets; both sides via natural families up to max_level.
Verdict normalized_mapping_check(const TabulatedGammaSpace& x, const TabulatedGammaSpace& y, int max_level,
                                 Budget& budget);

// ---- trivial fibrations ----

// Route one: levelwise lifting against ∂Δ[m] ⊂ Δ[m]. Route two: squares
// Γ^n ⊗ ∂Δ[m] -> X, Γ^n ⊗ Δ[m] -> Y and their lifts counted through the
// tensor adjunction. The verdict fails if the routes disagree.
Verdict trivial_fibration_check(const GammaSpaceMap& p, int level_cap, int dim_cap, Budget& budget);

// ---- semiadditivity ----

struct SemiadditivityReport {
  int level_bound = 0;
  GammaSpaceMap composite;    // X * (Γ1 ⊔ Γ1) -> X * Γ2
  Verdict coproduct;          // X ⊔ X ≅ X * (Γ1 ⊔ Γ1)
  Verdict product;            // X * Γ2 ≅ X x X
  std::vector<json> levels;   // per-level counts and outcomes

  json to_json() const;
};
SemiadditivityReport semiadditivity_probe(const PresentedGammaSpace& x, int level_bound, Budget& budget);

}  // namespace gs
