#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gammaspace/common.hpp>
#include <gammaspace/fincat.hpp>

namespace gs {

// Based map n+ -> m+; `map[i - 1]` is the image of i, and 0 goes to 0.
struct GammaMorphism {
  int src = 0;
  int dst = 0;
  std::vector<int> map;

  static GammaMorphism identity(int n);
  static GammaMorphism zero(int n, int m);  // everything to the basepoint

  int operator()(int i) const { return i == 0 ? 0 : map[i - 1]; }
  bool is_inert() const;   // each nonzero target element has exactly one preimage
  bool is_active() const;  // only the basepoint goes to the basepoint
  std::vector<int> support() const;  // elements not sent to the basepoint

  std::string name() const;  // e.g. "3>2:012"
  json to_json() const;
  static GammaMorphism from_json(const json& j);
  // Validates ranges; throws InputError.
  static GammaMorphism make(int src, int dst, std::vector<int> map);

  auto operator<=>(const GammaMorphism&) const = default;
};

// g after f.
GammaMorphism compose(const GammaMorphism& g, const GammaMorphism& f);

struct InertActive {
  GammaMorphism inert;
  GammaMorphism active;
  std::vector<int> support;
};
InertActive factor_inert_active(const GammaMorphism& f);

// k+ ∧ l+ = (kl)+, pair (i, j) encoded as (i - 1) * l + j.
inline int smash_index(int i, int j, int l) { return (i == 0 || j == 0) ? 0 : (i - 1) * l + j; }
GammaMorphism smash(const GammaMorphism& a, const GammaMorphism& b);
// n+ + m+ = (n + m)+, with the second summand shifted by n (resp. the target's first size).
GammaMorphism sum(const GammaMorphism& a, const GammaMorphism& b);
// δ^{k+l}_k keeps 1..k; δ^{k+l}_l sends k + j to j. Both collapse the rest.
GammaMorphism delta_first(int k, int l);
GammaMorphism delta_second(int k, int l);
// Summand inclusions k+ -> (k+l)+ and l+ -> (k+l)+.
GammaMorphism include_first(int k, int l);
GammaMorphism include_second(int k, int l);

std::uint64_t hom_count(int n, int m);  // (m + 1)^n
// All (m + 1)^n based maps, in the order of `encode`.
std::vector<GammaMorphism> enumerate_homs(int n, int m);
// Index of f among maps src -> dst: digits map[i] in base dst + 1, least significant first.
std::uint64_t encode(const GammaMorphism& f);
GammaMorphism decode(int n, int m, std::uint64_t index);

// Full subcategory of Γop on 0+ .. max_level+; arrows are named by `name()`.
FinCat gamma_op_category(int max_level);
int gamma_arrow(const FinCat& gop, const GammaMorphism& f);
GammaMorphism gamma_of_arrow(const FinCat& gop, int arrow);

}  // namespace gs
