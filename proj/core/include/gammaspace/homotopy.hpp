#pragma once

#include <gammaspace/common.hpp>
#include <gammaspace/fincat.hpp>
#include <gammaspace/simpset.hpp>
#include <gammaspace/simpset_ops.hpp>

namespace gs {

// Largest Kan complex inside a quasi-category: simplices all of whose edges
// become invertible in tau1(X).
Sub j_qcat(const SimpSet& x, int word_cap = 16);

// Full sub-simplicial set of X^A on the vertices A -> X landing in J(X).
struct RestrictedExp {
  Exponential exp;
  Sub sub;
};
RestrictedExp restricted_exp(const SimpSet& x, const SimpSet& a, Budget& budget, int word_cap = 16);

// J(X^A) as a sub-simplicial set of the exponential.
struct HomotopyMappingSpace {
  Exponential exp;
  Sub sub;
};
HomotopyMappingSpace h_map_space(const SimpSet& a, const SimpSet& x, Budget& budget, int word_cap = 16);

// Every simplex of `inner` (through its inclusion) lies in `outer`, both being
// sub-simplicial sets of the same ambient set.
bool is_contained(const Sub& inner, const Sub& outer);

}  // namespace gs
