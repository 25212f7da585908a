#pragma once

#include <string>
#include <vector>

#include <gammaspace/cocartesian.hpp>
#include <gammaspace/common.hpp>
#include <gammaspace/fincat.hpp>
#include <gammaspace/gamma_op.hpp>
#include <gammaspace/gamma_space.hpp>
#include <gammaspace/marked.hpp>
#include <gammaspace/simpset.hpp>

namespace gs::io {

// Simplicial sets. Cells are sorted by id on output and on input, so
// to_json(simpset_from_json(j)) == j for canonical j.
json to_json(const SimpSet& x);
SimpSet simpset_from_json(const json& j);

// "id" for a cell, {"base": id, "deg": [...]} for a degenerate simplex.
json ref_to_json(const SimpSet& x, int n, int table_id);
int ref_from_json(const SimpSet& x, int n, const json& j);

// {"<n>": {cell id: target ref}} over nondegenerate source cells.
json to_json(const SimpMap& f);
SimpMap simpmap_from_json(const json& j, const SimpSet& source, const SimpSet& target);

json to_json(const FinCat& c);
FinCat category_from_json(const json& j);

// Morphisms whose action a tabulation must list: inert maps and active maps
// that are injective or surjective, between levels <= level_bound.
std::vector<GammaMorphism> tabulation_generators(int level_bound);
json to_json(const TabulatedGammaSpace& x);
// Completes the action through the inert/active factorization and checks
// functoriality between levels <= check_level.
TabulatedGammaSpace tabulated_from_json(const json& j, int check_level = 3);

json to_json(const PresentedGammaSpace& x);
PresentedGammaSpace presented_from_json(const json& j);

json to_json(const MarkedSimpSet& x);
MarkedSimpSet marked_from_json(const json& j);

json to_json(const RelativeNerveInput& in);
RelativeNerveInput relative_nerve_input_from_json(const json& j);

// Marked simpset plus "proj" into the given base nerve.
json to_json(const OverObject& x);
OverObject over_object_from_json(const json& j, const SimpSet& base_nerve);

json read_file(const std::string& path);

}  // namespace gs::io
