#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gammaspace/common.hpp>
#include <gammaspace/simpset.hpp>

namespace gs {

// Finite category with a dense composition table.
class FinCat {
 public:
  struct Arrow {
    std::string id;
    int src = 0;
    int dst = 0;
  };

  FinCat() = default;
  // `compose[g * A + f]` is g after f, or -1 when dst(f) != src(g).
  // Validates identities and well-typedness, and associativity unless the
  // table comes from a known composition rule.
  FinCat(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<int> identities,
         std::vector<int> compose, bool check_associativity = true);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& object(int x) const { return objects_[x]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int identity(int x) const { return identities_[x]; }
  bool is_identity(int a) const { return identities_[arrows_[a].src] == a; }
  int compose(int g, int f) const { return compose_[static_cast<std::size_t>(g) * arrows_.size() + f]; }
  const std::vector<int>& hom(int x, int y) const { return hom_[static_cast<std::size_t>(x) * objects_.size() + y]; }
  int inverse(int a) const;  // -1 when not invertible
  bool is_iso(int a) const { return inverse(a) >= 0; }
  int find_object(const std::string& id) const;
  int find_arrow(const std::string& id) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::vector<int> compose_;
  std::vector<std::vector<int>> hom_;
  std::unordered_map<std::string, int> arrow_index_;
};

struct CatFunctor {
  std::vector<int> on_objects;
  std::vector<int> on_arrows;

  bool operator==(const CatFunctor&) const = default;
};

bool is_functor(const FinCat& c, const FinCat& d, const CatFunctor& f);
CatFunctor compose_functors(const CatFunctor& f, const CatFunctor& g);  // g after f
CatFunctor identity_functor(const FinCat& c);

// Builds a category from generators-free data: objects, arrows and a list of
// (g, f, gf) triples; identities are named explicitly.
FinCat make_category(const std::vector<std::string>& objects, const std::vector<FinCat::Arrow>& arrows,
                     const std::vector<std::pair<std::string, std::string>>& identities,
                     const std::vector<std::array<std::string, 3>>& compose);

// Standard categories.
FinCat terminal_category();
FinCat discrete_category(int n);
FinCat ordinal_category(int n);  // the poset [n]
FinCat walking_iso();            // {0 = 1}
FinCat cyclic_group(int n);      // one object, Z/n
FinCat product_category(const FinCat& c, const FinCat& d);

struct SubCat {
  FinCat cat;
  CatFunctor inclusion;
};
SubCat max_subgroupoid(const FinCat& c);
SubCat full_subcategory(const FinCat& c, const std::vector<int>& objects);

// Object -> representative of its isomorphism class (smallest index).
std::vector<int> iso_classes(const FinCat& c);
SubCat skeleton(const FinCat& c);

// Functors D -> C, enumerated by backtracking. `bijective` restricts to
// isomorphisms of categories.
void enumerate_functors(const FinCat& d, const FinCat& c, Budget& budget, bool bijective,
                        const std::function<bool(const CatFunctor&)>& visit);

struct FunctorCategory {
  FinCat cat;                          // objects: functors, arrows: natural transformations
  std::vector<CatFunctor> functors;    // per object
  std::vector<std::vector<int>> components;  // per arrow: component at each object of D
};
// C^D.
FunctorCategory functor_category(const FinCat& d, const FinCat& c, Budget& budget);

bool is_fully_faithful(const FinCat& c, const FinCat& d, const CatFunctor& f);
bool is_essentially_surjective(const FinCat& c, const FinCat& d, const CatFunctor& f);
inline bool is_equivalence(const FinCat& c, const FinCat& d, const CatFunctor& f) {
  return is_fully_faithful(c, d, f) && is_essentially_surjective(c, d, f);
}

struct EquivalenceResult {
  Verdict verdict;
  std::optional<CatFunctor> witness;  // C -> D
};
// Reduces both sides to skeletons and searches for an isomorphism between them.
EquivalenceResult equivalence_check(const FinCat& c, const FinCat& d, Budget& budget);

struct Slice {
  FinCat cat;
  CatFunctor projection;
  std::vector<int> arrow_of_object;  // the arrow c -> x (or x -> c) each object stands for
};
Slice coslice(const FinCat& c, int object);
Slice slice(const FinCat& c, int object);

// Nerve truncated at dim_bound; nerves are 2-coskeletal, so any bound >= 2 is exact.
SimpSet nerve(const FinCat& c, int dim_bound = 4);
SimpMap nerve_map(const FinCat& c, const FinCat& d, const CatFunctor& f, const SimpSet& nc, const SimpSet& nd);
// Chain of arrows for an n-simplex of a nerve (table id), identities included.
std::vector<int> nerve_chain(const FinCat& c, const SimpSet& nc, int n, int x);
SimpSet interval_groupoid_nerve(int dim_bound = 4);

struct Tau1 {
  FinCat cat;
  std::vector<int> arrow_of_edge;  // per table simplex of dimension 1
};
// Fundamental category by completion of the 2-simplex relations. Throws
// ResourceError when a normal form longer than word_cap appears.
Tau1 tau1(const SimpSet& x, int word_cap = 16);

// Strict isomorphism of categories (bijective functor search).
EquivalenceResult category_iso_check(const FinCat& c, const FinCat& d, Budget& budget);

}  // namespace gs
