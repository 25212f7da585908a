#pragma once

#include <string>
#include <vector>

#include <gammaspace/cocartesian.hpp>
#include <gammaspace/common.hpp>
#include <gammaspace/fincat.hpp>
#include <gammaspace/gamma_space.hpp>
#include <gammaspace/simpset.hpp>

namespace gs::suite {

// ---- default corpus ----

struct NamedPresented {
  std::string name;
  PresentedGammaSpace space;
};
struct NamedTabulated {
  std::string name;
  TabulatedGammaSpace space;
  bool normalized = false;
};
struct NamedCategory {
  std::string name;
  FinCat cat;
};
struct NamedSimpSet {
  std::string name;
  SimpSet set;
};
struct NamedDiagram {
  std::string name;
  RelativeNerveInput input;
  int dim_cap = 2;
  bool category_valued = false;
};

std::vector<NamedPresented> presented_corpus(int dim_bound = 2);
std::vector<NamedTabulated> tabulated_corpus(int level_bound = 6, int dim_bound = 2);
std::vector<NamedCategory> category_corpus();
std::vector<NamedSimpSet> pointed_corpus(int dim_bound = 2);
std::vector<NamedDiagram> diagram_corpus();

// Functor given on objects; each arrow goes to the unique arrow between the
// images. Throws InputError when a hom-set of `d` is not a singleton.
CatFunctor functor_by_endpoints(const FinCat& c, const FinCat& d, const std::vector<int>& on_objects);

// ---- checks ----

struct CheckResult {
  std::string id;
  std::string title;
  std::string tag;  // citation tag of the statement instantiated
  Verdict verdict;
  double seconds = 0;
  double ceiling = 0;  // seconds, 0 for none
  json details;

  bool within_ceiling() const { return ceiling <= 0 || seconds < ceiling; }
  bool passed() const { return verdict.holds() && within_ceiling(); }
  json to_json(bool with_timing = true) const;
};

int criterion_count();
CheckResult run_criterion(int number, const Config& cfg);  // 1-based
std::vector<CheckResult> run_acceptance(const Config& cfg);
// Properties beyond the acceptance criteria.
std::vector<CheckResult> run_invariants(const Config& cfg);

// 0 all pass, 1 any fail, 2 otherwise inconclusive.
int exit_code(const std::vector<CheckResult>& results);

}  // namespace gs::suite
