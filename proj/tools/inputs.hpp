#pragma once

#include <string>
#include <vector>

#include <gammaspace/cocartesian.hpp>
#include <gammaspace/common.hpp>
#include <gammaspace/fincat.hpp>
#include <gammaspace/gamma_space.hpp>
#include <gammaspace/marked.hpp>
#include <gammaspace/simpset.hpp>

namespace gs::cli {

// Resolves command line operands. An operand is a path to a JSON file or a
// built-in name:
//   simplicial sets   point, simplex:n, boundary:n, horn:n:k, circle, S0,
//                     nerve:<category>, corpus:<pointed set>
//   categories        corpus:<name> (pt, disc2, [1], [2], I, Z/2, Z/3, [1]xI)
//   Gamma-spaces      corpus:<name>, representable:k
//   diagrams          corpus:<name>
//   monomorphisms     boundary:n, horn:n:k, or {"source", "target", "map"}
// Every resolved operand records the canonical JSON it came from, which
// feeds the report digest.
class InputResolver {
 public:
  explicit InputResolver(const Config& cfg) : cfg_(cfg) {}

  SimpSet simpset(const std::string& operand);
  MarkedSimpSet marked(const std::string& operand);
  FinCat category(const std::string& operand);
  PresentedGammaSpace presented(const std::string& operand);
  // Presented inputs are tabulated up to the level bound.
  TabulatedGammaSpace tabulated(const std::string& operand);
  RelativeNerveInput diagram(const std::string& operand);
  SimpMap mono(const std::string& operand);
  OverObject over_object(const std::string& operand, const SimpSet& base_nerve);

  // SHA-256 over the canonical forms of everything resolved so far.
  std::string digest() const;

 private:
  json load(const std::string& operand);
  void record(const std::string& operand, const json& canonical);

  Config cfg_;
  std::vector<std::string> seen_;
};

std::vector<int> parse_int_list(const std::string& text);

}  // namespace gs::cli
