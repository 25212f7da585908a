#pragma once

#include <gammaspace/fincat.hpp>
#include <gammaspace/gamma_space.hpp>
#include <gammaspace/simpset.hpp>
#include <gammaspace/simpset_ops.hpp>

namespace gs::testing {

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Budget big_budget() { return Budget{50'000'000, 0}; }

inline bool isomorphic(const SimpSet& a, const SimpSet& b) {
  Budget budget = big_budget();
  return iso_check(a, b, budget).verdict.holds();
}

// Two composable edges a: 0 -> 1, b: 1 -> 2 without a 2-simplex.
inline SimpSet spine2(int dim_bound = 2) {
  std::vector<std::vector<Cell>> cells(dim_bound + 1);
  cells[0] = {{"0", {}}, {"1", {}}, {"2", {}}};
  cells[1] = {{"a", {{1, {}}, {0, {}}}}, {"b", {{2, {}}, {1, {}}}}};
  return SimpSet(dim_bound, cells);
}

// Circle: one vertex, one edge.
inline SimpSet circle(int dim_bound = 2) {
  std::vector<std::vector<Cell>> cells(dim_bound + 1);
  cells[0] = {{"v", {}}};
  cells[1] = {{"e", {{0, {}}, {0, {}}}}};
  return SimpSet(dim_bound, cells);
}

}  // namespace gs::testing
