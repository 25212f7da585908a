#include <gammaspace/homotopy.hpp>

#include <algorithm>
#include <array>
#include <vector>

namespace gs {

namespace {

std::vector<char> invertible_edges(const SimpSet& x, int word_cap) {
  std::vector<char> ok;
  if (x.dim_bound() < 1) return ok;
  const Tau1 t = tau1(x, word_cap);
  ok.resize(x.size(1));
  for (int e = 0; e < x.size(1); ++e) ok[e] = t.cat.is_iso(t.arrow_of_edge[e]);
  return ok;
}

bool all_edges(const SimpSet& x, int n, int t, const std::vector<char>& ok) {
  if (n == 0) return true;
  if (n == 1) return ok[t] != 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      const std::array<int, 2> pos{p, q};
      if (!ok[x.restrict_to(n, t, pos)]) return false;
    }
  return true;
}

}  // namespace

Sub j_qcat(const SimpSet& x, int word_cap) {
  const std::vector<char> ok = invertible_edges(x, word_cap);
  return subcomplex(x, [&](int n, int t) { return all_edges(x, n, t, ok); });
}

RestrictedExp restricted_exp(const SimpSet& x, const SimpSet& a, Budget& budget, int word_cap) {
  const Sub j = j_qcat(x, word_cap);
  const int top = j.set.dim_bound();
  std::vector<std::vector<char>> in_j(top + 1);
  for (int n = 0; n <= top; ++n) {
    in_j[n].assign(x.size(n), 0);
    for (int t = 0; t < j.set.size(n); ++t) in_j[n][j.inclusion(n, t)] = 1;
  }
  Exponential e = exponential(x, a, budget);
  const Product& shape = e.shapes[0];
  std::vector<char> good(e.set.size(0), 1);
  for (int v = 0; v < e.set.size(0); ++v)
    for (int n = 0; n <= std::min(top, shape.set.dim_bound()) && good[v]; ++n)
      for (int t = 0; t < shape.set.size(n) && good[v]; ++t)
        if (!in_j[n][e.apply(0, v, n, t)]) good[v] = 0;
  Sub sub = subcomplex(e.set, [&](int n, int t) {
    for (int p = 0; p <= n; ++p) {
      const std::array<int, 1> pos{p};
      if (!good[e.set.restrict_to(n, t, pos)]) return false;
    }
    return true;
  });
  return RestrictedExp{std::move(e), std::move(sub)};
}

HomotopyMappingSpace h_map_space(const SimpSet& a, const SimpSet& x, Budget& budget, int word_cap) {
  Exponential e = exponential(x, a, budget);
  const std::vector<char> ok = invertible_edges(e.set, word_cap);
  Sub sub = subcomplex(e.set, [&](int n, int t) { return all_edges(e.set, n, t, ok); });
  return HomotopyMappingSpace{std::move(e), std::move(sub)};
}

bool is_contained(const Sub& inner, const Sub& outer) {
  const SimpSet& ambient = inner.inclusion.target();
  if (!(ambient == outer.inclusion.target())) return false;
  const int top = std::min(inner.set.dim_bound(), outer.set.dim_bound());
  for (int n = 0; n <= top; ++n) {
    std::vector<char> present(ambient.size(n), 0);
    for (int t = 0; t < outer.set.size(n); ++t) present[outer.inclusion(n, t)] = 1;
    for (int t = 0; t < inner.set.size(n); ++t)
      if (!present[inner.inclusion(n, t)]) return false;
  }
  return true;
}

}  // namespace gs
