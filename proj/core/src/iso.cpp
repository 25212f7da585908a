#include <gammaspace/simpset_ops.hpp>

#include <algorithm>
#include <map>

namespace gs {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0x100000001b3ull;
}

using Colors = std::vector<std::vector<std::uint64_t>>;

// Color refinement on nondegenerate cells, using face bases with their
// degeneracy masks and the multiset of cofaces.
Colors refine_colors(const SimpSet& x, int top, int rounds = 4) {
  Colors col(top + 1);
  for (int n = 0; n <= top; ++n) col[n].assign(x.cell_count(n), mix(0, n));
  struct Inc {
    int n, c, i;
    unsigned mask;
  };
  std::vector<std::vector<std::vector<Inc>>> cof(top + 1);
  for (int n = 0; n <= top; ++n) cof[n].resize(x.cell_count(n));
  for (int n = 1; n <= top; ++n)
    for (int c = 0; c < x.cell_count(n); ++c)
      for (int i = 0; i <= n; ++i) {
        const int t = x.face(n, c, i);
        cof[x.base_dim(n - 1, t)][x.base_cell(n - 1, t)].push_back(Inc{n, c, i, x.mask(n - 1, t)});
      }
  for (int r = 0; r < rounds; ++r) {
    Colors next(top + 1);
    for (int n = 0; n <= top; ++n) {
      next[n].resize(x.cell_count(n));
      for (int c = 0; c < x.cell_count(n); ++c) {
        std::uint64_t h = mix(col[n][c], 17);
        for (int i = 0; n > 0 && i <= n; ++i) {
          const int t = x.face(n, c, i);
          h = mix(h, col[x.base_dim(n - 1, t)][x.base_cell(n - 1, t)]);
          h = mix(h, x.mask(n - 1, t));
        }
        std::vector<std::uint64_t> up;
        for (const Inc& e : cof[n][c]) up.push_back(mix(mix(col[e.n][e.c], e.i), e.mask));
        std::sort(up.begin(), up.end());
        for (auto u : up) h = mix(h, u);
        next[n][c] = h;
      }
    }
    col = std::move(next);
  }
  return col;
}

std::uint64_t signature(const SimpSet& x, const Colors& col) {
  std::uint64_t h = 0;
  for (std::size_t n = 0; n < col.size(); ++n) {
    h = mix(h, x.cell_count(static_cast<int>(n)));
    std::vector<std::uint64_t> c = col[n];
    std::sort(c.begin(), c.end());
    for (auto v : c) h = mix(h, v);
  }
  return h;
}

json counts_json(const SimpSet& x, int top) {
  json j = json::array();
  for (int n = 0; n <= top; ++n) j.push_back(x.cell_count(n));
  return j;
}

}  // namespace

std::vector<Sub> components(const SimpSet& x) {
  const int bound = x.dim_bound();
  UnionFind uf(x.cell_count(0));
  for (int n = 1; n <= bound; ++n)
    for (int c = 0; c < x.cell_count(n); ++c)
      for (int k = 1; k <= n; ++k) uf.unite(x.vertex(n, c, 0), x.vertex(n, c, k));
  std::map<int, int> comp_of_root;
  for (int v = 0; v < x.cell_count(0); ++v) {
    const int r = uf.find(v);
    if (!comp_of_root.count(r)) comp_of_root.emplace(r, static_cast<int>(comp_of_root.size()));
  }
  const int nc = static_cast<int>(comp_of_root.size());
  std::vector<std::vector<std::vector<Cell>>> cells(nc, std::vector<std::vector<Cell>>(bound + 1));
  std::vector<std::vector<std::vector<int>>> images(nc, std::vector<std::vector<int>>(bound + 1));
  std::vector<std::vector<int>> local(bound + 1);
  std::vector<std::vector<int>> comp(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    local[n].resize(x.cell_count(n));
    comp[n].resize(x.cell_count(n));
    for (int c = 0; c < x.cell_count(n); ++c) {
      const int k = comp_of_root.at(uf.find(x.vertex(n, c, 0)));
      comp[n][c] = k;
      local[n][c] = static_cast<int>(cells[k][n].size());
      Cell cell{x.cell(n, c).id, {}};
      for (SimplexRef r : x.cell(n, c).faces) {
        r.base = local[n - 1 - static_cast<int>(r.deg.size())][r.base];
        cell.faces.push_back(std::move(r));
      }
      cells[k][n].push_back(std::move(cell));
      images[k][n].push_back(c);
    }
  }
  std::vector<Sub> out;
  out.reserve(nc);
  for (int k = 0; k < nc; ++k) {
    std::optional<std::string> bp;
    if (x.basepoint() && comp[0][*x.basepoint()] == k) bp = x.cell(0, *x.basepoint()).id;
    SimpSet s(bound, std::move(cells[k]), bp);
    SimpMap incl(s, x, images[k]);
    out.push_back(Sub{std::move(s), std::move(incl)});
  }
  return out;
}

IsoResult iso_check(const SimpSet& x, const SimpSet& y, Budget& budget) {
  IsoResult res;
  const int top = std::min(x.dim_bound(), y.dim_bound());
  res.verdict.tier = "iso";
  res.verdict.range = "dim<=" + std::to_string(top);
  for (int n = 0; n <= top; ++n) {
    if (x.cell_count(n) != y.cell_count(n)) {
      res.verdict.status = Status::fails;
      res.verdict.detail = "cell counts differ in dimension " + std::to_string(n);
      res.verdict.witness = json{{"left", counts_json(x, top)}, {"right", counts_json(y, top)}};
      return res;
    }
  }
  try {
    const auto cx = components(x);
    const auto cy = components(y);
    if (cx.size() != cy.size()) {
      res.verdict.status = Status::fails;
      res.verdict.detail = "component counts differ: " + std::to_string(cx.size()) + " vs " + std::to_string(cy.size());
      return res;
    }
    auto trivial = [top](const SimpSet& s) {
      if (s.cell_count(0) != 1) return false;
      for (int n = 1; n <= top; ++n)
        if (s.cell_count(n) != 0) return false;
      return true;
    };
    std::vector<Colors> colx(cx.size()), coly(cy.size());
    std::map<std::uint64_t, std::vector<int>> pool;
    for (std::size_t k = 0; k < cy.size(); ++k) {
      std::uint64_t sig = 0;
      if (!trivial(cy[k].set)) {
        coly[k] = refine_colors(cy[k].set, top);
        sig = signature(cy[k].set, coly[k]);
      }
      pool[sig].push_back(static_cast<int>(k));
    }
    for (auto& [sig, v] : pool) std::reverse(v.begin(), v.end());
    CellImages global(top + 1);
    for (int n = 0; n <= top; ++n) global[n].assign(x.cell_count(n), -1);
    for (std::size_t k = 0; k < cx.size(); ++k) {
      const SimpSet& a = cx[k].set;
      std::uint64_t sig = 0;
      const bool triv = trivial(a);
      if (!triv) {
        colx[k] = refine_colors(a, top);
        sig = signature(a, colx[k]);
      }
      auto it = pool.find(sig);
      if (it == pool.end() || it->second.empty()) {
        res.verdict.status = Status::fails;
        res.verdict.detail = "component containing vertex '" + a.cell(0, 0).id + "' has no partner";
        return res;
      }
      auto& cands = it->second;
      bool matched = false;
      for (std::size_t ci = cands.size(); ci-- > 0;) {
        const int j = cands[ci];
        const SimpSet& b = cy[j].set;
        CellImages found;
        if (triv) {
          found.assign(top + 1, {});
          found[0] = {0};
        } else {
          HomQuery q;
          q.source = &a;
          q.target = &b;
          q.top = top;
          q.injective_cells = true;
          q.source_colors = &colx[k];
          q.target_colors = &coly[j];
          enumerate_homs(q, budget, [&](const CellImages& img) {
            found = img;
            return false;
          });
        }
        if (found.empty()) continue;
        for (int n = 0; n <= top; ++n)
          for (int c = 0; c < a.cell_count(n); ++c)
            global[n][cx[k].inclusion.cell_image(n, c)] = cy[j].inclusion(n, found[n][c]);
        cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(ci));
        matched = true;
        break;
      }
      if (!matched) {
        res.verdict.status = Status::fails;
        res.verdict.detail = "component containing vertex '" + a.cell(0, 0).id + "' has no isomorphic partner";
        return res;
      }
    }
    res.witness = SimpMap(x, y, global);
    res.verdict.status = Status::holds;
  } catch (const BudgetExceeded& e) {
    res.verdict.status = Status::inconclusive;
    res.verdict.detail = e.what();
  }
  return res;
}

}  // namespace gs
