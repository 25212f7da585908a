#include <gammaspace/simpset_ops.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <queue>
#include <tuple>
#include <unordered_map>

namespace gs {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int a : v) h = (h ^ static_cast<std::size_t>(a + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

// Placement order: vertices in breadth-first order, each cell scheduled as
// soon as the bases of all its faces are placed.
std::vector<std::pair<int, int>> placement_order(const SimpSet& a, int top, const std::vector<std::vector<int>>& fixed) {
  std::vector<std::vector<int>> pending(top + 1);
  std::vector<std::vector<std::vector<std::pair<int, int>>>> dependents(top + 1);
  for (int n = 0; n <= top; ++n) {
    pending[n].assign(a.cell_count(n), 0);
    dependents[n].resize(a.cell_count(n));
  }
  for (int n = 1; n <= top; ++n) {
    for (int c = 0; c < a.cell_count(n); ++c) {
      std::vector<std::pair<int, int>> deps;
      for (int i = 0; i <= n; ++i) {
        const int t = a.face(n, c, i);
        deps.emplace_back(a.base_dim(n - 1, t), a.base_cell(n - 1, t));
      }
      std::sort(deps.begin(), deps.end());
      deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
      pending[n][c] = static_cast<int>(deps.size());
      for (auto [k, b] : deps) dependents[k][b].emplace_back(n, c);
    }
  }
  std::vector<std::pair<int, int>> order;
  // Highest dimension first, so a cell is checked right after its last face;
  // ties in the order they became ready.
  using Entry = std::tuple<int, long, int>;  // (-dimension, sequence, cell)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  long sequence = 0;
  auto place = [&](int n, int c) {
    ready.emplace(-n, sequence++, c);
    while (!ready.empty()) {
      const auto [neg, seq, d] = ready.top();
      ready.pop();
      const int m = -neg;
      order.emplace_back(m, d);
      for (auto [k, e] : dependents[m][d])
        if (--pending[k][e] == 0) ready.emplace(-k, sequence++, e);
    }
  };
  const int nv = a.cell_count(0);
  std::vector<std::vector<int>> adj(nv);
  if (top >= 1) {
    for (int c = 0; c < a.cell_count(1); ++c) {
      const int u = a.vertex(1, c, 0), v = a.vertex(1, c, 1);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  std::vector<char> seen(nv, 0);
  std::vector<int> roots;
  if (!fixed.empty())
    for (int v = 0; v < nv; ++v)
      if (fixed[0][v] >= 0) roots.push_back(v);
  for (int v = 0; v < nv; ++v) roots.push_back(v);
  for (int r : roots) {
    if (seen[r]) continue;
    std::deque<int> q{r};
    seen[r] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      place(0, v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
  }
  return order;
}

}  // namespace

void enumerate_homs(const HomQuery& q, Budget& budget, const std::function<bool(const CellImages&)>& visit) {
  const SimpSet& a = *q.source;
  const SimpSet& x = *q.target;
  int top = std::min(a.dim_bound(), x.dim_bound());
  if (q.top >= 0) top = std::min(top, q.top);
  const auto order = placement_order(a, top, q.fixed);
  CellImages img(top + 1);
  for (int n = 0; n <= top; ++n) img[n].assign(a.cell_count(n), -1);
  std::vector<std::vector<char>> used;
  if (q.injective_cells) {
    used.resize(top + 1);
    for (int n = 0; n <= top; ++n) used[n].assign(x.cell_count(n), 0);
  }
  std::vector<std::vector<int>> buf(order.size());
  std::vector<int> faces;
  const bool has_fixed = !q.fixed.empty();

  // Iterative depth-first search: the depth is the number of source cells,
  // which can exceed what the call stack holds.
  std::vector<std::size_t> next(order.size(), 0);
  auto release = [&](std::size_t p) {
    const auto [n, c] = order[p];
    if (q.injective_cells) used[n][x.cell_of(n, img[n][c])] = 0;
    img[n][c] = -1;
  };
  std::size_t p = 0;
  bool fresh = true;
  while (true) {
    if (p == order.size()) {
      if (!visit(img) || p == 0) return;
      release(--p);
      fresh = false;
      continue;
    }
    const auto [n, c] = order[p];
    auto& cs = buf[p];
    const int fix = has_fixed && n < static_cast<int>(q.fixed.size()) ? q.fixed[n][c] : -1;
    if (fresh) {
      cs.clear();
      next[p] = 0;
      if (n == 0) {
        if (fix >= 0) {
          cs.push_back(fix);
        } else {
          for (int v = 0; v < x.size(0); ++v) cs.push_back(v);
        }
      } else {
        faces.resize(n + 1);
        for (int i = 0; i <= n; ++i) {
          const int t = a.face(n, c, i);
          const unsigned m = a.mask(n - 1, t);
          const int k = n - 1 - std::popcount(m);
          faces[i] = x.degenerate(n - 1, m, img[k][a.base_cell(n - 1, t)]);
        }
        x.with_faces(n, faces, cs);
      }
    }
    bool placed = false;
    while (next[p] < cs.size()) {
      const int cand = cs[next[p]++];
      budget.charge();
      if (fix >= 0 && cand != fix) continue;
      if (q.injective_cells) {
        const int cell = x.cell_of(n, cand);
        if (cell < 0 || used[n][cell]) continue;
        if (q.source_colors && (*q.source_colors)[n][c] != (*q.target_colors)[n][cell]) continue;
      }
      if (q.filter && !q.filter(n, c, cand)) continue;
      img[n][c] = cand;
      if (q.injective_cells) used[n][x.cell_of(n, cand)] = 1;
      placed = true;
      break;
    }
    if (placed) {
      ++p;
      fresh = true;
      continue;
    }
    if (p == 0) return;
    release(--p);
    fresh = false;
  }
}

std::vector<SimpMap> hom_set(const SimpSet& a, const SimpSet& x, Budget& budget) {
  std::vector<SimpMap> out;
  HomQuery q;
  q.source = &a;
  q.target = &x;
  enumerate_homs(q, budget, [&](const CellImages& img) {
    out.emplace_back(a, x, img);
    return true;
  });
  return out;
}

std::uint64_t count_homs(const SimpSet& a, const SimpSet& x, Budget& budget) {
  std::uint64_t n = 0;
  HomQuery q;
  q.source = &a;
  q.target = &x;
  enumerate_homs(q, budget, [&](const CellImages&) {
    ++n;
    return true;
  });
  return n;
}

namespace {

std::vector<int> flatten(const CellImages& img) {
  std::vector<int> f;
  for (const auto& v : img) f.insert(f.end(), v.begin(), v.end());
  return f;
}

// Image of table simplex t (dimension m) of `shape` under the map whose
// flattened nondegenerate images are `flat`.
int apply_flat(const SimpSet& shape, const SimpSet& target, const std::vector<int>& offsets,
               const std::vector<int>& flat, int m, int t) {
  const unsigned mk = shape.mask(m, t);
  const int k = m - std::popcount(mk);
  const int y = flat[offsets[k] + shape.base_cell(m, t)];
  return mk == 0 ? y : target.degenerate(m, mk, y);
}

// Table images of the nondegenerate cells of Δ[src] x A under u x id, where
// u : Δ[src] -> Δ[dst] is given on vertices.
std::vector<std::vector<int>> simplex_map_times_id(const Product& from, const Product& to, const SimpSet& dsrc,
                                                   const SimpSet& ddst, const std::vector<int>& on_vertices) {
  const int top = std::min(from.set.dim_bound(), to.set.dim_bound());
  std::vector<std::vector<int>> out(top + 1);
  for (int m = 0; m <= top; ++m) {
    out[m].resize(from.set.cell_count(m));
    for (int c = 0; c < from.set.cell_count(m); ++c) {
      const int s = from.pr1(m, c);
      const int a = from.pr2(m, c);
      std::vector<int> verts = simplex_vertices(dsrc, m, s);
      for (int& v : verts) v = on_vertices[v];
      out[m][c] = to.pair(m, simplex_from_vertices(ddst, verts), a);
    }
  }
  return out;
}

}  // namespace

Exponential exponential(const SimpSet& x, const SimpSet& a, Budget& budget, const ShapeFilter& filter) {
  const int top = std::min(x.dim_bound(), a.dim_bound());
  Exponential e;
  std::vector<SimpSet> deltas;
  for (int n = 0; n <= top; ++n) {
    deltas.push_back(standard_simplex(n, top));
    e.shapes.push_back(product(deltas.back(), a, top));
  }
  std::vector<std::vector<std::vector<int>>> maps(top + 1);
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index(top + 1);
  std::vector<std::vector<int>> offsets(top + 1);
  for (int n = 0; n <= top; ++n) {
    const SimpSet& shape = e.shapes[n].set;
    offsets[n].assign(top + 2, 0);
    for (int m = 0; m <= top; ++m) offsets[n][m + 1] = offsets[n][m] + shape.cell_count(m);
    HomQuery q;
    q.source = &shape;
    q.target = &x;
    if (filter) q.filter = [&, n](int dim, int cell, int cand) { return filter(n, e.shapes[n], dim, cell, cand); };
    enumerate_homs(q, budget, [&](const CellImages& img) {
      auto f = flatten(img);
      index[n].emplace(f, static_cast<int>(maps[n].size()));
      maps[n].push_back(std::move(f));
      return true;
    });
  }
  FullTable t(top);
  for (int n = 0; n <= top; ++n) t.count[n] = static_cast<int>(maps[n].size());
  auto lookup = [&](int n, const std::vector<int>& f) {
    auto it = index[n].find(f);
    if (it == index[n].end()) throw InputError("exponential: composite map not found");
    return it->second;
  };
  for (int n = 1; n <= top; ++n) {
    t.face[n].resize(static_cast<std::size_t>(t.count[n]) * (n + 1));
    for (int i = 0; i <= n; ++i) {
      std::vector<int> cof(n);
      for (int v = 0; v < n; ++v) cof[v] = v < i ? v : v + 1;
      const auto cm = simplex_map_times_id(e.shapes[n - 1], e.shapes[n], deltas[n - 1], deltas[n], cof);
      for (int idx = 0; idx < t.count[n]; ++idx) {
        std::vector<int> f;
        for (int m = 0; m <= top; ++m)
          for (int c = 0; c < e.shapes[n - 1].set.cell_count(m); ++c)
            f.push_back(apply_flat(e.shapes[n].set, x, offsets[n], maps[n][idx], m, cm[m][c]));
        t.face[n][idx * (n + 1) + i] = lookup(n - 1, f);
      }
    }
  }
  for (int n = 0; n < top; ++n) {
    t.degen[n].resize(static_cast<std::size_t>(t.count[n]) * (n + 1));
    for (int j = 0; j <= n; ++j) {
      std::vector<int> cod(n + 2);
      for (int v = 0; v <= n + 1; ++v) cod[v] = v <= j ? v : v - 1;
      const auto cm = simplex_map_times_id(e.shapes[n + 1], e.shapes[n], deltas[n + 1], deltas[n], cod);
      for (int idx = 0; idx < t.count[n]; ++idx) {
        std::vector<int> f;
        for (int m = 0; m <= top; ++m)
          for (int c = 0; c < e.shapes[n + 1].set.cell_count(m); ++c)
            f.push_back(apply_flat(e.shapes[n].set, x, offsets[n], maps[n][idx], m, cm[m][c]));
        t.degen[n][idx * (n + 1) + j] = lookup(n + 1, f);
      }
    }
  }
  Extracted ex = extract(t);
  e.maps.resize(top + 1);
  e.index.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    e.maps[n].resize(t.count[n]);
    for (int idx = 0; idx < t.count[n]; ++idx) {
      e.index[n].emplace(maps[n][idx], ex.to_set[n][idx]);
      e.maps[n][ex.to_set[n][idx]] = std::move(maps[n][idx]);
    }
  }
  e.set = std::move(ex.set);
  e.target = x;
  e.offsets = std::move(offsets);
  return e;
}

int Exponential::find(int n, const std::vector<int>& flat) const {
  auto it = index[n].find(flat);
  return it == index[n].end() ? -1 : it->second;
}

int Exponential::apply(int n, int x, int m, int t) const {
  return apply_flat(shapes[n].set, target, offsets[n], maps[n][x], m, t);
}

// ---- lifting ----

namespace {

json images_json(const SimpSet& src, const SimpSet& tgt, const CellImages& img) {
  json j = json::object();
  for (int n = 0; n < static_cast<int>(img.size()); ++n)
    for (int c = 0; c < src.cell_count(n); ++c)
      if (img[n][c] >= 0) j[std::to_string(n) + ":" + src.cell(n, c).id] = tgt.ref_name(n, img[n][c]);
  return j;
}

}  // namespace

Verdict has_rlp(const SimpMap& p, const SimpMap& i, int dim_cap, Budget& budget,
                const std::vector<std::vector<int>>& top_fixed) {
  const SimpSet& x = p.source();
  const SimpSet& s = p.target();
  const SimpSet& a = i.source();
  const SimpSet& b = i.target();
  Verdict v;
  v.tier = "exhaustive";
  const int top = std::min({dim_cap, x.dim_bound(), s.dim_bound(), a.dim_bound(), b.dim_bound()});
  v.range = "dim<=" + std::to_string(top);
  if (!i.is_mono()) throw InputError("has_rlp: i must be a monomorphism");
  try {
    HomQuery qa;
    qa.source = &a;
    qa.target = &x;
    qa.top = top;
    if (!top_fixed.empty()) {
      qa.fixed = top_fixed;
      qa.fixed.resize(top + 1);
      for (int n = 0; n <= top; ++n) qa.fixed[n].resize(a.cell_count(n), -1);
    }
    enumerate_homs(qa, budget, [&](const CellImages& u) {
      std::vector<std::vector<int>> fixed_base(top + 1), fixed_lift(top + 1);
      for (int n = 0; n <= top; ++n) {
        fixed_base[n].assign(b.cell_count(n), -1);
        fixed_lift[n].assign(b.cell_count(n), -1);
        for (int c = 0; c < a.cell_count(n); ++c) {
          const int bc = b.cell_of(n, i(n, c));
          fixed_lift[n][bc] = u[n][c];
          fixed_base[n][bc] = p(n, u[n][c]);
        }
      }
      HomQuery qb;
      qb.source = &b;
      qb.target = &s;
      qb.top = top;
      qb.fixed = fixed_base;
      bool all_lift = true;
      enumerate_homs(qb, budget, [&](const CellImages& w) {
        HomQuery ql;
        ql.source = &b;
        ql.target = &x;
        ql.top = top;
        ql.fixed = fixed_lift;
        ql.filter = [&](int n, int c, int cand) { return p(n, cand) == w[n][c]; };
        bool found = false;
        enumerate_homs(ql, budget, [&](const CellImages&) {
          found = true;
          return false;
        });
        if (!found) {
          all_lift = false;
          v.status = Status::fails;
          v.witness = json{{"top", images_json(a, x, u)}, {"bottom", images_json(b, s, w)}};
          return false;
        }
        return true;
      });
      return all_lift;
    });
  } catch (const BudgetExceeded& e) {
    v.status = Status::inconclusive;
    v.detail = e.what();
  }
  return v;
}

Verdict is_quasicategory_up_to(const SimpSet& x, int d, Budget& budget) {
  const SimpSet pt = point(x.dim_bound());
  std::vector<std::vector<int>> img(x.dim_bound() + 1);
  for (int n = 0; n <= x.dim_bound(); ++n) img[n].assign(x.size(n), 0);
  const SimpMap p = SimpMap::from_table(x, pt, std::move(img));
  Verdict v = is_inner_fibration_up_to(p, d, budget);
  v.tier = "inner-horn";
  return v;
}

Verdict is_inner_fibration_up_to(const SimpMap& p, int d, Budget& budget) {
  Verdict out;
  out.tier = "inner-horn";
  out.range = "2<=n<=" + std::to_string(d);
  for (int n = 2; n <= d; ++n) {
    for (int k = 1; k < n; ++k) {
      Verdict v = has_rlp(p, horn_inclusion(n, k, std::max(n, p.source().dim_bound())), n, budget);
      if (!v.holds()) {
        out.status = v.status;
        out.detail = "horn(" + std::to_string(n) + "," + std::to_string(k) + ")" + (v.detail.empty() ? "" : ": " + v.detail);
        out.witness = v.witness;
        return out;
      }
    }
  }
  return out;
}

}  // namespace gs
