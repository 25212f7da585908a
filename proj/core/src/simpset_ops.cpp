#include <gammaspace/simpset_ops.hpp>

#include <algorithm>

namespace gs {

QuotientTable quotient_table(const FullTable& t, const std::vector<std::vector<int>>& root) {
  QuotientTable q;
  q.table = FullTable(t.dim_bound);
  q.class_of.resize(t.dim_bound + 1);
  q.rep.resize(t.dim_bound + 1);
  for (int n = 0; n <= t.dim_bound; ++n) {
    std::vector<int> cls_of_root(t.count[n], -1);
    q.class_of[n].resize(t.count[n]);
    for (int x = 0; x < t.count[n]; ++x) {
      const int r = root[n][x];
      if (cls_of_root[r] < 0) {
        cls_of_root[r] = static_cast<int>(q.rep[n].size());
        q.rep[n].push_back(x);
      }
      q.class_of[n][x] = cls_of_root[r];
    }
    q.table.count[n] = static_cast<int>(q.rep[n].size());
  }
  for (int n = 0; n <= t.dim_bound; ++n) {
    const int cnt = q.table.count[n];
    if (n > 0) {
      q.table.face[n].resize(static_cast<std::size_t>(cnt) * (n + 1));
      for (int c = 0; c < cnt; ++c)
        for (int i = 0; i <= n; ++i) q.table.face[n][c * (n + 1) + i] = q.class_of[n - 1][t.d(n, q.rep[n][c], i)];
    }
    if (n < t.dim_bound) {
      q.table.degen[n].resize(static_cast<std::size_t>(cnt) * (n + 1));
      for (int c = 0; c < cnt; ++c)
        for (int j = 0; j <= n; ++j) q.table.degen[n][c * (n + 1) + j] = q.class_of[n + 1][t.s(n, q.rep[n][c], j)];
    }
  }
  return q;
}

Product product(const SimpSet& x, const SimpSet& y, std::optional<int> bound_opt) {
  const int bound = bound_opt ? *bound_opt : std::min(x.dim_bound(), y.dim_bound());
  if (bound > x.dim_bound() || bound > y.dim_bound()) throw InputError("product bound exceeds a factor's bound");
  FullTable t(bound);
  Product p;
  p.left_size.resize(bound + 1);
  p.right_size.resize(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    const int nx = x.size(n), ny = y.size(n);
    p.left_size[n] = nx;
    p.right_size[n] = ny;
    t.count[n] = nx * ny;
    if (n > 0) {
      t.face[n].resize(static_cast<std::size_t>(nx) * ny * (n + 1));
      for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b)
          for (int i = 0; i <= n; ++i)
            t.face[n][(a * ny + b) * (n + 1) + i] = x.face(n, a, i) * y.size(n - 1) + y.face(n, b, i);
    }
    if (n < bound) {
      t.degen[n].resize(static_cast<std::size_t>(nx) * ny * (n + 1));
      for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b)
          for (int j = 0; j <= n; ++j)
            t.degen[n][(a * ny + b) * (n + 1) + j] = x.degen(n, a, j) * y.size(n + 1) + y.degen(n, b, j);
    }
  }
  std::optional<int> bp;
  if (x.basepoint() && y.basepoint()) bp = *x.basepoint() * y.size(0) + *y.basepoint();
  Extracted e = extract(
      t,
      [&](int n, int id) {
        const int ny = y.size(n);
        return "(" + x.ref_name(n, id / ny) + "," + y.ref_name(n, id % ny) + ")";
      },
      bp);
  std::vector<std::vector<int>> i1(bound + 1), i2(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    i1[n].resize(e.set.size(n));
    i2[n].resize(e.set.size(n));
    const int ny = y.size(n);
    for (int id = 0; id < t.count[n]; ++id) {
      i1[n][e.to_set[n][id]] = id / ny;
      i2[n][e.to_set[n][id]] = id % ny;
    }
  }
  p.pr1 = SimpMap::from_table(e.set, x, std::move(i1));
  p.pr2 = SimpMap::from_table(e.set, y, std::move(i2));
  p.to_set = std::move(e.to_set);
  p.set = std::move(e.set);
  return p;
}

SimpMap product_map(const Product& src, const Product& tgt, const SimpMap& f, const SimpMap& g) {
  const int top = std::min({src.set.dim_bound(), tgt.set.dim_bound(), f.top(), g.top()});
  std::vector<std::vector<int>> img(top + 1);
  for (int n = 0; n <= top; ++n) {
    img[n].resize(src.set.size(n));
    for (int s = 0; s < src.set.size(n); ++s) img[n][s] = tgt.pair(n, f(n, src.pr1(n, s)), g(n, src.pr2(n, s)));
  }
  return SimpMap::from_table(src.set, tgt.set, std::move(img));
}

namespace {

// Concatenated tables of X and Y up to `bound`.
FullTable concat(const SimpSet& x, const SimpSet& y, int bound) {
  FullTable t(bound);
  for (int n = 0; n <= bound; ++n) {
    const int nx = x.size(n), ny = y.size(n);
    t.count[n] = nx + ny;
    if (n > 0) {
      auto& f = t.face[n];
      f.resize(static_cast<std::size_t>(nx + ny) * (n + 1));
      for (int a = 0; a < nx; ++a)
        for (int i = 0; i <= n; ++i) f[a * (n + 1) + i] = x.face(n, a, i);
      for (int b = 0; b < ny; ++b)
        for (int i = 0; i <= n; ++i) f[(nx + b) * (n + 1) + i] = x.size(n - 1) + y.face(n, b, i);
    }
    if (n < bound) {
      auto& s = t.degen[n];
      s.resize(static_cast<std::size_t>(nx + ny) * (n + 1));
      for (int a = 0; a < nx; ++a)
        for (int j = 0; j <= n; ++j) s[a * (n + 1) + j] = x.degen(n, a, j);
      for (int b = 0; b < ny; ++b)
        for (int j = 0; j <= n; ++j) s[(nx + b) * (n + 1) + j] = x.size(n + 1) + y.degen(n, b, j);
    }
  }
  return t;
}

std::string side_name(const SimpSet& x, const SimpSet& y, int n, int id) {
  if (id < x.size(n)) return "0|" + x.ref_name(n, id);
  return "1|" + y.ref_name(n, id - x.size(n));
}

}  // namespace

Coproduct coproduct(const SimpSet& x, const SimpSet& y) {
  const int bound = std::min(x.dim_bound(), y.dim_bound());
  FullTable t = concat(x, y, bound);
  Extracted e = extract(t, [&](int n, int id) { return side_name(x, y, n, id); });
  std::vector<std::vector<int>> l(bound + 1), r(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    for (int a = 0; a < x.size(n); ++a) l[n].push_back(e.to_set[n][a]);
    for (int b = 0; b < y.size(n); ++b) r[n].push_back(e.to_set[n][x.size(n) + b]);
  }
  Coproduct c;
  c.set = e.set;
  c.inl = SimpMap::from_table(x, e.set, std::move(l));
  c.inr = SimpMap::from_table(y, e.set, std::move(r));
  return c;
}

Pushout pushout(const SimpMap& f, const SimpMap& g) {
  const SimpSet& x = f.target();
  const SimpSet& y = g.target();
  const int bound = std::min(x.dim_bound(), y.dim_bound());
  FullTable t = concat(x, y, bound);
  std::vector<std::vector<int>> root(bound + 1);
  const int atop = std::min({bound, f.top(), g.top()});
  for (int n = 0; n <= bound; ++n) {
    UnionFind uf(t.count[n]);
    if (n <= atop)
      for (int a = 0; a < f.source().size(n); ++a) uf.unite(f(n, a), x.size(n) + g(n, a));
    root[n].resize(t.count[n]);
    for (int i = 0; i < t.count[n]; ++i) root[n][i] = uf.find(i);
  }
  // Faces of identified simplices are identified, so the congruence is
  // closed once it contains the images of all simplices of A.
  QuotientTable q = quotient_table(t, root);
  Extracted e = extract(q.table, [&](int n, int c) { return side_name(x, y, n, q.rep[n][c]); });
  Pushout p;
  p.set = e.set;
  std::vector<std::vector<int>> l(bound + 1), r(bound + 1);
  p.rep.resize(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    for (int a = 0; a < x.size(n); ++a) l[n].push_back(e.to_set[n][q.class_of[n][a]]);
    for (int b = 0; b < y.size(n); ++b) r[n].push_back(e.to_set[n][q.class_of[n][x.size(n) + b]]);
    p.rep[n].resize(e.set.size(n));
    for (int c = 0; c < q.table.count[n]; ++c) {
      const int m = q.rep[n][c];
      p.rep[n][e.to_set[n][c]] = m < x.size(n) ? std::pair{0, m} : std::pair{1, m - x.size(n)};
    }
  }
  p.inl = SimpMap::from_table(x, e.set, std::move(l));
  p.inr = SimpMap::from_table(y, e.set, std::move(r));
  return p;
}

SimpMap Pushout::induced(const SimpMap& u, const SimpMap& v) const {
  const int top = std::min({set.dim_bound(), u.top(), v.top()});
  std::vector<std::vector<int>> img(top + 1);
  for (int n = 0; n <= top; ++n) {
    img[n].resize(set.size(n));
    for (int s = 0; s < set.size(n); ++s) {
      const auto [side, id] = rep[n][s];
      img[n][s] = side == 0 ? u(n, id) : v(n, id);
    }
  }
  // agreement on A is verified through the images of both legs
  for (int n = 0; n <= top; ++n) {
    for (int a = 0; a < inl.source().size(n) && n <= inl.top(); ++a)
      if (img[n][inl(n, a)] != u(n, a)) throw InputError("cocone legs do not agree on the pushout");
    for (int b = 0; b < inr.source().size(n) && n <= inr.top(); ++b)
      if (img[n][inr(n, b)] != v(n, b)) throw InputError("cocone legs do not agree on the pushout");
  }
  return SimpMap::from_table(set, u.target(), std::move(img));
}

namespace {

// The unique map to Δ[0]: every simplex goes to the single simplex of its dimension.
SimpMap to_point(const SimpSet& a, const SimpSet& pt) {
  const int top = std::min(a.dim_bound(), pt.dim_bound());
  std::vector<std::vector<int>> img(top + 1);
  for (int n = 0; n <= top; ++n) img[n].assign(a.size(n), 0);
  return SimpMap::from_table(a, pt, std::move(img));
}

// Map Δ[0] -> X picking vertex v.
SimpMap pick_vertex(const SimpSet& pt, const SimpSet& x, int v) {
  const int top = std::min(pt.dim_bound(), x.dim_bound());
  std::vector<std::vector<int>> cells(top + 1);
  cells[0] = {v};
  return SimpMap(pt, x, cells);
}

int degenerate_vertex(const SimpSet& x, int n, int v) {
  return n == 0 ? v : x.degenerate(n, (1u << n) - 1, v);
}

}  // namespace

Pushout collapse(const SimpMap& incl) {
  const SimpSet pt = point(incl.target().dim_bound());
  Pushout p = pushout(incl, to_point(incl.source(), pt));
  const int star = p.inr(0, 0);
  p.set = p.set.with_basepoint(star);
  // rebuild legs against the re-pointed set
  std::vector<std::vector<int>> l(p.inl.top() + 1), r(p.inr.top() + 1);
  for (int n = 0; n <= p.inl.top(); ++n) l[n] = p.inl.images(n);
  for (int n = 0; n <= p.inr.top(); ++n) r[n] = p.inr.images(n);
  p.inl = SimpMap::from_table(p.inl.source(), p.set, std::move(l));
  p.inr = SimpMap::from_table(p.inr.source(), p.set, std::move(r));
  return p;
}

SimpSet pointed_product(const SimpSet& x, const SimpSet& y) {
  if (!x.basepoint() || !y.basepoint()) throw InputError("pointed product needs pointed factors");
  return product(x, y).set;
}

Pushout wedge(const SimpSet& x, const SimpSet& y) {
  if (!x.basepoint() || !y.basepoint()) throw InputError("wedge needs pointed summands");
  const SimpSet pt = point(std::min(x.dim_bound(), y.dim_bound()));
  Pushout p = pushout(pick_vertex(pt, x, *x.basepoint()), pick_vertex(pt, y, *y.basepoint()));
  const int star = p.inl(0, *x.basepoint());
  p.set = p.set.with_basepoint(star);
  std::vector<std::vector<int>> l(p.inl.top() + 1), r(p.inr.top() + 1);
  for (int n = 0; n <= p.inl.top(); ++n) l[n] = p.inl.images(n);
  for (int n = 0; n <= p.inr.top(); ++n) r[n] = p.inr.images(n);
  p.inl = SimpMap::from_table(x, p.set, std::move(l));
  p.inr = SimpMap::from_table(y, p.set, std::move(r));
  return p;
}

SimpSet smash(const SimpSet& x, const SimpSet& y) {
  if (!x.basepoint() || !y.basepoint()) throw InputError("smash needs pointed factors");
  const Product prod = product(x, y);
  const Pushout w = wedge(x, y);
  const int bound = prod.set.dim_bound();
  const int x0 = *x.basepoint(), y0 = *y.basepoint();
  std::vector<std::vector<int>> ix(bound + 1), iy(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    for (int a = 0; a < x.size(n); ++a) ix[n].push_back(prod.pair(n, a, degenerate_vertex(y, n, y0)));
    for (int b = 0; b < y.size(n); ++b) iy[n].push_back(prod.pair(n, degenerate_vertex(x, n, x0), b));
  }
  const SimpMap jx = SimpMap::from_table(x, prod.set, std::move(ix));
  const SimpMap jy = SimpMap::from_table(y, prod.set, std::move(iy));
  const SimpMap incl = w.induced(jx, jy);
  return collapse(incl).set;
}

SimpSet add_basepoint(const SimpSet& x) {
  const SimpSet pt = point(x.dim_bound());
  Coproduct c = coproduct(x, pt);
  return c.set.with_basepoint(c.inr(0, 0));
}

SimpSet sphere0(int dim_bound) { return add_basepoint(point(dim_bound)); }

SimpMap pushout_product(const SimpMap& f, const SimpMap& g) {
  const SimpSet &u = f.source(), &v = f.target(), &w = g.source(), &x = g.target();
  const int bound = std::min({u.dim_bound(), v.dim_bound(), w.dim_bound(), x.dim_bound()});
  const Product vw = product(v, w, bound), uw = product(u, w, bound), ux = product(u, x, bound),
                vx = product(v, x, bound);
  const SimpMap id_u = SimpMap::identity(u), id_v = SimpMap::identity(v), id_w = SimpMap::identity(w),
                id_x = SimpMap::identity(x);
  const Pushout po = pushout(product_map(uw, vw, f, id_w), product_map(uw, ux, id_u, g));
  return po.induced(product_map(vw, vx, id_v, g), product_map(ux, vx, f, id_x));
}

}  // namespace gs
