#include <gammaspace/marked.hpp>

#include <algorithm>
#include <array>

namespace gs {

MarkedSimpSet::MarkedSimpSet(SimpSet set, const std::vector<int>& marked) : set_(std::move(set)) {
  if (set_.dim_bound() < 1) return;
  marked_.assign(set_.size(1), 0);
  for (int e : marked) {
    if (e < 0 || e >= set_.size(1)) throw InputError("marked edge out of range");
    marked_[e] = 1;
  }
  for (int e = 0; e < set_.size(1); ++e)
    if (set_.cell_of(1, e) < 0) marked_[e] = 1;
}

std::vector<int> MarkedSimpSet::marked_edges() const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(marked_.size()); ++e)
    if (marked_[e]) out.push_back(e);
  return out;
}

int MarkedSimpSet::nondegenerate_marked_count() const {
  int n = 0;
  for (int e = 0; e < static_cast<int>(marked_.size()); ++e)
    if (marked_[e] && set_.cell_of(1, e) >= 0) ++n;
  return n;
}

MarkedSimpSet mark(const SimpSet& x, Marking kind) {
  std::vector<int> edges;
  if (kind == Marking::sharp)
    for (int e = 0; e < x.size(1); ++e) edges.push_back(e);
  return MarkedSimpSet(x, edges);
}

bool preserves_marking(const SimpMap& f, const MarkedSimpSet& a, const MarkedSimpSet& b) {
  if (f.top() < 1) return true;
  for (int e = 0; e < a.set().size(1); ++e)
    if (a.is_marked(e) && !b.is_marked(f(1, e))) return false;
  return true;
}

MarkedProduct marked_product(const MarkedSimpSet& x, const MarkedSimpSet& y) {
  Product p = product(x.set(), y.set());
  std::vector<int> edges;
  for (int e = 0; e < p.set.size(1); ++e)
    if (x.is_marked(p.pr1(1, e)) && y.is_marked(p.pr2(1, e))) edges.push_back(e);
  MarkedSimpSet m(p.set, edges);
  return MarkedProduct{std::move(p), std::move(m)};
}

namespace {

HomQuery marked_query(const MarkedSimpSet& a, const MarkedSimpSet& x) {
  HomQuery q;
  q.source = &a.set();
  q.target = &x.set();
  q.filter = [&a, &x](int n, int c, int cand) {
    return n != 1 || !a.is_marked(a.set().table_id(1, c)) || x.is_marked(cand);
  };
  return q;
}

// Marked maps Δ[n]^♭ x X -> Y: edges with degenerate Δ part and marked X part go to marked edges.
ShapeFilter flat_shape_filter(const MarkedSimpSet& x, const MarkedSimpSet& y) {
  return [&x, &y](int, const Product& shape, int dim, int cell, int cand) {
    if (dim != 1) return true;
    const int t = shape.set.table_id(1, cell);
    const int a = shape.pr1(1, t);
    if (shape.pr1.target().cell_of(1, a) >= 0) return true;
    return !x.is_marked(shape.pr2(1, t)) || y.is_marked(cand);
  };
}

}  // namespace

std::vector<SimpMap> marked_hom_set(const MarkedSimpSet& a, const MarkedSimpSet& x, Budget& budget) {
  std::vector<SimpMap> out;
  const HomQuery q = marked_query(a, x);
  enumerate_homs(q, budget, [&](const CellImages& img) {
    out.emplace_back(a.set(), x.set(), img);
    return true;
  });
  return out;
}

std::uint64_t count_marked_homs(const MarkedSimpSet& a, const MarkedSimpSet& x, Budget& budget) {
  std::uint64_t n = 0;
  const HomQuery q = marked_query(a, x);
  enumerate_homs(q, budget, [&](const CellImages&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<int> plus_marking(const Exponential& e, const MarkedSimpSet& x, const MarkedSimpSet& y) {
  std::vector<int> marked;
  if (e.set.dim_bound() < 1) return marked;
  const Product& shape = e.shapes[1];
  for (int edge = 0; edge < e.set.size(1); ++edge) {
    bool ok = true;
    for (int c = 0; c < shape.set.cell_count(1) && ok; ++c) {
      const int t = shape.set.table_id(1, c);
      if (x.is_marked(shape.pr2(1, t)) && !y.is_marked(e.apply(1, edge, 1, t))) ok = false;
    }
    if (ok) marked.push_back(edge);
  }
  return marked;
}

MarkedHom hom_marked(const MarkedSimpSet& x, const MarkedSimpSet& y, Budget& budget) {
  Exponential e = exponential(y.set(), x.set(), budget, flat_shape_filter(x, y));
  MarkedSimpSet plus(e.set, plus_marking(e, x, y));
  Sub sh = subcomplex(e.set, [&plus, &e](int n, int t) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        const std::array<int, 2> pos{p, q};
        if (!plus.is_marked(e.set.restrict_to(n, t, pos))) return false;
      }
    return true;
  });
  return MarkedHom{std::move(e), std::move(plus), std::move(sh)};
}

AdjunctionCounts marked_adjunction_counts(const SimpSet& k, const MarkedSimpSet& x, const MarkedSimpSet& y,
                                          Marking variant, Budget& budget) {
  const MarkedHom h = hom_marked(x, y, budget);
  AdjunctionCounts out;
  out.left = count_homs(k, variant == Marking::flat ? h.flat() : h.sharp.set, budget);
  const MarkedProduct kx = marked_product(mark(k, variant), x);
  out.right = count_marked_homs(kx.set, y, budget);
  return out;
}

// ---- marked Γ-spaces ----

MarkedGammaSpace::MarkedGammaSpace(TabulatedGammaSpace space, std::vector<std::vector<int>> marked, int check_level)
    : space_(std::move(space)) {
  if (static_cast<int>(marked.size()) != space_.level_bound() + 1)
    throw InputError("marked Γ-space: one marking per level required");
  for (int n = 0; n <= space_.level_bound(); ++n) values_.emplace_back(space_.value(n), marked[n]);
  const int top = std::min(check_level, space_.level_bound());
  for (int n = 0; n <= top; ++n)
    for (int m = 0; m <= top; ++m)
      for (const auto& f : enumerate_homs(n, m))
        if (!preserves_marking(space_.act(f), values_[n], values_[m]))
          throw InputError("marked Γ-space: action of " + f.name() + " does not preserve markings");
}

MarkedGammaSpace gamma_flat(const TabulatedGammaSpace& x) {
  return MarkedGammaSpace(x, std::vector<std::vector<int>>(x.level_bound() + 1), 0);
}

MarkedGammaSpace gamma_sharp(const TabulatedGammaSpace& x) {
  std::vector<std::vector<int>> marked;
  for (int n = 0; n <= x.level_bound(); ++n) marked.push_back(mark(x.value(n), Marking::sharp).marked_edges());
  return MarkedGammaSpace(x, std::move(marked), 0);
}

SimpSet marked_mapping_space(const MarkedGammaSpace& x, const MarkedGammaSpace& y, int max_level, Budget& budget) {
  return natural_mapping_space(x.underlying(), y.underlying(), max_level, false, budget,
                               [&x, &y](int k) { return flat_shape_filter(x.value(k), y.value(k)); });
}

}  // namespace gs
