#include <gammaspace/gamma_space.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include <gammaspace/fincat.hpp>

namespace gs {

// ---- tabulated ----

struct TabulatedGammaSpace::Data {
  int level_bound = 0;
  std::vector<SimpSet> values;
  Action action;
  std::mutex mutex;
  std::map<GammaMorphism, SimpMap> cache;
};

TabulatedGammaSpace::TabulatedGammaSpace(int level_bound, std::vector<SimpSet> values, Action action)
    : d_(std::make_shared<Data>()) {
  if (level_bound < 0) throw InputError("Γ-space: negative level bound");
  if (static_cast<int>(values.size()) != level_bound + 1)
    throw InputError("Γ-space: expected " + std::to_string(level_bound + 1) + " values");
  d_->level_bound = level_bound;
  d_->values = std::move(values);
  d_->action = std::move(action);
}

int TabulatedGammaSpace::level_bound() const { return d_ ? d_->level_bound : -1; }

int TabulatedGammaSpace::dim_bound() const {
  int b = 1 << 20;
  for (const auto& v : d_->values) b = std::min(b, v.dim_bound());
  return b;
}

const SimpSet& TabulatedGammaSpace::value(int n) const {
  if (n < 0 || n > d_->level_bound)
    throw ResourceError("Γ-space: level " + std::to_string(n) + " exceeds level bound " +
                        std::to_string(d_->level_bound));
  return d_->values[n];
}

SimpMap TabulatedGammaSpace::act(const GammaMorphism& f) const {
  if (f.src > d_->level_bound || f.dst > d_->level_bound)
    throw ResourceError("Γ-space: morphism " + f.name() + " exceeds level bound " + std::to_string(d_->level_bound));
  {
    std::lock_guard lock(d_->mutex);
    auto it = d_->cache.find(f);
    if (it != d_->cache.end()) return it->second;
  }
  SimpMap m = f == GammaMorphism::identity(f.src) ? SimpMap::identity(d_->values[f.src]) : d_->action(f);
  std::lock_guard lock(d_->mutex);
  return d_->cache.emplace(f, std::move(m)).first->second;
}

Verdict check_functoriality(const TabulatedGammaSpace& x, int max_level) {
  Verdict v;
  v.tier = "exhaustive";
  const int top = std::min(max_level, x.level_bound());
  v.range = "levels<=" + std::to_string(top);
  for (int n = 0; n <= top; ++n) {
    if (!(x.act(GammaMorphism::identity(n)) == SimpMap::identity(x.value(n)))) {
      v.status = Status::fails;
      v.detail = "identity not preserved at level " + std::to_string(n);
      return v;
    }
    for (int m = 0; m <= top; ++m)
      for (const auto& f : enumerate_homs(n, m)) {
        const SimpMap xf = x.act(f);
        for (int p = 0; p <= top; ++p)
          for (const auto& g : enumerate_homs(m, p))
            if (!(x.act(compose(g, f)) == xf.then(x.act(g)))) {
              v.status = Status::fails;
              v.detail = "composition not preserved";
              v.witness = json{{"f", f.to_json()}, {"g", g.to_json()}};
              return v;
            }
      }
  }
  return v;
}

TabulatedGammaSpace terminal_gamma_space(int level_bound, int dim_bound) {
  return constant_gamma_space(point(dim_bound), level_bound);
}

TabulatedGammaSpace constant_gamma_space(const SimpSet& s, int level_bound) {
  std::vector<SimpSet> values(level_bound + 1, s);
  return TabulatedGammaSpace(level_bound, std::move(values), [s](const GammaMorphism&) { return SimpMap::identity(s); });
}

namespace {

std::string tuple_name(int index, int modulus, int n) {
  if (n == 0) return "()";
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (modulus > 10 && i > 0) s += ",";
    s += std::to_string(index % modulus);
    index /= modulus;
  }
  return s;
}

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Sum map (Z/m)^n -> (Z/m)^k along f, on tuple indices.
std::vector<int> monoid_map(const GammaMorphism& f, int modulus) {
  const int size = ipow(modulus, f.src);
  std::vector<int> out(size);
  std::vector<int> pw(f.dst + 1, 1);
  for (int j = 1; j <= f.dst; ++j) pw[j] = pw[j - 1] * modulus;
  for (int a = 0; a < size; ++a) {
    std::vector<int> b(f.dst, 0);
    int rest = a;
    for (int i = 0; i < f.src; ++i) {
      const int digit = rest % modulus;
      rest /= modulus;
      if (f.map[i] != 0) b[f.map[i] - 1] = (b[f.map[i] - 1] + digit) % modulus;
    }
    int idx = 0;
    for (int j = 0; j < f.dst; ++j) idx += b[j] * pw[j];
    out[a] = idx;
  }
  return out;
}

}  // namespace

TabulatedGammaSpace monoid_gamma_space(int modulus, int level_bound, int dim_bound) {
  if (modulus < 1) throw InputError("monoid Γ-space: modulus must be positive");
  std::vector<SimpSet> values;
  for (int n = 0; n <= level_bound; ++n) {
    std::vector<std::vector<Cell>> cells(dim_bound + 1);
    const int size = ipow(modulus, n);
    for (int a = 0; a < size; ++a) cells[0].push_back(Cell{tuple_name(a, modulus, n), {}});
    values.emplace_back(dim_bound, std::move(cells));
  }
  auto vals = std::make_shared<std::vector<SimpSet>>(values);
  return TabulatedGammaSpace(level_bound, std::move(values), [vals, modulus, dim_bound](const GammaMorphism& f) {
    std::vector<std::vector<int>> img(dim_bound + 1);
    img[0] = monoid_map(f, modulus);
    return SimpMap((*vals)[f.src], (*vals)[f.dst], img);
  });
}

TabulatedGammaSpace group_nerve_gamma_space(int modulus, int level_bound, int dim_bound) {
  auto cats = std::make_shared<std::vector<FinCat>>();
  std::vector<SimpSet> values;
  for (int n = 0; n <= level_bound; ++n) {
    const int size = ipow(modulus, n);
    std::vector<FinCat::Arrow> arrows;
    for (int a = 0; a < size; ++a) arrows.push_back({tuple_name(a, modulus, n), 0, 0});
    std::vector<int> table(static_cast<std::size_t>(size) * size);
    for (int g = 0; g < size; ++g)
      for (int f = 0; f < size; ++f) {
        int idx = 0, pw = 1, rg = g, rf = f;
        for (int i = 0; i < n; ++i) {
          idx += ((rg % modulus + rf % modulus) % modulus) * pw;
          rg /= modulus;
          rf /= modulus;
          pw *= modulus;
        }
        table[static_cast<std::size_t>(g) * size + f] = idx;
      }
    cats->emplace_back(std::vector<std::string>{"*"}, std::move(arrows), std::vector<int>{0}, std::move(table), false);
    values.push_back(nerve(cats->back(), dim_bound));
  }
  auto vals = std::make_shared<std::vector<SimpSet>>(values);
  return TabulatedGammaSpace(level_bound, std::move(values), [cats, vals, modulus](const GammaMorphism& f) {
    CatFunctor F{{0}, monoid_map(f, modulus)};
    return nerve_map((*cats)[f.src], (*cats)[f.dst], F, (*vals)[f.src], (*vals)[f.dst]);
  });
}

TabulatedGammaSpace levelwise_product(const TabulatedGammaSpace& x, const TabulatedGammaSpace& y) {
  const int bound = std::min(x.level_bound(), y.level_bound());
  auto prods = std::make_shared<std::vector<Product>>();
  std::vector<SimpSet> values;
  for (int n = 0; n <= bound; ++n) {
    prods->push_back(product(x.value(n), y.value(n)));
    values.push_back(prods->back().set);
  }
  return TabulatedGammaSpace(bound, std::move(values), [prods, x, y](const GammaMorphism& f) {
    return product_map((*prods)[f.src], (*prods)[f.dst], x.act(f), y.act(f));
  });
}

Verdict check_naturality(const GammaSpaceMap& f, int max_level) {
  Verdict v;
  v.tier = "exhaustive";
  const int top = std::min(max_level, static_cast<int>(f.levels.size()) - 1);
  v.range = "levels<=" + std::to_string(top);
  for (int n = 0; n <= top; ++n)
    for (int m = 0; m <= top; ++m)
      for (const auto& g : enumerate_homs(n, m))
        if (!(f.source.act(g).then(f.levels[m]) == f.levels[n].then(f.target.act(g)))) {
          v.status = Status::fails;
          v.detail = "naturality square fails";
          v.witness = g.to_json();
          return v;
        }
  return v;
}

GammaSpaceMap compose(const GammaSpaceMap& f, const GammaSpaceMap& g) {
  GammaSpaceMap h{f.source, g.target, {}};
  const std::size_t top = std::min(f.levels.size(), g.levels.size());
  for (std::size_t n = 0; n < top; ++n) h.levels.push_back(f.levels[n].then(g.levels[n]));
  return h;
}

bool levelwise_iso(const GammaSpaceMap& f) {
  return std::all_of(f.levels.begin(), f.levels.end(), [](const SimpMap& m) { return m.is_iso(); });
}

bool levelwise_mono(const GammaSpaceMap& f) {
  return std::all_of(f.levels.begin(), f.levels.end(), [](const SimpMap& m) { return m.is_mono(); });
}

// ---- presented ----

PresentedGammaSpace::PresentedGammaSpace(std::vector<GammaCell> cells, std::vector<GammaGlue> glue, std::string name)
    : cells_(std::move(cells)), glue_(std::move(glue)), name_(std::move(name)) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].level < 0) throw InputError("presented Γ-space: negative cell level");
    if (cells_[i].shape.dim_bound() != cells_[0].shape.dim_bound())
      throw InputError("presented Γ-space: cell shapes must share one dim_bound");
    if (cells_[i].name.empty()) cells_[i].name = "c" + std::to_string(i);
  }
  for (const auto& e : glue_) {
    const int nc = static_cast<int>(cells_.size());
    if (e.from < 0 || e.from >= nc || e.to < 0 || e.to >= nc) throw InputError("presented Γ-space: glue index out of range");
    if (e.phi.src != cells_[e.to].level || e.phi.dst != cells_[e.from].level)
      throw InputError("presented Γ-space: glue morphism " + e.phi.name() + " must go from level " +
                       std::to_string(cells_[e.to].level) + " to level " + std::to_string(cells_[e.from].level));
    if (!(e.shape_map.source() == cells_[e.from].shape) || !(e.shape_map.target() == cells_[e.to].shape))
      throw InputError("presented Γ-space: glue shape map does not match the cell shapes");
  }
}

int PresentedGammaSpace::generation_bound() const {
  int g = 0;
  for (const auto& c : cells_) g = std::max(g, c.level);
  return g;
}

int PresentedGammaSpace::dim_bound() const { return cells_.empty() ? 4 : cells_[0].shape.dim_bound(); }

PresentedGammaSpace representable(int k, int dim_bound) {
  return PresentedGammaSpace({GammaCell{k, point(dim_bound), "G" + std::to_string(k)}}, {},
                             "Γ^" + std::to_string(k));
}

PresentedGammaSpace tensor(int k, const SimpSet& shape, std::string name) {
  if (name.empty()) name = "Γ^" + std::to_string(k) + "⊗S";
  return PresentedGammaSpace({GammaCell{k, shape, "G" + std::to_string(k)}}, {}, std::move(name));
}

PresentedGammaSpace coproduct(const PresentedGammaSpace& x, const PresentedGammaSpace& y) {
  std::vector<GammaCell> cells;
  for (const auto& c : x.cells()) cells.push_back(GammaCell{c.level, c.shape, "0|" + c.name});
  for (const auto& c : y.cells()) cells.push_back(GammaCell{c.level, c.shape, "1|" + c.name});
  std::vector<GammaGlue> glue = x.glue();
  const int off = static_cast<int>(x.cells().size());
  for (auto e : y.glue()) {
    e.from += off;
    e.to += off;
    glue.push_back(std::move(e));
  }
  return PresentedGammaSpace(std::move(cells), std::move(glue), x.name() + "⊔" + y.name());
}

namespace {

// Evaluation of a presentation at one level, kept for the action.
struct LevelEval {
  int level = 0;
  SimpSet set;
  // Domain blocks: per dimension, offset of cell i and the shape table size.
  std::vector<std::vector<std::size_t>> offset;  // [d][i]
  std::vector<std::vector<int>> to_set;          // [d][domain] -> table id of set
  struct Rep {
    int cell;
    std::uint64_t g;
    int t;
  };
  std::vector<std::vector<Rep>> rep;  // [d][table id]
};

std::size_t domain_index(const LevelEval& ev, const PresentedGammaSpace& p, int d, int cell, std::uint64_t g, int t) {
  return ev.offset[d][cell] + static_cast<std::size_t>(g) * p.cells()[cell].shape.size(d) + t;
}

LevelEval evaluate_level(const PresentedGammaSpace& p, int n) {
  const int bound = p.dim_bound();
  const auto& cells = p.cells();
  const int nc = static_cast<int>(cells.size());
  LevelEval ev;
  ev.level = n;
  ev.offset.assign(bound + 1, std::vector<std::size_t>(nc + 1, 0));
  FullTable t(bound);
  std::vector<std::uint64_t> homs(nc);
  for (int i = 0; i < nc; ++i) homs[i] = hom_count(cells[i].level, n);
  for (int d = 0; d <= bound; ++d) {
    for (int i = 0; i < nc; ++i)
      ev.offset[d][i + 1] = ev.offset[d][i] + static_cast<std::size_t>(homs[i]) * cells[i].shape.size(d);
    if (ev.offset[d][nc] > 50'000'000) throw ResourceError("evaluation at level " + std::to_string(n) + " too large");
    t.count[d] = static_cast<int>(ev.offset[d][nc]);
  }
  for (int d = 0; d <= bound; ++d) {
    if (d >= 1) t.face[d].resize(static_cast<std::size_t>(t.count[d]) * (d + 1));
    if (d < bound) t.degen[d].resize(static_cast<std::size_t>(t.count[d]) * (d + 1));
    for (int i = 0; i < nc; ++i) {
      const SimpSet& s = cells[i].shape;
      const int sz = s.size(d);
      for (std::uint64_t g = 0; g < homs[i]; ++g)
        for (int x = 0; x < sz; ++x) {
          const std::size_t dom = domain_index(ev, p, d, i, g, x);
          for (int j = 0; j <= d; ++j) {
            if (d >= 1) t.face[d][dom * (d + 1) + j] = static_cast<int>(domain_index(ev, p, d - 1, i, g, s.face(d, x, j)));
            if (d < bound) t.degen[d][dom * (d + 1) + j] = static_cast<int>(domain_index(ev, p, d + 1, i, g, s.degen(d, x, j)));
          }
        }
    }
  }
  std::vector<std::vector<int>> root(bound + 1);
  for (int d = 0; d <= bound; ++d) {
    UnionFind uf(t.count[d]);
    for (const auto& e : p.glue()) {
      const SimpSet& s = cells[e.from].shape;
      for (std::uint64_t g = 0; g < homs[e.from]; ++g) {
        const GammaMorphism gm = decode(cells[e.from].level, n, g);
        const std::uint64_t h = encode(compose(gm, e.phi));
        for (int x = 0; x < s.size(d); ++x)
          uf.unite(static_cast<int>(domain_index(ev, p, d, e.from, g, x)),
                   static_cast<int>(domain_index(ev, p, d, e.to, h, e.shape_map(d, x))));
      }
    }
    root[d].resize(t.count[d]);
    for (int x = 0; x < t.count[d]; ++x) root[d][x] = uf.find(x);
  }
  QuotientTable q = quotient_table(t, root);
  auto locate = [&](int d, int dom) {
    int i = 0;
    while (ev.offset[d][i + 1] <= static_cast<std::size_t>(dom)) ++i;
    const int sz = cells[i].shape.size(d);
    const std::size_t local = dom - ev.offset[d][i];
    return LevelEval::Rep{i, local / sz, static_cast<int>(local % sz)};
  };
  Extracted ex = extract(q.table, [&](int d, int c) {
    const auto r = locate(d, q.rep[d][c]);
    const auto& cell = cells[r.cell];
    std::string name = cell.name + "[" + decode(cell.level, n, r.g).name().substr(std::to_string(cell.level).size() +
                                                                               std::to_string(n).size() + 2) +
                       "]";
    if (cell.shape.total_cells() > 1) name += ":" + cell.shape.ref_name(d, r.t);
    return name;
  });
  ev.set = ex.set;
  ev.to_set.resize(bound + 1);
  ev.rep.resize(bound + 1);
  for (int d = 0; d <= bound; ++d) {
    ev.to_set[d].resize(t.count[d]);
    for (int x = 0; x < t.count[d]; ++x) ev.to_set[d][x] = ex.to_set[d][q.class_of[d][x]];
    ev.rep[d].resize(ev.set.size(d));
    for (int c = 0; c < static_cast<int>(q.rep[d].size()); ++c) ev.rep[d][ex.to_set[d][c]] = locate(d, q.rep[d][c]);
  }
  return ev;
}

using Levels = std::shared_ptr<const std::vector<LevelEval>>;

// Image of the class of (cell, g, t) in level `dst` after applying f to g.
SimpMap presented_action(const PresentedGammaSpace& p, const LevelEval& a, const LevelEval& b, const GammaMorphism& f) {
  const int bound = p.dim_bound();
  std::vector<std::vector<int>> img(bound + 1);
  for (int d = 0; d <= bound; ++d) {
    img[d].resize(a.set.size(d));
    for (int x = 0; x < a.set.size(d); ++x) {
      const auto& r = a.rep[d][x];
      const GammaMorphism g = decode(p.cells()[r.cell].level, a.level, r.g);
      img[d][x] = b.to_set[d][domain_index(b, p, d, r.cell, encode(compose(f, g)), r.t)];
    }
  }
  return SimpMap::from_table(a.set, b.set, std::move(img));
}

std::pair<TabulatedGammaSpace, Levels> tabulate_levels(const PresentedGammaSpace& p, int level_bound) {
  auto levels = std::make_shared<std::vector<LevelEval>>();
  std::vector<SimpSet> values;
  for (int n = 0; n <= level_bound; ++n) {
    levels->push_back(evaluate_level(p, n));
    values.push_back(levels->back().set);
  }
  Levels lv = levels;
  TabulatedGammaSpace t(level_bound, std::move(values), [p, lv](const GammaMorphism& f) {
    return presented_action(p, (*lv)[f.src], (*lv)[f.dst], f);
  });
  return {t, lv};
}

}  // namespace

SimpSet evaluate(const PresentedGammaSpace& x, int n) { return evaluate_level(x, n).set; }

TabulatedGammaSpace tabulate(const PresentedGammaSpace& x, int level_bound) {
  return tabulate_levels(x, level_bound).first;
}

PresentedGammaSpace day_convolve(const PresentedGammaSpace& x, const PresentedGammaSpace& y) {
  const auto& xc = x.cells();
  const auto& yc = y.cells();
  const int nx = static_cast<int>(xc.size());
  const int ny = static_cast<int>(yc.size());
  std::vector<std::vector<Product>> prods(nx);
  std::vector<GammaCell> cells;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      prods[i].push_back(product(xc[i].shape, yc[j].shape));
      cells.push_back(GammaCell{xc[i].level * yc[j].level, prods[i][j].set, "(" + xc[i].name + "*" + yc[j].name + ")"});
    }
  std::vector<GammaGlue> glue;
  for (const auto& e : x.glue())
    for (int j = 0; j < ny; ++j)
      glue.push_back(GammaGlue{e.from * ny + j, e.to * ny + j, smash(e.phi, GammaMorphism::identity(yc[j].level)),
                               product_map(prods[e.from][j], prods[e.to][j], e.shape_map,
                                           SimpMap::identity(yc[j].shape))});
  for (int i = 0; i < nx; ++i)
    for (const auto& e : y.glue())
      glue.push_back(GammaGlue{i * ny + e.from, i * ny + e.to, smash(GammaMorphism::identity(xc[i].level), e.phi),
                               product_map(prods[i][e.from], prods[i][e.to], SimpMap::identity(xc[i].shape),
                                           e.shape_map)});
  return PresentedGammaSpace(std::move(cells), std::move(glue), "(" + x.name() + "*" + y.name() + ")");
}

// ---- coend oracle ----

namespace {

struct GenData {
  struct Gen {
    int level;
    int t;
  };
  struct Rep {
    int gen;
    GammaMorphism gamma;  // level(gen) -> element level
  };
  std::vector<Gen> gens;
  std::vector<std::vector<std::vector<Rep>>> reps;  // [level][table id]
};

// Generators chosen from the top level down; every element gets all its representations.
GenData generators(const TabulatedGammaSpace& x, int g, int d) {
  GenData out;
  out.reps.resize(g + 1);
  for (int k = 0; k <= g; ++k) out.reps[k].resize(x.value(k).size(d));
  for (int k = g; k >= 0; --k) {
    for (int t = 0; t < x.value(k).size(d); ++t) {
      if (!out.reps[k][t].empty()) continue;
      const int gi = static_cast<int>(out.gens.size());
      out.gens.push_back({k, t});
      for (int k2 = 0; k2 <= g; ++k2)
        for (const auto& gamma : enumerate_homs(k, k2)) {
          const int img = x.act(gamma)(d, t);
          out.reps[k2][img].push_back({gi, gamma});
        }
    }
  }
  return out;
}

}  // namespace

SimpSet coend_oracle(const TabulatedGammaSpace& x, int gen_x, const TabulatedGammaSpace& y, int gen_y, int n) {
  const int bound = std::min(x.dim_bound(), y.dim_bound());
  std::vector<GenData> gx, gy;
  for (int d = 0; d <= bound; ++d) {
    gx.push_back(generators(x, gen_x, d));
    gy.push_back(generators(y, gen_y, d));
  }
  // Domain: (x generator a, y generator b, h : level(a) level(b) -> n).
  std::vector<std::vector<std::size_t>> offset(bound + 1);
  auto block = [&](int d, int a, int b) { return offset[d][static_cast<std::size_t>(a) * gy[d].gens.size() + b]; };
  FullTable t(bound);
  for (int d = 0; d <= bound; ++d) {
    std::size_t at = 0;
    for (const auto& a : gx[d].gens)
      for (const auto& b : gy[d].gens) {
        offset[d].push_back(at);
        at += hom_count(a.level * b.level, n);
      }
    if (at > 50'000'000) throw ResourceError("coend oracle: domain too large at level " + std::to_string(n));
    t.count[d] = static_cast<int>(at);
  }
  // Domain index of (a, b, h o s), without building the composite.
  auto dom_after = [&](int d, int a, int b, const GammaMorphism& h, const GammaMorphism& s) {
    std::uint64_t idx = 0;
    for (int i = s.src; i-- > 0;) idx = idx * static_cast<std::uint64_t>(h.dst + 1) + h(s.map[i]);
    return static_cast<int>(block(d, a, b) + idx);
  };
  std::vector<std::vector<int>> root(bound + 1);
  for (int d = 0; d <= bound; ++d) {
    UnionFind uf(t.count[d]);
    const auto& GX = gx[d];
    const auto& GY = gy[d];
    for (int k = 0; k <= gen_x; ++k)
      for (const auto& reps : GX.reps[k]) {
        if (reps.size() < 2) continue;
        for (int b = 0; b < static_cast<int>(GY.gens.size()); ++b) {
          const auto id_l = GammaMorphism::identity(GY.gens[b].level);
          std::vector<GammaMorphism> s;
          for (const auto& r : reps) s.push_back(smash(r.gamma, id_l));
          for (const auto& h : enumerate_homs(s[0].dst, n)) {
            const int first = dom_after(d, reps[0].gen, b, h, s[0]);
            for (std::size_t r = 1; r < reps.size(); ++r) uf.unite(first, dom_after(d, reps[r].gen, b, h, s[r]));
          }
        }
      }
    for (int l = 0; l <= gen_y; ++l)
      for (const auto& reps : GY.reps[l]) {
        if (reps.size() < 2) continue;
        for (int a = 0; a < static_cast<int>(GX.gens.size()); ++a) {
          const auto id_k = GammaMorphism::identity(GX.gens[a].level);
          std::vector<GammaMorphism> s;
          for (const auto& r : reps) s.push_back(smash(id_k, r.gamma));
          for (const auto& h : enumerate_homs(s[0].dst, n)) {
            const int first = dom_after(d, a, reps[0].gen, h, s[0]);
            for (std::size_t r = 1; r < reps.size(); ++r) uf.unite(first, dom_after(d, a, reps[r].gen, h, s[r]));
          }
        }
      }
    root[d].resize(t.count[d]);
    for (int i = 0; i < t.count[d]; ++i) root[d][i] = uf.find(i);
  }
  // Faces and degeneracies act on the X and Y coordinates, then are rewritten
  // through first representations.
  struct Target {
    int d, a, b;
    GammaMorphism s;
  };
  auto normal = [&](int d, int kx, int tx, int ly, int ty) {
    const auto& rx = gx[d].reps[kx][tx].front();
    const auto& ry = gy[d].reps[ly][ty].front();
    return Target{d, rx.gen, ry.gen, smash(rx.gamma, ry.gamma)};
  };
  for (int d = 0; d <= bound; ++d) {
    if (d >= 1) t.face[d].resize(static_cast<std::size_t>(t.count[d]) * (d + 1));
    if (d < bound) t.degen[d].resize(static_cast<std::size_t>(t.count[d]) * (d + 1));
    for (int a = 0; a < static_cast<int>(gx[d].gens.size()); ++a)
      for (int b = 0; b < static_cast<int>(gy[d].gens.size()); ++b) {
        const auto [k, tx] = gx[d].gens[a];
        const auto [l, ty] = gy[d].gens[b];
        const SimpSet& xs = x.value(k);
        const SimpSet& ys = y.value(l);
        std::vector<Target> faces, degens;
        for (int j = 0; j <= d; ++j) {
          if (d >= 1) faces.push_back(normal(d - 1, k, xs.face(d, tx, j), l, ys.face(d, ty, j)));
          if (d < bound) degens.push_back(normal(d + 1, k, xs.degen(d, tx, j), l, ys.degen(d, ty, j)));
        }
        const auto homs = enumerate_homs(k * l, n);
        for (std::size_t hi = 0; hi < homs.size(); ++hi) {
          const auto& h = homs[hi];
          const std::size_t dom = block(d, a, b) + hi;
          for (int j = 0; j <= d; ++j) {
            if (d >= 1) {
              const Target& f = faces[j];
              t.face[d][dom * (d + 1) + j] = dom_after(f.d, f.a, f.b, h, f.s);
            }
            if (d < bound) {
              const Target& g = degens[j];
              t.degen[d][dom * (d + 1) + j] = dom_after(g.d, g.a, g.b, h, g.s);
            }
          }
        }
      }
  }
  QuotientTable q = quotient_table(t, root);
  return extract(q.table).set;
}

// ---- presented maps ----

GammaSpaceMap tabulate(const PresentedMap& f, int level_bound) {
  if (f.cells.size() != f.source.cells().size()) throw InputError("presented map: one entry per source cell required");
  const auto& sc = f.source.cells();
  const auto& tc = f.target.cells();
  for (std::size_t i = 0; i < sc.size(); ++i) {
    const auto& cm = f.cells[i];
    if (cm.target_cell < 0 || cm.target_cell >= static_cast<int>(tc.size()))
      throw InputError("presented map: target cell out of range");
    if (cm.phi.src != tc[cm.target_cell].level || cm.phi.dst != sc[i].level)
      throw InputError("presented map: cell morphism has wrong levels");
    if (!(cm.shape_map.source() == sc[i].shape) || !(cm.shape_map.target() == tc[cm.target_cell].shape))
      throw InputError("presented map: shape map does not match the cells");
  }
  auto [src, slv] = tabulate_levels(f.source, level_bound);
  auto [tgt, tlv] = tabulate_levels(f.target, level_bound);
  GammaSpaceMap out{src, tgt, {}};
  const int bound = f.source.dim_bound();
  for (int n = 0; n <= level_bound; ++n) {
    const LevelEval& a = (*slv)[n];
    const LevelEval& b = (*tlv)[n];
    std::vector<std::vector<int>> img(bound + 1);
    for (int d = 0; d <= bound; ++d) {
      img[d].assign(a.set.size(d), -1);
      // Every domain element is mapped, so incompatibility with the glue is detected.
      for (int i = 0; i < static_cast<int>(sc.size()); ++i) {
        const auto& cm = f.cells[i];
        const std::uint64_t homs = hom_count(sc[i].level, n);
        for (std::uint64_t g = 0; g < homs; ++g) {
          const std::uint64_t h = encode(compose(decode(sc[i].level, n, g), cm.phi));
          for (int x = 0; x < sc[i].shape.size(d); ++x) {
            const int from = a.to_set[d][domain_index(a, f.source, d, i, g, x)];
            const int to = b.to_set[d][domain_index(b, f.target, d, cm.target_cell, h, cm.shape_map(d, x))];
            if (img[d][from] >= 0 && img[d][from] != to)
              throw InputError("presented map is not compatible with the source glue");
            img[d][from] = to;
          }
        }
      }
    }
    out.levels.push_back(SimpMap::from_table(a.set, b.set, std::move(img)));
  }
  return out;
}

PresentedMap day_convolve(const PresentedMap& f, const PresentedGammaSpace& y) {
  PresentedMap out{day_convolve(f.source, y), day_convolve(f.target, y), {}};
  const auto& yc = y.cells();
  const int ny = static_cast<int>(yc.size());
  for (std::size_t i = 0; i < f.cells.size(); ++i)
    for (int j = 0; j < ny; ++j) {
      const auto& cm = f.cells[i];
      const Product from = product(f.source.cells()[i].shape, yc[j].shape);
      const Product to = product(f.target.cells()[cm.target_cell].shape, yc[j].shape);
      out.cells.push_back(CellMap{cm.target_cell * ny + j, smash(cm.phi, GammaMorphism::identity(yc[j].level)),
                                  product_map(from, to, cm.shape_map, SimpMap::identity(yc[j].shape))});
    }
  return out;
}

PresentedMap day_convolve(const PresentedGammaSpace& x, const PresentedMap& g) {
  PresentedMap out{day_convolve(x, g.source), day_convolve(x, g.target), {}};
  const auto& xc = x.cells();
  const int ns = static_cast<int>(g.source.cells().size());
  const int nt = static_cast<int>(g.target.cells().size());
  (void)ns;
  for (std::size_t i = 0; i < xc.size(); ++i)
    for (std::size_t j = 0; j < g.cells.size(); ++j) {
      const auto& cm = g.cells[j];
      const Product from = product(xc[i].shape, g.source.cells()[j].shape);
      const Product to = product(xc[i].shape, g.target.cells()[cm.target_cell].shape);
      out.cells.push_back(CellMap{static_cast<int>(i) * nt + cm.target_cell,
                                  smash(GammaMorphism::identity(xc[i].level), cm.phi),
                                  product_map(from, to, SimpMap::identity(xc[i].shape), cm.shape_map)});
    }
  return out;
}

PresentedMap h_map(int k, int l, int dim_bound) {
  PresentedMap f{coproduct(representable(k, dim_bound), representable(l, dim_bound)), representable(k + l, dim_bound),
                 {}};
  const SimpSet pt = point(dim_bound);
  f.cells.push_back(CellMap{0, delta_first(k, l), SimpMap::identity(pt)});
  f.cells.push_back(CellMap{0, delta_second(k, l), SimpMap::identity(pt)});
  return f;
}

// ---- mapping spaces ----

namespace {

// Image under c_e : E_to -> E_from of an n-simplex: Y(phi) o alpha o (id x u).
std::vector<int> restrict_along(const Exponential& from_exp, const Exponential& to_exp, int n, int x_to,
                                const SimpMap& u, const SimpMap& y_phi) {
  const Product& shape_from = from_exp.shapes[n];
  const Product& shape_to = to_exp.shapes[n];
  std::vector<int> flat;
  const int top = static_cast<int>(from_exp.offsets[n].size()) - 2;
  for (int m = 0; m <= top; ++m)
    for (int c = 0; c < shape_from.set.cell_count(m); ++c) {
      const int t = shape_from.set.table_id(m, c);
      const int a = shape_from.pr1(m, t);
      const int s = shape_from.pr2(m, t);
      const int v = to_exp.apply(n, x_to, m, shape_to.pair(m, a, u(m, s)));
      flat.push_back(y_phi(m, v));
    }
  return flat;
}

// Limit of a finite diagram of simplicial sets given by component sets and
// "component i is determined by component j" constraints, dimensionwise.
struct FamilyConstraint {
  int from;  // determined component
  int to;
  // Image in component `from` of an n-simplex of component `to`, or -1.
  std::function<int(int n, int x_to)> restrict;
};

struct Families {
  FullTable table;
  std::vector<std::vector<std::vector<int>>> tuples;
  std::vector<std::map<std::vector<int>, int>> index;
};

Families enumerate_families(const std::vector<SimpSet>& comps, const std::vector<FamilyConstraint>& cons, int top,
                            Budget& budget,
                            const std::function<bool(int n, int comp, int x)>& admissible = {}) {
  const int nc = static_cast<int>(comps.size());
  // Order: components that others depend on come first.
  std::vector<int> order;
  std::vector<char> placed(nc, 0);
  while (static_cast<int>(order.size()) < nc) {
    int best = -1;
    for (int i = 0; i < nc && best < 0; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (const auto& c : cons)
        if (c.from == i && !placed[c.to] && c.to != i) ready = false;
      if (ready) best = i;
    }
    if (best < 0)
      for (int i = 0; i < nc; ++i)
        if (!placed[i]) {
          best = i;
          break;
        }
    placed[best] = 1;
    order.push_back(best);
  }
  std::vector<int> pos(nc);
  for (int i = 0; i < nc; ++i) pos[order[i]] = i;
  Families out;
  out.tuples.resize(top + 1);
  out.index.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    std::vector<int> cur(nc, -1);
    std::function<void(int)> rec = [&](int p) {
      if (p == nc) {
        out.index[n].emplace(cur, static_cast<int>(out.tuples[n].size()));
        out.tuples[n].push_back(cur);
        return;
      }
      const int i = order[p];
      int forced = -1;
      for (const auto& c : cons)
        if (c.from == i && pos[c.to] < p) {
          forced = c.restrict(n, cur[c.to]);
          break;
        }
      auto try_value = [&](int x) {
        budget.charge();
        if (admissible && !admissible(n, i, x)) return;
        cur[i] = x;
        for (const auto& c : cons) {
          const bool involves = (c.from == i && pos[c.to] <= p) || (c.to == i && pos[c.from] <= p);
          if (involves && c.restrict(n, cur[c.to]) != cur[c.from]) {
            cur[i] = -1;
            return;
          }
        }
        rec(p + 1);
        cur[i] = -1;
      };
      if (forced >= 0) {
        try_value(forced);
      } else if (forced == -1 && std::none_of(cons.begin(), cons.end(),
                                              [&](const FamilyConstraint& c) { return c.from == i && pos[c.to] < p; })) {
        for (int x = 0; x < comps[i].size(n); ++x) try_value(x);
      }
    };
    rec(0);
  }
  out.table = FullTable(top);
  for (int n = 0; n <= top; ++n) out.table.count[n] = static_cast<int>(out.tuples[n].size());
  auto lookup = [&](int n, const std::vector<int>& v) {
    auto it = out.index[n].find(v);
    if (it == out.index[n].end()) throw InputError("mapping space: family not closed under simplicial operators");
    return it->second;
  };
  for (int n = 0; n <= top; ++n) {
    if (n >= 1) out.table.face[n].resize(static_cast<std::size_t>(out.table.count[n]) * (n + 1));
    if (n < top) out.table.degen[n].resize(static_cast<std::size_t>(out.table.count[n]) * (n + 1));
    for (int x = 0; x < out.table.count[n]; ++x)
      for (int j = 0; j <= n; ++j) {
        std::vector<int> v(nc);
        if (n >= 1) {
          for (int i = 0; i < nc; ++i) v[i] = comps[i].face(n, out.tuples[n][x][i], j);
          out.table.face[n][static_cast<std::size_t>(x) * (n + 1) + j] = lookup(n - 1, v);
        }
        if (n < top) {
          for (int i = 0; i < nc; ++i) v[i] = comps[i].degen(n, out.tuples[n][x][i], j);
          out.table.degen[n][static_cast<std::size_t>(x) * (n + 1) + j] = lookup(n + 1, v);
        }
      }
  }
  return out;
}

}  // namespace

MappingSpace mapping_space(const PresentedGammaSpace& x, const TabulatedGammaSpace& y, Budget& budget) {
  MappingSpace out;
  const auto& cells = x.cells();
  if (x.generation_bound() > y.level_bound())
    throw ResourceError("mapping space: target level bound " + std::to_string(y.level_bound()) +
                        " below generation bound " + std::to_string(x.generation_bound()));
  std::vector<SimpSet> comps;
  for (const auto& c : cells) {
    out.exps.push_back(exponential(y.value(c.level), c.shape, budget));
    comps.push_back(out.exps.back().set);
  }
  int top = y.dim_bound();
  for (const auto& c : comps) top = std::min(top, c.dim_bound());
  std::vector<FamilyConstraint> cons;
  for (const auto& e : x.glue()) {
    const SimpMap yphi = y.act(e.phi);
    const Exponential* ef = &out.exps[e.from];
    const Exponential* et = &out.exps[e.to];
    SimpMap u = e.shape_map;
    cons.push_back(FamilyConstraint{e.from, e.to, [ef, et, u, yphi](int n, int xt) {
                                      return ef->find(n, restrict_along(*ef, *et, n, xt, u, yphi));
                                    }});
  }
  Families fam = enumerate_families(comps, cons, top, budget);
  Extracted ex = extract(fam.table);
  out.set = ex.set;
  out.families.resize(top + 1);
  out.index.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    out.families[n].resize(fam.tuples[n].size());
    for (std::size_t i = 0; i < fam.tuples[n].size(); ++i) {
      const int id = ex.to_set[n][i];
      out.families[n][id] = fam.tuples[n][i];
      out.index[n].emplace(fam.tuples[n][i], id);
    }
  }
  return out;
}

SimpSet natural_mapping_space(const TabulatedGammaSpace& x, const TabulatedGammaSpace& y, int max_level,
                              bool pointed, Budget& budget, const std::function<ShapeFilter(int)>& level_filter) {
  const int levels = std::min({max_level, x.level_bound(), y.level_bound()});
  std::vector<Exponential> exps;
  std::vector<SimpSet> comps;
  for (int k = 0; k <= levels; ++k) {
    exps.push_back(exponential(y.value(k), x.value(k), budget, level_filter ? level_filter(k) : ShapeFilter{}));
    comps.push_back(exps.back().set);
  }
  int top = std::min(x.dim_bound(), y.dim_bound());
  for (const auto& c : comps) top = std::min(top, c.dim_bound());
  // Naturality against f : k -> m, as a constraint on the pair (k, m).
  struct Square {
    int k, m;
    SimpMap xf, yf;
  };
  std::vector<Square> squares;
  for (int k = 0; k <= levels; ++k)
    for (int m = 0; m <= levels; ++m)
      for (const auto& f : enumerate_homs(k, m))
        if (!(f == GammaMorphism::identity(k))) squares.push_back({k, m, x.act(f), y.act(f)});
  auto natural = [&](const Square& sq, int n, int ak, int am) {
    const Exponential& ek = exps[sq.k];
    const Exponential& em = exps[sq.m];
    const Product& pk = ek.shapes[n];
    const Product& pm = em.shapes[n];
    for (int d = 0; d + 2 <= static_cast<int>(ek.offsets[n].size()); ++d)
      for (int cell = 0; cell < pk.set.cell_count(d); ++cell) {
        const int c = pk.set.table_id(d, cell);
        const int lhs = sq.yf(d, ek.apply(n, ak, d, c));
        const int rhs = em.apply(n, am, d, pm.pair(d, pk.pr1(d, c), sq.xf(d, pk.pr2(d, c))));
        if (lhs != rhs) return false;
      }
    return true;
  };
  std::vector<int> xbp(levels + 1, -1), ybp(levels + 1, -1);
  if (pointed) {
    if (x.value(0).cell_count(0) != 1 || y.value(0).cell_count(0) != 1)
      throw InputError("pointed mapping space needs normalized Γ-spaces");
    for (int k = 0; k <= levels; ++k) {
      xbp[k] = x.act(GammaMorphism::zero(0, k))(0, 0);
      ybp[k] = y.act(GammaMorphism::zero(0, k))(0, 0);
    }
  }
  // Level-by-level backtracking; squares are checked once both ends are chosen.
  Families fam;
  fam.tuples.resize(top + 1);
  fam.index.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    std::vector<int> cur(levels + 1, -1);
    std::function<void(int)> rec = [&](int k) {
      if (k > levels) {
        fam.index[n].emplace(cur, static_cast<int>(fam.tuples[n].size()));
        fam.tuples[n].push_back(cur);
        return;
      }
      for (int a = 0; a < comps[k].size(n); ++a) {
        budget.charge();
        if (pointed) {
          const Product& pk = exps[k].shapes[n];
          bool ok = true;
          for (int d = 0; d + 2 <= static_cast<int>(exps[k].offsets[n].size()) && ok; ++d) {
            const unsigned full = (1u << d) - 1u;
            const int bp_d = x.value(k).degenerate(d, full, xbp[k]);
            const int target = y.value(k).degenerate(d, full, ybp[k]);
            for (int cell = 0; cell < pk.set.cell_count(d) && ok; ++cell) {
              const int c = pk.set.table_id(d, cell);
              if (pk.pr2(d, c) == bp_d && exps[k].apply(n, a, d, c) != target) ok = false;
            }
          }
          if (!ok) continue;
        }
        cur[k] = a;
        bool ok = true;
        for (const auto& sq : squares) {
          if (std::max(sq.k, sq.m) != k) continue;
          if (!natural(sq, n, cur[sq.k], cur[sq.m])) {
            ok = false;
            break;
          }
        }
        if (ok) rec(k + 1);
        cur[k] = -1;
      }
    };
    rec(0);
  }
  fam.table = FullTable(top);
  for (int n = 0; n <= top; ++n) fam.table.count[n] = static_cast<int>(fam.tuples[n].size());
  for (int n = 0; n <= top; ++n) {
    if (n >= 1) fam.table.face[n].resize(static_cast<std::size_t>(fam.table.count[n]) * (n + 1));
    if (n < top) fam.table.degen[n].resize(static_cast<std::size_t>(fam.table.count[n]) * (n + 1));
    for (int t = 0; t < fam.table.count[n]; ++t)
      for (int j = 0; j <= n; ++j) {
        std::vector<int> v(levels + 1);
        if (n >= 1) {
          for (int k = 0; k <= levels; ++k) v[k] = comps[k].face(n, fam.tuples[n][t][k], j);
          fam.table.face[n][static_cast<std::size_t>(t) * (n + 1) + j] = fam.index[n - 1].at(v);
        }
        if (n < top) {
          for (int k = 0; k <= levels; ++k) v[k] = comps[k].degen(n, fam.tuples[n][t][k], j);
          fam.table.degen[n][static_cast<std::size_t>(t) * (n + 1) + j] = fam.index[n + 1].at(v);
        }
      }
  }
  return extract(fam.table).set;
}

std::uint64_t count_natural_maps(const PresentedGammaSpace& x, const TabulatedGammaSpace& y, Budget& budget) {
  const auto& cells = x.cells();
  if (x.generation_bound() > y.level_bound())
    throw ResourceError("natural maps: target level bound " + std::to_string(y.level_bound()) +
                        " below generation bound " + std::to_string(x.generation_bound()));
  const int count = static_cast<int>(cells.size());
  UnionFind groups(count);
  for (const auto& e : x.glue()) groups.unite(e.from, e.to);
  std::vector<int> glue_count(count, 0);
  for (const auto& e : x.glue()) ++glue_count[groups.find(e.from)];

  std::uint64_t total = 1;
  for (int root = 0; root < count && total != 0; ++root) {
    if (groups.find(root) != root) continue;
    std::vector<int> members;
    for (int c = 0; c < count; ++c)
      if (groups.find(c) == root) members.push_back(c);
    if (glue_count[root] == 0) {
      total *= count_homs(cells[root].shape, y.value(cells[root].level), budget);
      continue;
    }
    // Maps per cell, then restriction tables along each glue arrow.
    std::vector<std::vector<SimpMap>> homs(count);
    std::vector<std::map<std::vector<int>, int>> by_key(count);
    for (int c : members) {
      homs[c] = hom_set(cells[c].shape, y.value(cells[c].level), budget);
      for (int i = 0; i < static_cast<int>(homs[c].size()); ++i) by_key[c].emplace(homs[c][i].key(), i);
    }
    struct Restriction {
      int from, to;
      std::vector<int> table;  // map index at `to` -> map index at `from`, or -1
    };
    std::vector<Restriction> rs;
    for (const auto& e : x.glue()) {
      if (groups.find(e.from) != root) continue;
      Restriction r{e.from, e.to, {}};
      const SimpMap yphi = y.act(e.phi);
      for (const auto& g : homs[e.to]) {
        budget.charge();
        const auto it = by_key[e.from].find(e.shape_map.then(g).then(yphi).key());
        r.table.push_back(it == by_key[e.from].end() ? -1 : it->second);
      }
      rs.push_back(std::move(r));
    }
    std::vector<int> position(count, -1);
    for (int k = 0; k < static_cast<int>(members.size()); ++k) position[members[k]] = k;
    std::vector<int> choice(members.size(), -1);
    std::uint64_t families = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == members.size()) {
        ++families;
        return;
      }
      const int c = members[k];
      for (int i = 0; i < static_cast<int>(homs[c].size()); ++i) {
        budget.charge();
        choice[k] = i;
        bool ok = true;
        for (const auto& r : rs) {
          const int pf = position[r.from], pt = position[r.to];
          if (std::max(pf, pt) != static_cast<int>(k)) continue;
          if (r.table[choice[pt]] != choice[pf]) {
            ok = false;
            break;
          }
        }
        if (ok) rec(k + 1);
      }
      choice[k] = -1;
    };
    rec(0);
    total *= families;
  }
  return total;
}

SimpMap yoneda_map(const MappingSpace& m, const TabulatedGammaSpace& y, int n) {
  if (m.exps.size() != 1) throw InputError("Yoneda comparison needs a single representable cell");
  const Exponential& e = m.exps[0];
  const SimpSet& target = y.value(n);
  const int top = static_cast<int>(m.families.size()) - 1;
  std::vector<std::vector<int>> img(top + 1);
  for (int d = 0; d <= top; ++d) {
    const Product& shape = e.shapes[d];
    // Top simplex of Δ[d] paired with the fully degenerate point.
    const SimpSet& simplex = shape.pr1.target();
    const SimpSet& pt = shape.pr2.target();
    const int corner = shape.pair(d, simplex.table_id(d, 0), pt.degenerate(d, (1u << d) - 1u, 0));
    img[d].resize(m.set.size(d));
    for (int x = 0; x < m.set.size(d); ++x) img[d][x] = e.apply(d, m.families[d][x][0], d, corner);
  }
  return SimpMap::from_table(m.set, target, std::move(img));
}

TabulatedGammaSpace precompose_smash(const TabulatedGammaSpace& x, int n) {
  const int bound = n == 0 ? x.level_bound() : x.level_bound() / n;
  std::vector<SimpSet> values;
  for (int k = 0; k <= bound; ++k) values.push_back(x.value(n * k));
  return TabulatedGammaSpace(bound, std::move(values), [x, n](const GammaMorphism& f) {
    return x.act(smash(GammaMorphism::identity(n), f));
  });
}

InternalHom internal_hom(const PresentedGammaSpace& x, const TabulatedGammaSpace& y, Budget& budget, int max_level) {
  const int g = std::max(1, x.generation_bound());
  int bound = y.level_bound() / g;
  if (max_level >= 0) bound = std::min(bound, max_level);
  auto levels = std::make_shared<std::vector<MappingSpace>>();
  std::vector<PresentedGammaSpace> sources;
  for (int n = 0; n <= bound; ++n) {
    sources.push_back(day_convolve(x, representable(n, x.dim_bound())));
    levels->push_back(mapping_space(sources.back(), y, budget));
  }
  std::vector<SimpSet> values;
  for (const auto& m : *levels) values.push_back(m.set);
  const auto& cells = x.cells();
  // Cell i of X * Γ^n has level k_i n; f acts on a family componentwise through Y(id_{k_i} ∧ f).
  TabulatedGammaSpace space(bound, std::move(values), [levels, cells, y](const GammaMorphism& f) {
    const MappingSpace& a = (*levels)[f.src];
    const MappingSpace& b = (*levels)[f.dst];
    std::vector<SimpMap> yf;
    for (const auto& c : cells) yf.push_back(y.act(smash(GammaMorphism::identity(c.level), f)));
    const int top = static_cast<int>(std::min(a.families.size(), b.families.size())) - 1;
    std::vector<std::vector<int>> img(top + 1);
    for (int d = 0; d <= top; ++d) {
      img[d].resize(a.set.size(d));
      for (int t = 0; t < a.set.size(d); ++t) {
        std::vector<int> fam(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
          std::vector<int> flat = a.exps[i].maps[d][a.families[d][t][i]];
          for (int v = 0; v < static_cast<int>(flat.size()); ++v) {
            int m = 0;
            while (a.exps[i].offsets[d][m + 1] <= v) ++m;
            flat[v] = yf[i](m, flat[v]);
          }
          fam[i] = b.exps[i].find(d, flat);
          if (fam[i] < 0) throw InputError("internal hom: action leaves the function complex");
        }
        auto it = b.index[d].find(fam);
        if (it == b.index[d].end()) throw InputError("internal hom: action does not preserve compatibility");
        img[d][t] = it->second;
      }
    }
    return SimpMap::from_table(a.set, b.set, std::move(img));
  });
  return InternalHom{space, *levels};
}

GammaSpaceMap internal_hom_comparison(const InternalHom& h, const TabulatedGammaSpace& y, int n) {
  const TabulatedGammaSpace target = precompose_smash(y, n);
  GammaSpaceMap out{h.space, target, {}};
  const int bound = std::min(h.space.level_bound(), target.level_bound());
  for (int k = 0; k <= bound; ++k) out.levels.push_back(yoneda_map(h.levels[k], y, n * k));
  return out;
}

}  // namespace gs
