#include <gammaspace/fincat.hpp>

#include <algorithm>
#include <map>
#include <unordered_map>

namespace gs {

FinCat::FinCat(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<int> identities,
               std::vector<int> composites, bool check_associativity)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      identities_(std::move(identities)),
      compose_(std::move(composites)) {
  const int no = object_count();
  const int na = arrow_count();
  for (int a = 0; a < na; ++a) arrow_index_.emplace(arrows_[a].id, a);
  {
    std::vector<std::string> names = objects_;
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end()) throw InputError("category: duplicate object id");
    names.clear();
    for (const Arrow& a : arrows_) names.push_back(a.id);
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end()) throw InputError("category: duplicate arrow id");
  }
  if (static_cast<int>(identities_.size()) != no) throw InputError("category: one identity per object required");
  if (compose_.size() != static_cast<std::size_t>(na) * na) throw InputError("category: composition table has wrong size");
  for (const Arrow& a : arrows_)
    if (a.src < 0 || a.src >= no || a.dst < 0 || a.dst >= no)
      throw InputError("category: arrow '" + a.id + "' has an unknown endpoint");
  hom_.assign(static_cast<std::size_t>(no) * no, {});
  for (int a = 0; a < na; ++a) hom_[static_cast<std::size_t>(arrows_[a].src) * no + arrows_[a].dst].push_back(a);
  for (int x = 0; x < no; ++x) {
    const int i = identities_[x];
    if (i < 0 || i >= na || arrows_[i].src != x || arrows_[i].dst != x)
      throw InputError("category: identity of '" + objects_[x] + "' is not an endomorphism of it");
  }
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      const int gf = compose(g, f);
      const bool composable = arrows_[f].dst == arrows_[g].src;
      if (!composable) {
        if (gf != -1) throw InputError("category: composite given for non-composable pair");
        continue;
      }
      if (gf < 0 || gf >= na) throw InputError("category: missing composite " + arrows_[g].id + " o " + arrows_[f].id);
      if (arrows_[gf].src != arrows_[f].src || arrows_[gf].dst != arrows_[g].dst)
        throw InputError("category: composite " + arrows_[g].id + " o " + arrows_[f].id + " has wrong endpoints");
    }
  for (int f = 0; f < na; ++f) {
    if (compose(identities_[arrows_[f].dst], f) != f || compose(f, identities_[arrows_[f].src]) != f)
      throw InputError("category: unit law fails for '" + arrows_[f].id + "'");
  }
  if (!check_associativity) return;
  for (int f = 0; f < na; ++f)
    for (int x = 0; x < no; ++x)
      for (int g : hom_[static_cast<std::size_t>(arrows_[f].dst) * no + x])
        for (int y = 0; y < no; ++y)
          for (int h : hom_[static_cast<std::size_t>(x) * no + y])
            if (compose(h, compose(g, f)) != compose(compose(h, g), f))
              throw InputError("category: associativity fails at " + arrows_[h].id + ", " + arrows_[g].id + ", " +
                               arrows_[f].id);
}

int FinCat::inverse(int a) const {
  for (int b : hom(arrows_[a].dst, arrows_[a].src))
    if (compose(b, a) == identity(arrows_[a].src) && compose(a, b) == identity(arrows_[a].dst)) return b;
  return -1;
}

int FinCat::find_object(const std::string& id) const {
  auto it = std::find(objects_.begin(), objects_.end(), id);
  return it == objects_.end() ? -1 : static_cast<int>(it - objects_.begin());
}

int FinCat::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  return it == arrow_index_.end() ? -1 : it->second;
}

bool is_functor(const FinCat& c, const FinCat& d, const CatFunctor& f) {
  if (static_cast<int>(f.on_objects.size()) != c.object_count() ||
      static_cast<int>(f.on_arrows.size()) != c.arrow_count())
    return false;
  for (int x : f.on_objects)
    if (x < 0 || x >= d.object_count()) return false;
  for (int a = 0; a < c.arrow_count(); ++a) {
    const int b = f.on_arrows[a];
    if (b < 0 || b >= d.arrow_count()) return false;
    if (d.arrow(b).src != f.on_objects[c.arrow(a).src] || d.arrow(b).dst != f.on_objects[c.arrow(a).dst]) return false;
  }
  for (int x = 0; x < c.object_count(); ++x)
    if (f.on_arrows[c.identity(x)] != d.identity(f.on_objects[x])) return false;
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int h = 0; h < c.arrow_count(); ++h) {
      const int gh = c.compose(g, h);
      if (gh >= 0 && f.on_arrows[gh] != d.compose(f.on_arrows[g], f.on_arrows[h])) return false;
    }
  return true;
}

CatFunctor compose_functors(const CatFunctor& f, const CatFunctor& g) {
  CatFunctor out;
  for (int x : f.on_objects) out.on_objects.push_back(g.on_objects[x]);
  for (int a : f.on_arrows) out.on_arrows.push_back(g.on_arrows[a]);
  return out;
}

CatFunctor identity_functor(const FinCat& c) {
  CatFunctor f;
  for (int x = 0; x < c.object_count(); ++x) f.on_objects.push_back(x);
  for (int a = 0; a < c.arrow_count(); ++a) f.on_arrows.push_back(a);
  return f;
}

FinCat make_category(const std::vector<std::string>& objects, const std::vector<FinCat::Arrow>& arrows,
                     const std::vector<std::pair<std::string, std::string>>& identities,
                     const std::vector<std::array<std::string, 3>>& compose) {
  std::map<std::string, int> arrow_index;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (!arrow_index.emplace(arrows[a].id, static_cast<int>(a)).second)
      throw InputError("category: duplicate arrow id '" + arrows[a].id + "'");
  std::map<std::string, int> object_index;
  for (std::size_t x = 0; x < objects.size(); ++x)
    if (!object_index.emplace(objects[x], static_cast<int>(x)).second)
      throw InputError("category: duplicate object '" + objects[x] + "'");
  auto arrow_of = [&](const std::string& id) {
    auto it = arrow_index.find(id);
    if (it == arrow_index.end()) throw InputError("category: unknown arrow '" + id + "'");
    return it->second;
  };
  std::vector<int> ids(objects.size(), -1);
  for (const auto& [obj, arr] : identities) {
    auto it = object_index.find(obj);
    if (it == object_index.end()) throw InputError("category: identity for unknown object '" + obj + "'");
    ids[it->second] = arrow_of(arr);
  }
  for (std::size_t x = 0; x < objects.size(); ++x)
    if (ids[x] < 0) throw InputError("category: no identity for '" + objects[x] + "'");
  const std::size_t na = arrows.size();
  std::vector<int> table(na * na, -1);
  for (const auto& [g, f, gf] : compose) {
    const int gi = arrow_of(g), fi = arrow_of(f), gfi = arrow_of(gf);
    int& slot = table[static_cast<std::size_t>(gi) * na + fi];
    if (slot >= 0 && slot != gfi) throw InputError("category: conflicting composites for " + g + " o " + f);
    slot = gfi;
  }
  // Unit laws are implied, so they may be omitted from the list.
  for (std::size_t a = 0; a < na; ++a) {
    const auto& ar = arrows[a];
    const int s = ar.src, t = ar.dst;
    if (s < 0 || t < 0 || s >= static_cast<int>(objects.size()) || t >= static_cast<int>(objects.size()))
      throw InputError("category: arrow '" + ar.id + "' has an unknown endpoint");
    int& left = table[static_cast<std::size_t>(ids[t]) * na + a];
    if (left < 0) left = static_cast<int>(a);
    int& right = table[a * na + ids[s]];
    if (right < 0) right = static_cast<int>(a);
  }
  return FinCat(objects, arrows, ids, std::move(table));
}

namespace {

// Category from objects and a composition rule; `arrows` must include identities.
FinCat from_rule(std::vector<std::string> objects, std::vector<FinCat::Arrow> arrows, std::vector<int> ids,
                 const std::function<int(int, int)>& comp) {
  const std::size_t na = arrows.size();
  std::vector<int> table(na * na, -1);
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t f = 0; f < na; ++f)
      if (arrows[f].dst == arrows[g].src) table[g * na + f] = comp(static_cast<int>(g), static_cast<int>(f));
  return FinCat(std::move(objects), std::move(arrows), std::move(ids), std::move(table), false);
}

}  // namespace

FinCat terminal_category() { return discrete_category(1); }

FinCat discrete_category(int n) {
  std::vector<std::string> objs;
  std::vector<FinCat::Arrow> arrows;
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    objs.push_back(std::to_string(i));
    arrows.push_back({"id" + std::to_string(i), i, i});
    ids.push_back(i);
  }
  return from_rule(objs, arrows, ids, [](int g, int) { return g; });
}

FinCat ordinal_category(int n) {
  std::vector<std::string> objs;
  std::vector<FinCat::Arrow> arrows;
  std::vector<int> ids(n + 1);
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i <= n; ++i) objs.push_back(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      index[{i, j}] = static_cast<int>(arrows.size());
      if (i == j) ids[i] = static_cast<int>(arrows.size());
      arrows.push_back({std::to_string(i) + "<=" + std::to_string(j), i, j});
    }
  return from_rule(objs, arrows, ids,
                   [&](int g, int f) { return index.at({arrows[f].src, arrows[g].dst}); });
}

FinCat walking_iso() {
  std::vector<FinCat::Arrow> arrows{{"id0", 0, 0}, {"id1", 1, 1}, {"u", 0, 1}, {"v", 1, 0}};
  std::map<std::pair<int, int>, int> by_ends{{{0, 0}, 0}, {{1, 1}, 1}, {{0, 1}, 2}, {{1, 0}, 3}};
  return from_rule({"0", "1"}, arrows, {0, 1},
                   [&](int g, int f) { return by_ends.at({arrows[f].src, arrows[g].dst}); });
}

FinCat cyclic_group(int n) {
  std::vector<FinCat::Arrow> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back({i == 0 ? std::string("e") : "g" + std::to_string(i), 0, 0});
  return from_rule({"*"}, arrows, {0}, [n](int g, int f) { return (g + f) % n; });
}

FinCat product_category(const FinCat& c, const FinCat& d) {
  std::vector<std::string> objs;
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < d.object_count(); ++y) objs.push_back("(" + c.object(x) + "," + d.object(y) + ")");
  std::vector<FinCat::Arrow> arrows;
  const int nd = d.object_count();
  const int ad = d.arrow_count();
  for (int a = 0; a < c.arrow_count(); ++a)
    for (int b = 0; b < ad; ++b)
      arrows.push_back({"(" + c.arrow(a).id + "," + d.arrow(b).id + ")", c.arrow(a).src * nd + d.arrow(b).src,
                        c.arrow(a).dst * nd + d.arrow(b).dst});
  std::vector<int> ids;
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < nd; ++y) ids.push_back(c.identity(x) * ad + d.identity(y));
  return from_rule(objs, arrows, ids, [&](int g, int f) {
    return c.compose(g / ad, f / ad) * ad + d.compose(g % ad, f % ad);
  });
}

SubCat full_subcategory(const FinCat& c, const std::vector<int>& objects) {
  std::vector<int> local(c.object_count(), -1);
  std::vector<std::string> names;
  for (int x : objects) {
    local[x] = static_cast<int>(names.size());
    names.push_back(c.object(x));
  }
  std::vector<FinCat::Arrow> arrows;
  std::vector<int> arrow_local(c.arrow_count(), -1);
  SubCat out;
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (local[c.arrow(a).src] < 0 || local[c.arrow(a).dst] < 0) continue;
    arrow_local[a] = static_cast<int>(arrows.size());
    out.inclusion.on_arrows.push_back(a);
    arrows.push_back({c.arrow(a).id, local[c.arrow(a).src], local[c.arrow(a).dst]});
  }
  std::vector<int> ids;
  for (int x : objects) ids.push_back(arrow_local[c.identity(x)]);
  out.inclusion.on_objects = objects;
  const auto& back = out.inclusion.on_arrows;
  out.cat = from_rule(names, arrows, ids, [&](int g, int f) { return arrow_local[c.compose(back[g], back[f])]; });
  return out;
}

SubCat max_subgroupoid(const FinCat& c) {
  std::vector<FinCat::Arrow> arrows;
  std::vector<int> arrow_local(c.arrow_count(), -1);
  SubCat out;
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (!c.is_iso(a)) continue;
    arrow_local[a] = static_cast<int>(arrows.size());
    out.inclusion.on_arrows.push_back(a);
    arrows.push_back(c.arrow(a));
  }
  std::vector<int> ids;
  for (int x = 0; x < c.object_count(); ++x) {
    ids.push_back(arrow_local[c.identity(x)]);
    out.inclusion.on_objects.push_back(x);
  }
  const auto& back = out.inclusion.on_arrows;
  out.cat = from_rule(c.objects(), arrows, ids, [&](int g, int f) { return arrow_local[c.compose(back[g], back[f])]; });
  return out;
}

std::vector<int> iso_classes(const FinCat& c) {
  std::vector<int> rep(c.object_count(), -1);
  for (int x = 0; x < c.object_count(); ++x) {
    if (rep[x] >= 0) continue;
    rep[x] = x;
    for (int y = x + 1; y < c.object_count(); ++y) {
      if (rep[y] >= 0) continue;
      for (int a : c.hom(x, y))
        if (c.is_iso(a)) {
          rep[y] = x;
          break;
        }
    }
  }
  return rep;
}

SubCat skeleton(const FinCat& c) {
  const auto rep = iso_classes(c);
  std::vector<int> objs;
  for (int x = 0; x < c.object_count(); ++x)
    if (rep[x] == x) objs.push_back(x);
  return full_subcategory(c, objs);
}

void enumerate_functors(const FinCat& d, const FinCat& c, Budget& budget, bool bijective,
                        const std::function<bool(const CatFunctor&)>& visit) {
  if (bijective && (d.object_count() != c.object_count() || d.arrow_count() != c.arrow_count())) return;
  const int no = d.object_count();
  const int na = d.arrow_count();
  // Composable triples (g, f, gf) touching each arrow, for incremental checks.
  std::vector<std::vector<std::array<int, 3>>> touching(na);
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      const int gf = d.compose(g, f);
      if (gf < 0) continue;
      touching[g].push_back({g, f, gf});
      if (f != g) touching[f].push_back({g, f, gf});
      if (gf != g && gf != f) touching[gf].push_back({g, f, gf});
    }
  std::vector<int> order;
  for (int a = 0; a < na; ++a)
    if (!d.is_identity(a)) order.push_back(a);
  CatFunctor cur;
  cur.on_objects.assign(no, -1);
  cur.on_arrows.assign(na, -1);
  std::vector<char> used_obj(c.object_count(), 0), used_arr(c.arrow_count(), 0);
  bool stop = false;

  auto consistent = [&](int a) {
    for (const auto& [g, f, gf] : touching[a]) {
      const int fg = cur.on_arrows[g], ff = cur.on_arrows[f], fgf = cur.on_arrows[gf];
      if (fg >= 0 && ff >= 0 && fgf >= 0 && c.compose(fg, ff) != fgf) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> arrows_step = [&](std::size_t k) {
    if (stop) return;
    if (k == order.size()) {
      if (!visit(cur)) stop = true;
      return;
    }
    const int a = order[k];
    for (int b : c.hom(cur.on_objects[d.arrow(a).src], cur.on_objects[d.arrow(a).dst])) {
      budget.charge();
      if (bijective && used_arr[b]) continue;
      cur.on_arrows[a] = b;
      if (consistent(a)) {
        used_arr[b] = 1;
        arrows_step(k + 1);
        used_arr[b] = 0;
      }
      cur.on_arrows[a] = -1;
      if (stop) return;
    }
  };

  std::function<void(int)> objects_step = [&](int x) {
    if (stop) return;
    if (x == no) {
      bool ok = true;
      for (int y = 0; y < no && ok; ++y) {
        const int i = d.identity(y);
        cur.on_arrows[i] = c.identity(cur.on_objects[y]);
        used_arr[cur.on_arrows[i]] = 1;
      }
      for (int y = 0; y < no && ok; ++y) ok = consistent(d.identity(y));
      if (ok) arrows_step(0);
      for (int y = 0; y < no; ++y) {
        used_arr[cur.on_arrows[d.identity(y)]] = 0;
        cur.on_arrows[d.identity(y)] = -1;
      }
      return;
    }
    for (int y = 0; y < c.object_count(); ++y) {
      budget.charge();
      if (bijective && used_obj[y]) continue;
      // Hom-set sizes must match under a bijection.
      cur.on_objects[x] = y;
      bool ok = true;
      if (bijective) {
        for (int z = 0; z <= x && ok; ++z) {
          const int w = cur.on_objects[z];
          ok = d.hom(x, z).size() == c.hom(y, w).size() && d.hom(z, x).size() == c.hom(w, y).size();
        }
      }
      if (ok) {
        used_obj[y] = 1;
        objects_step(x + 1);
        used_obj[y] = 0;
      }
      cur.on_objects[x] = -1;
      if (stop) return;
    }
  };
  objects_step(0);
}

FunctorCategory functor_category(const FinCat& d, const FinCat& c, Budget& budget) {
  FunctorCategory out;
  enumerate_functors(d, c, budget, false, [&](const CatFunctor& f) {
    out.functors.push_back(f);
    return true;
  });
  const int nf = static_cast<int>(out.functors.size());
  const int no = d.object_count();
  std::vector<std::string> objs;
  for (int i = 0; i < nf; ++i) objs.push_back("F" + std::to_string(i));
  std::vector<FinCat::Arrow> arrows;
  std::map<std::vector<int>, int> index;  // (src, dst, components...) -> arrow
  std::vector<int> ids(nf, -1);
  for (int s = 0; s < nf; ++s)
    for (int t = 0; t < nf; ++t) {
      const CatFunctor& F = out.functors[s];
      const CatFunctor& G = out.functors[t];
      std::vector<int> comp(no, -1);
      std::function<void(int)> step = [&](int x) {
        if (x == no) {
          for (int a = 0; a < d.arrow_count(); ++a) {
            const int u = d.arrow(a).src, v = d.arrow(a).dst;
            if (c.compose(G.on_arrows[a], comp[u]) != c.compose(comp[v], F.on_arrows[a])) return;
          }
          std::vector<int> key{s, t};
          key.insert(key.end(), comp.begin(), comp.end());
          const int id = static_cast<int>(arrows.size());
          index.emplace(key, id);
          bool is_id = s == t;
          for (int y = 0; y < no && is_id; ++y) is_id = comp[y] == c.identity(F.on_objects[y]);
          if (is_id) ids[s] = id;
          arrows.push_back({"F" + std::to_string(s) + "=>F" + std::to_string(t) + "#" +
                                std::to_string(index.size() - 1),
                            s, t});
          out.components.push_back(comp);
          return;
        }
        for (int b : c.hom(F.on_objects[x], G.on_objects[x])) {
          budget.charge();
          comp[x] = b;
          step(x + 1);
        }
        comp[x] = -1;
      };
      step(0);
    }
  // Name transformations by position within their hom-set.
  std::map<std::pair<int, int>, int> seen;
  for (auto& a : arrows) {
    const int k = seen[{a.src, a.dst}]++;
    a.id = "F" + std::to_string(a.src) + "=>F" + std::to_string(a.dst) + "#" + std::to_string(k);
  }
  const auto& comps = out.components;
  out.cat = from_rule(objs, arrows, ids, [&](int g, int f) {
    std::vector<int> key{arrows[f].src, arrows[g].dst};
    for (int y = 0; y < no; ++y) key.push_back(c.compose(comps[g][y], comps[f][y]));
    return index.at(key);
  });
  return out;
}

bool is_fully_faithful(const FinCat& c, const FinCat& d, const CatFunctor& f) {
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y) {
      const auto& src = c.hom(x, y);
      const auto& tgt = d.hom(f.on_objects[x], f.on_objects[y]);
      if (src.size() != tgt.size()) return false;
      std::vector<int> img;
      for (int a : src) img.push_back(f.on_arrows[a]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    }
  return true;
}

bool is_essentially_surjective(const FinCat& c, const FinCat& d, const CatFunctor& f) {
  const auto rep = iso_classes(d);
  std::vector<char> hit(d.object_count(), 0);
  for (int x = 0; x < c.object_count(); ++x) hit[rep[f.on_objects[x]]] = 1;
  for (int y = 0; y < d.object_count(); ++y)
    if (!hit[rep[y]]) return false;
  return true;
}

namespace {

json functor_json(const FinCat& c, const FinCat& d, const CatFunctor& f) {
  json objs = json::object(), arrs = json::object();
  for (int x = 0; x < c.object_count(); ++x) objs[c.object(x)] = d.object(f.on_objects[x]);
  for (int a = 0; a < c.arrow_count(); ++a) arrs[c.arrow(a).id] = d.arrow(f.on_arrows[a]).id;
  return json{{"objects", objs}, {"arrows", arrs}};
}

// Sorted profile of hom-set sizes between objects; invariant under isomorphism.
std::vector<std::size_t> hom_profile(const FinCat& c) {
  std::vector<std::size_t> p;
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y) p.push_back(c.hom(x, y).size());
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

EquivalenceResult category_iso_check(const FinCat& c, const FinCat& d, Budget& budget) {
  EquivalenceResult res;
  res.verdict.tier = "iso";
  res.verdict.range = "exhaustive";
  if (c.object_count() != d.object_count() || c.arrow_count() != d.arrow_count() || hom_profile(c) != hom_profile(d)) {
    res.verdict.status = Status::fails;
    res.verdict.detail = "object, arrow or hom-set counts differ";
    return res;
  }
  try {
    enumerate_functors(c, d, budget, true, [&](const CatFunctor& f) {
      res.witness = f;
      return false;
    });
  } catch (const BudgetExceeded& e) {
    res.verdict.status = Status::inconclusive;
    res.verdict.detail = e.what();
    return res;
  }
  if (res.witness) {
    res.verdict.status = Status::holds;
    res.verdict.witness = functor_json(c, d, *res.witness);
  } else {
    res.verdict.status = Status::fails;
    res.verdict.detail = "no isomorphism of categories exists";
  }
  return res;
}

EquivalenceResult equivalence_check(const FinCat& c, const FinCat& d, Budget& budget) {
  EquivalenceResult res;
  res.verdict.tier = "cat-equiv";
  res.verdict.range = "exhaustive";
  const SubCat sc = skeleton(c);
  const SubCat sd = skeleton(d);
  if (sc.cat.object_count() != sd.cat.object_count()) {
    res.verdict.status = Status::fails;
    res.verdict.detail = "isomorphism class counts differ: " + std::to_string(sc.cat.object_count()) + " vs " +
                         std::to_string(sd.cat.object_count());
    res.verdict.witness = json{{"left_classes", sc.cat.object_count()}, {"right_classes", sd.cat.object_count()}};
    return res;
  }
  EquivalenceResult iso = category_iso_check(sc.cat, sd.cat, budget);
  res.verdict.status = iso.verdict.status;
  if (!iso.verdict.holds()) {
    res.verdict.detail = iso.verdict.status == Status::fails ? "skeleta are not isomorphic" : iso.verdict.detail;
    return res;
  }
  // Lift the skeletal isomorphism to C -> D through chosen isomorphisms x -> rep(x).
  const auto rep = iso_classes(c);
  std::vector<int> skel_index(c.object_count(), -1);
  for (int i = 0; i < sc.cat.object_count(); ++i) skel_index[sc.inclusion.on_objects[i]] = i;
  std::vector<int> to_rep(c.object_count(), -1);
  for (int x = 0; x < c.object_count(); ++x) {
    if (rep[x] == x) {
      to_rep[x] = c.identity(x);
      continue;
    }
    for (int a : c.hom(x, rep[x]))
      if (c.is_iso(a)) {
        to_rep[x] = a;
        break;
      }
  }
  std::vector<int> skel_arrow(c.arrow_count(), -1);
  for (int i = 0; i < sc.cat.arrow_count(); ++i) skel_arrow[sc.inclusion.on_arrows[i]] = i;
  CatFunctor w;
  for (int x = 0; x < c.object_count(); ++x)
    w.on_objects.push_back(sd.inclusion.on_objects[iso.witness->on_objects[skel_index[rep[x]]]]);
  for (int a = 0; a < c.arrow_count(); ++a) {
    const int x = c.arrow(a).src, y = c.arrow(a).dst;
    const int moved = c.compose(to_rep[y], c.compose(a, c.inverse(to_rep[x])));
    w.on_arrows.push_back(sd.inclusion.on_arrows[iso.witness->on_arrows[skel_arrow[moved]]]);
  }
  if (!is_functor(c, d, w) || !is_equivalence(c, d, w)) {
    res.verdict.status = Status::fails;
    res.verdict.detail = "internal: lifted functor is not an equivalence";
    return res;
  }
  res.witness = w;
  res.verdict.witness = functor_json(c, d, w);
  return res;
}

namespace {

Slice slice_impl(const FinCat& c, int object, bool under) {
  Slice out;
  std::vector<std::string> objs;
  for (int a = 0; a < c.arrow_count(); ++a) {
    if ((under ? c.arrow(a).src : c.arrow(a).dst) != object) continue;
    objs.push_back(c.arrow(a).id);
    out.arrow_of_object.push_back(a);
    out.projection.on_objects.push_back(under ? c.arrow(a).dst : c.arrow(a).src);
  }
  std::vector<FinCat::Arrow> arrows;
  std::map<std::pair<int, int>, int> index;  // (source object, arrow of C) -> arrow
  std::vector<int> ids(objs.size(), -1);
  // Under c: (f: c -> x) -> (g: c -> y) is a: x -> y with a o f = g.
  // Over c: (g: y -> c) -> (f: x -> c) is a: y -> x with f o a = g.
  for (std::size_t s = 0; s < objs.size(); ++s)
    for (std::size_t t = 0; t < objs.size(); ++t) {
      const int fs = out.arrow_of_object[s], ft = out.arrow_of_object[t];
      const int x = out.projection.on_objects[s], y = out.projection.on_objects[t];
      for (int a : c.hom(x, y)) {
        if ((under ? c.compose(a, fs) : c.compose(ft, a)) != (under ? ft : fs)) continue;
        index[{static_cast<int>(s), a}] = static_cast<int>(arrows.size());
        if (s == t && a == c.identity(x)) ids[s] = static_cast<int>(arrows.size());
        arrows.push_back({c.arrow(a).id + "@" + objs[s], static_cast<int>(s), static_cast<int>(t)});
        out.projection.on_arrows.push_back(a);
      }
    }
  const auto& proj = out.projection.on_arrows;
  out.cat = from_rule(objs, arrows, ids, [&](int g, int f) {
    return index.at({arrows[f].src, c.compose(proj[g], proj[f])});
  });
  return out;
}

}  // namespace

Slice coslice(const FinCat& c, int object) { return slice_impl(c, object, true); }
Slice slice(const FinCat& c, int object) { return slice_impl(c, object, false); }

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

// Chain with identities removed, and the EZ degeneracy list of the original.
SimplexRef chain_ref(const FinCat& c, const std::vector<int>& chain,
                     const std::vector<std::unordered_map<std::vector<int>, int, VecHash>>& index, int vertex) {
  std::vector<int> core;
  std::vector<int> deg;
  for (std::size_t p = 0; p < chain.size(); ++p) {
    if (c.is_identity(chain[p]))
      deg.push_back(static_cast<int>(p));
    else
      core.push_back(chain[p]);
  }
  std::reverse(deg.begin(), deg.end());
  if (core.empty()) return SimplexRef{vertex, deg};
  return SimplexRef{index[core.size()].at(core), deg};
}

}  // namespace

SimpSet nerve(const FinCat& c, int dim_bound) {
  std::vector<std::vector<Cell>> cells(dim_bound + 1);
  std::vector<std::vector<std::vector<int>>> chains(dim_bound + 1);
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index(dim_bound + 1);
  for (int x = 0; x < c.object_count(); ++x) cells[0].push_back(Cell{c.object(x), {}});
  std::vector<int> nonid;
  for (int a = 0; a < c.arrow_count(); ++a)
    if (!c.is_identity(a)) nonid.push_back(a);
  for (int a : nonid) chains[dim_bound >= 1 ? 1 : 0].push_back({a});
  for (int n = 2; n <= dim_bound; ++n)
    for (const auto& ch : chains[n - 1])
      for (int a : nonid)
        if (c.arrow(a).src == c.arrow(ch.back()).dst) {
          auto next = ch;
          next.push_back(a);
          chains[n].push_back(std::move(next));
        }
  for (int n = 1; n <= dim_bound; ++n)
    for (std::size_t i = 0; i < chains[n].size(); ++i) index[n].emplace(chains[n][i], static_cast<int>(i));
  for (int n = 1; n <= dim_bound; ++n) {
    for (const auto& ch : chains[n]) {
      std::string id;
      for (std::size_t p = 0; p < ch.size(); ++p) id += (p ? ";" : "") + c.arrow(ch[p]).id;
      Cell cell{id, {}};
      for (int i = 0; i <= n; ++i) {
        std::vector<int> face;
        int vertex = 0;
        if (n == 1) {
          vertex = i == 0 ? c.arrow(ch[0]).dst : c.arrow(ch[0]).src;
        } else if (i == 0) {
          face.assign(ch.begin() + 1, ch.end());
        } else if (i == n) {
          face.assign(ch.begin(), ch.end() - 1);
        } else {
          face.assign(ch.begin(), ch.begin() + (i - 1));
          face.push_back(c.compose(ch[i], ch[i - 1]));
          face.insert(face.end(), ch.begin() + (i + 1), ch.end());
        }
        if (n == 1) {
          cell.faces.push_back(SimplexRef{vertex, {}});
        } else {
          const int v = c.arrow(face.front()).src;
          cell.faces.push_back(chain_ref(c, face, index, v));
        }
      }
      cells[n].push_back(std::move(cell));
    }
  }
  return SimpSet(dim_bound, std::move(cells));
}

std::vector<int> nerve_chain(const FinCat& c, const SimpSet& nc, int n, int x) {
  std::vector<int> chain;
  for (int p = 0; p < n; ++p) {
    const std::array<int, 2> pos{p, p + 1};
    const int e = nc.restrict_to(n, x, pos);
    const int cell = nc.cell_of(1, e);
    if (cell >= 0) {
      const std::string& id = nc.cell(1, cell).id;
      chain.push_back(c.find_arrow(id));
    } else {
      chain.push_back(c.identity(nc.base_cell(1, e)));
    }
  }
  return chain;
}

SimpMap nerve_map(const FinCat& c, const FinCat& d, const CatFunctor& f, const SimpSet& nc, const SimpSet& nd) {
  const int top = std::min(nc.dim_bound(), nd.dim_bound());
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index(nd.dim_bound() + 1);
  for (int n = 1; n <= nd.dim_bound(); ++n)
    for (int cell = 0; cell < nd.cell_count(n); ++cell) {
      const auto ch = nerve_chain(d, nd, n, nd.table_id(n, cell));
      index[n].emplace(ch, cell);
    }
  std::vector<std::vector<int>> images(top + 1);
  for (int x = 0; x < nc.cell_count(0); ++x) images[0].push_back(nd.table_id(0, f.on_objects[x]));
  for (int n = 1; n <= top; ++n)
    for (int cell = 0; cell < nc.cell_count(n); ++cell) {
      auto ch = nerve_chain(c, nc, n, nc.table_id(n, cell));
      for (int& a : ch) a = f.on_arrows[a];
      const int v = f.on_objects[c.arrow(nerve_chain(c, nc, n, nc.table_id(n, cell)).front()).src];
      images[n].push_back(nd.from_ref(n, chain_ref(d, ch, index, v)));
    }
  return SimpMap(nc, nd, images);
}

SimpSet interval_groupoid_nerve(int dim_bound) { return nerve(walking_iso(), dim_bound); }

}  // namespace gs
