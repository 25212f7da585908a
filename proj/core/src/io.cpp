#include <gammaspace/io.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <set>

namespace gs::io {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

// Cell lookup by id per dimension.
struct CellIndex {
  std::vector<std::map<std::string, int, std::less<>>> by_id;

  int find(int n, const std::string& id) const {
    if (n < 0 || n >= static_cast<int>(by_id.size())) return -1;
    auto it = by_id[n].find(id);
    return it == by_id[n].end() ? -1 : it->second;
  }
};

SimplexRef parse_ref(const json& j, int n, const CellIndex& idx, const char* what) {
  SimplexRef r;
  std::string id;
  if (j.is_string()) {
    id = j.get<std::string>();
  } else if (j.is_object()) {
    id = as_string(field(j, "base", what), what);
    const json& deg = field(j, "deg", what);
    if (!deg.is_array()) throw InputError(std::string(what) + ": deg must be an array");
    for (const auto& d : deg) r.deg.push_back(as_int(d, what));
    for (std::size_t i = 1; i < r.deg.size(); ++i)
      if (r.deg[i] >= r.deg[i - 1]) throw InputError(std::string(what) + ": deg must be strictly decreasing");
  } else {
    throw InputError(std::string(what) + ": malformed simplex reference");
  }
  const int base_dim = n - static_cast<int>(r.deg.size());
  r.base = idx.find(base_dim, id);
  if (r.base < 0)
    throw InputError(std::string(what) + ": unknown cell '" + id + "' in dimension " + std::to_string(base_dim));
  for (std::size_t i = 0; i < r.deg.size(); ++i)
    if (r.deg[i] < 0 || r.deg[i] > n - 1 - static_cast<int>(i))
      throw InputError(std::string(what) + ": degeneracy index out of range");
  return r;
}

}  // namespace

// ---- simplicial sets ----

json to_json(const SimpSet& x) {
  json j;
  j["dim_bound"] = x.dim_bound();
  if (auto b = x.basepoint()) j["pointed"] = x.cell(0, *b).id;
  json cells = json::object();
  for (int n = 0; n <= x.dim_bound(); ++n) {
    if (x.cell_count(n) == 0) continue;
    std::vector<int> order(x.cell_count(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return x.cell(n, a).id < x.cell(n, b).id; });
    json arr = json::array();
    for (int c : order) {
      json cell;
      cell["id"] = x.cell(n, c).id;
      json faces = json::array();
      if (n > 0) {
        const int t = x.table_id(n, c);
        for (int i = 0; i <= n; ++i) faces.push_back(ref_to_json(x, n - 1, x.face(n, t, i)));
      }
      cell["faces"] = std::move(faces);
      arr.push_back(std::move(cell));
    }
    cells[std::to_string(n)] = std::move(arr);
  }
  j["cells"] = std::move(cells);
  return j;
}

SimpSet simpset_from_json(const json& j) {
  const char* what = "simpset";
  const int bound = as_int(field(j, "dim_bound", what), what);
  if (bound < 0 || bound > 16) throw InputError("simpset: dim_bound out of range");
  const json& cells = field(j, "cells", what);
  if (!cells.is_object()) throw InputError("simpset: cells must be an object");
  std::vector<std::vector<const json*>> raw(bound + 1);
  for (const auto& [key, arr] : cells.items()) {
    int n = -1;
    try {
      std::size_t pos = 0;
      n = std::stoi(key, &pos);
      if (pos != key.size()) n = -1;
    } catch (const std::exception&) {
      n = -1;
    }
    if (n < 0 || n > bound) throw InputError("simpset: bad dimension key '" + key + "'");
    if (!arr.is_array()) throw InputError("simpset: cells of dimension " + key + " must be an array");
    for (const auto& c : arr) raw[n].push_back(&c);
  }
  CellIndex idx;
  idx.by_id.resize(bound + 1);
  std::vector<std::vector<Cell>> out(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    std::sort(raw[n].begin(), raw[n].end(), [&](const json* a, const json* b) {
      return as_string(field(*a, "id", what), what) < as_string(field(*b, "id", what), what);
    });
    for (std::size_t c = 0; c < raw[n].size(); ++c) {
      const std::string id = as_string(field(*raw[n][c], "id", what), what);
      if (!idx.by_id[n].emplace(id, static_cast<int>(c)).second)
        throw InputError("simpset: duplicate cell id '" + id + "' in dimension " + std::to_string(n));
    }
  }
  for (int n = 0; n <= bound; ++n) {
    for (const json* c : raw[n]) {
      Cell cell{c->at("id").get<std::string>(), {}};
      const json& faces = c->contains("faces") ? c->at("faces") : json::array();
      if (!faces.is_array() || static_cast<int>(faces.size()) != (n == 0 ? 0 : n + 1))
        throw InputError("simpset: cell '" + cell.id + "' needs " + std::to_string(n == 0 ? 0 : n + 1) + " faces");
      for (const auto& f : faces) cell.faces.push_back(parse_ref(f, n - 1, idx, what));
      out[n].push_back(std::move(cell));
    }
  }
  std::optional<std::string> base;
  if (j.contains("pointed") && !j.at("pointed").is_null()) {
    base = as_string(j.at("pointed"), what);
    if (idx.find(0, *base) < 0) throw InputError("simpset: unknown basepoint '" + *base + "'");
  }
  SimpSet x(bound, std::move(out), base);
  if (!simplicial_identities_hold(x)) throw InputError("simpset: simplicial identities fail");
  return x;
}

json ref_to_json(const SimpSet& x, int n, int table_id) {
  const SimplexRef r = x.ref(n, table_id);
  const int base_dim = n - static_cast<int>(r.deg.size());
  const std::string& id = x.cell(base_dim, r.base).id;
  if (r.deg.empty()) return id;
  return json{{"base", id}, {"deg", r.deg}};
}

int ref_from_json(const SimpSet& x, int n, const json& j) {
  CellIndex idx;
  idx.by_id.resize(x.dim_bound() + 1);
  for (int m = 0; m <= x.dim_bound(); ++m)
    for (int c = 0; c < x.cell_count(m); ++c) idx.by_id[m].emplace(x.cell(m, c).id, c);
  return x.from_ref(n, parse_ref(j, n, idx, "reference"));
}

// ---- maps ----

json to_json(const SimpMap& f) {
  json j = json::object();
  const SimpSet& s = f.source();
  for (int n = 0; n <= f.top(); ++n) {
    if (s.cell_count(n) == 0) continue;
    json level = json::object();
    for (int c = 0; c < s.cell_count(n); ++c) level[s.cell(n, c).id] = ref_to_json(f.target(), n, f.cell_image(n, c));
    j[std::to_string(n)] = std::move(level);
  }
  return j;
}

SimpMap simpmap_from_json(const json& j, const SimpSet& source, const SimpSet& target) {
  if (!j.is_object()) throw InputError("simpmap: expected an object");
  const int top = std::min(source.dim_bound(), target.dim_bound());
  CellIndex idx;
  idx.by_id.resize(target.dim_bound() + 1);
  for (int m = 0; m <= target.dim_bound(); ++m)
    for (int c = 0; c < target.cell_count(m); ++c) idx.by_id[m].emplace(target.cell(m, c).id, c);
  std::vector<std::vector<int>> img(top + 1);
  for (int n = 0; n <= top; ++n) {
    img[n].assign(source.cell_count(n), -1);
    if (source.cell_count(n) == 0) continue;
    const std::string key = std::to_string(n);
    if (!j.contains(key)) throw InputError("simpmap: missing dimension " + key);
    const json& level = j.at(key);
    for (int c = 0; c < source.cell_count(n); ++c) {
      const std::string& id = source.cell(n, c).id;
      if (!level.contains(id)) throw InputError("simpmap: no image for cell '" + id + "'");
      img[n][c] = target.from_ref(n, parse_ref(level.at(id), n, idx, "simpmap"));
    }
  }
  return SimpMap(source, target, img);
}

// ---- categories ----

json to_json(const FinCat& c) {
  json j;
  std::vector<std::string> objects = c.objects();
  std::sort(objects.begin(), objects.end());
  j["objects"] = objects;
  std::vector<int> arrows(c.arrow_count());
  std::iota(arrows.begin(), arrows.end(), 0);
  std::sort(arrows.begin(), arrows.end(), [&](int a, int b) { return c.arrow(a).id < c.arrow(b).id; });
  json arr = json::array();
  for (int a : arrows)
    arr.push_back({{"id", c.arrow(a).id}, {"src", c.object(c.arrow(a).src)}, {"dst", c.object(c.arrow(a).dst)}});
  j["arrows"] = std::move(arr);
  std::vector<std::array<std::string, 3>> comp;
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int f = 0; f < c.arrow_count(); ++f) {
      if (c.is_identity(g) || c.is_identity(f)) continue;
      const int gf = c.compose(g, f);
      if (gf >= 0) comp.push_back({c.arrow(g).id, c.arrow(f).id, c.arrow(gf).id});
    }
  std::sort(comp.begin(), comp.end());
  j["compose"] = comp;
  json ids = json::object();
  for (int x = 0; x < c.object_count(); ++x) ids[c.object(x)] = c.arrow(c.identity(x)).id;
  j["identities"] = std::move(ids);
  return j;
}

FinCat category_from_json(const json& j) {
  const char* what = "category";
  std::vector<std::string> objects;
  std::map<std::string, int> object_index;
  const json& objs = field(j, "objects", what);
  if (!objs.is_array()) throw InputError("category: objects must be an array");
  for (const auto& o : objs) {
    objects.push_back(as_string(o, what));
    object_index.emplace(objects.back(), static_cast<int>(objects.size()) - 1);
  }
  auto object_of = [&](const json& o) {
    const std::string id = as_string(o, what);
    auto it = object_index.find(id);
    if (it == object_index.end()) throw InputError("category: unknown object '" + id + "'");
    return it->second;
  };
  std::vector<FinCat::Arrow> arrows;
  for (const auto& a : field(j, "arrows", what))
    arrows.push_back({as_string(field(a, "id", what), what), object_of(field(a, "src", what)),
                      object_of(field(a, "dst", what))});
  std::vector<std::pair<std::string, std::string>> identities;
  const json& ids = field(j, "identities", what);
  if (!ids.is_object()) throw InputError("category: identities must be an object");
  for (const auto& [obj, arr] : ids.items()) identities.emplace_back(obj, as_string(arr, what));
  std::vector<std::array<std::string, 3>> compose;
  if (j.contains("compose"))
    for (const auto& t : j.at("compose")) {
      if (!t.is_array() || t.size() != 3) throw InputError("category: compose entries are [g, f, gf]");
      compose.push_back({as_string(t[0], what), as_string(t[1], what), as_string(t[2], what)});
    }
  return make_category(objects, arrows, identities, compose);
}

// ---- tabulated Γ-spaces ----

std::vector<GammaMorphism> tabulation_generators(int level_bound) {
  std::vector<GammaMorphism> out;
  for (int n = 0; n <= level_bound; ++n)
    for (int m = 0; m <= level_bound; ++m)
      for (auto& f : enumerate_homs(n, m)) {
        if (f.is_inert()) {
          out.push_back(std::move(f));
          continue;
        }
        if (!f.is_active()) continue;
        std::set<int> image(f.map.begin(), f.map.end());
        const bool injective = static_cast<int>(image.size()) == n;
        const bool surjective = static_cast<int>(image.size()) == m;
        if (injective || surjective) out.push_back(std::move(f));
      }
  return out;
}

json to_json(const TabulatedGammaSpace& x) {
  json j;
  const int top = x.level_bound();
  j["level_bound"] = top;
  json values = json::object();
  for (int n = 0; n <= top; ++n) values[std::to_string(n)] = to_json(x.value(n));
  j["values"] = std::move(values);
  json action = json::array();
  for (const auto& f : tabulation_generators(top)) action.push_back({{"map", f.to_json()}, {"simp_map", to_json(x.act(f))}});
  j["action"] = std::move(action);
  return j;
}

namespace {

// Active f = injection after surjection onto its image.
std::pair<GammaMorphism, GammaMorphism> split_active(const GammaMorphism& f) {
  std::vector<int> image(f.map.begin(), f.map.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const int k = static_cast<int>(image.size());
  std::vector<int> s;
  for (int v : f.map) s.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()) + 1);
  return {GammaMorphism{f.src, k, std::move(s)}, GammaMorphism{k, f.dst, image}};
}

}  // namespace

TabulatedGammaSpace tabulated_from_json(const json& j, int check_level) {
  const char* what = "tabulated";
  const int top = as_int(field(j, "level_bound", what), what);
  if (top < 0 || top > 8) throw InputError("tabulated: level_bound out of range");
  const json& vals = field(j, "values", what);
  std::vector<SimpSet> values;
  for (int n = 0; n <= top; ++n) {
    const std::string key = std::to_string(n);
    if (!vals.contains(key)) throw InputError("tabulated: missing value at level " + key);
    values.push_back(simpset_from_json(vals.at(key)));
  }
  auto table = std::make_shared<std::map<GammaMorphism, SimpMap>>();
  for (const auto& e : field(j, "action", what)) {
    const GammaMorphism f = GammaMorphism::from_json(field(e, "map", what));
    if (f.src > top || f.dst > top) continue;
    SimpMap m = simpmap_from_json(field(e, "simp_map", what), values[f.src], values[f.dst]);
    auto [it, fresh] = table->emplace(f, m);
    if (!fresh && !(it->second == m)) throw InputError("tabulated: conflicting entries for " + f.name());
  }
  for (const auto& g : tabulation_generators(top))
    if (g.src != g.dst || g != GammaMorphism::identity(g.src))
      if (!table->contains(g)) throw InputError("tabulated: missing action of generator " + g.name());
  auto vals_ptr = std::make_shared<std::vector<SimpSet>>(values);
  auto lookup = [table, vals_ptr](const GammaMorphism& f) {
    if (f.src == f.dst && f == GammaMorphism::identity(f.src)) return SimpMap::identity((*vals_ptr)[f.src]);
    return table->at(f);
  };
  TabulatedGammaSpace x(top, values, [table, lookup](const GammaMorphism& f) {
    if (auto it = table->find(f); it != table->end()) return it->second;
    const InertActive ia = factor_inert_active(f);
    const auto [surj, inj] = split_active(ia.active);
    return lookup(ia.inert).then(lookup(surj)).then(lookup(inj));
  });
  const Verdict v = check_functoriality(x, std::min(check_level, top));
  if (!v.holds()) throw InputError("tabulated: action is not functorial: " + v.detail);
  return x;
}

// ---- presented Γ-spaces ----

json to_json(const PresentedGammaSpace& x) {
  json j;
  if (!x.name().empty()) j["name"] = x.name();
  json cells = json::array();
  for (const auto& c : x.cells()) {
    json cell{{"level", c.level}, {"shape", to_json(c.shape)}};
    if (!c.name.empty()) cell["name"] = c.name;
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  json glue = json::array();
  for (const auto& g : x.glue())
    glue.push_back({{"from", g.from}, {"to", g.to}, {"phi", g.phi.to_json()}, {"shape_map", to_json(g.shape_map)}});
  j["glue"] = std::move(glue);
  return j;
}

PresentedGammaSpace presented_from_json(const json& j) {
  const char* what = "presented";
  std::vector<GammaCell> cells;
  for (const auto& c : field(j, "cells", what)) {
    GammaCell cell{as_int(field(c, "level", what), what), simpset_from_json(field(c, "shape", what)), {}};
    if (cell.level < 0) throw InputError("presented: negative level");
    if (c.contains("name")) cell.name = as_string(c.at("name"), what);
    cells.push_back(std::move(cell));
  }
  std::vector<GammaGlue> glue;
  if (j.contains("glue"))
    for (const auto& g : j.at("glue")) {
      GammaGlue e;
      e.from = as_int(field(g, "from", what), what);
      e.to = as_int(field(g, "to", what), what);
      const int nc = static_cast<int>(cells.size());
      if (e.from < 0 || e.from >= nc || e.to < 0 || e.to >= nc) throw InputError("presented: glue cell out of range");
      e.phi = GammaMorphism::from_json(field(g, "phi", what));
      e.shape_map = simpmap_from_json(field(g, "shape_map", what), cells[e.from].shape, cells[e.to].shape);
      glue.push_back(std::move(e));
    }
  std::string name = j.contains("name") ? as_string(j.at("name"), what) : std::string{};
  return PresentedGammaSpace(std::move(cells), std::move(glue), std::move(name));
}

// ---- marked ----

json to_json(const MarkedSimpSet& x) {
  json j = to_json(x.set());
  std::vector<std::string> ids;
  for (int e : x.marked_edges())
    if (x.set().cell_of(1, e) >= 0) ids.push_back(x.set().cell(1, x.set().cell_of(1, e)).id);
  std::sort(ids.begin(), ids.end());
  j["marked"] = ids;
  return j;
}

MarkedSimpSet marked_from_json(const json& j) {
  SimpSet x = simpset_from_json(j);
  std::vector<int> edges;
  if (j.contains("marked")) {
    if (x.dim_bound() < 1) throw InputError("marked: edges require dim_bound >= 1");
    for (const auto& r : j.at("marked")) edges.push_back(ref_from_json(x, 1, r));
  }
  return MarkedSimpSet(std::move(x), edges);
}

// ---- relative nerve input and over-objects ----

json to_json(const RelativeNerveInput& in) {
  json j;
  j["base"] = to_json(in.base);
  json d = json::object();
  for (int x = 0; x < in.base.object_count(); ++x) d[in.base.object(x)] = to_json(in.values[x]);
  for (int a = 0; a < in.base.arrow_count(); ++a)
    if (!in.base.is_identity(a)) d[in.base.arrow(a).id] = to_json(in.arrows[a]);
  j["diagram"] = std::move(d);
  return j;
}

RelativeNerveInput relative_nerve_input_from_json(const json& j) {
  const char* what = "relative-nerve input";
  RelativeNerveInput in;
  in.base = category_from_json(field(j, "base", what));
  const json& d = field(j, "diagram", what);
  for (int x = 0; x < in.base.object_count(); ++x) {
    const std::string& id = in.base.object(x);
    if (!d.contains(id)) throw InputError("diagram: no value for object '" + id + "'");
    in.values.push_back(simpset_from_json(d.at(id)));
  }
  for (int a = 0; a < in.base.arrow_count(); ++a) {
    const auto& ar = in.base.arrow(a);
    if (d.contains(ar.id)) {
      in.arrows.push_back(simpmap_from_json(d.at(ar.id), in.values[ar.src], in.values[ar.dst]));
    } else if (in.base.is_identity(a)) {
      in.arrows.push_back(SimpMap::identity(in.values[ar.src]));
    } else {
      throw InputError("diagram: no map for arrow '" + ar.id + "'");
    }
  }
  validate(in);
  return in;
}

json to_json(const OverObject& x) {
  json j = to_json(x.total);
  j["proj"] = to_json(x.proj);
  return j;
}

OverObject over_object_from_json(const json& j, const SimpSet& base_nerve) {
  MarkedSimpSet total = marked_from_json(j);
  SimpMap proj = simpmap_from_json(field(j, "proj", "over-object"), total.set(), base_nerve);
  return make_over_object(std::move(total), std::move(proj));
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

}  // namespace gs::io
