#include <gammaspace/gamma_op.hpp>

#include <algorithm>

namespace gs {

GammaMorphism GammaMorphism::identity(int n) {
  GammaMorphism f{n, n, {}};
  for (int i = 1; i <= n; ++i) f.map.push_back(i);
  return f;
}

GammaMorphism GammaMorphism::zero(int n, int m) { return GammaMorphism{n, m, std::vector<int>(n, 0)}; }

bool GammaMorphism::is_inert() const {
  std::vector<int> hits(dst + 1, 0);
  for (int a : map) ++hits[a];
  for (int j = 1; j <= dst; ++j)
    if (hits[j] != 1) return false;
  return true;
}

bool GammaMorphism::is_active() const {
  return std::none_of(map.begin(), map.end(), [](int a) { return a == 0; });
}

std::vector<int> GammaMorphism::support() const {
  std::vector<int> s;
  for (int i = 1; i <= src; ++i)
    if (map[i - 1] != 0) s.push_back(i);
  return s;
}

std::string GammaMorphism::name() const {
  std::string s = std::to_string(src) + ">" + std::to_string(dst) + ":";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (dst > 9 && i > 0) s += ",";
    s += std::to_string(map[i]);
  }
  return s;
}

json GammaMorphism::to_json() const { return json{{"src", src}, {"dst", dst}, {"map", map}}; }

GammaMorphism GammaMorphism::make(int src, int dst, std::vector<int> map) {
  if (src < 0 || dst < 0) throw InputError("gamma morphism: negative level");
  if (static_cast<int>(map.size()) != src)
    throw InputError("gamma morphism: map has " + std::to_string(map.size()) + " entries, expected " +
                     std::to_string(src));
  for (int a : map)
    if (a < 0 || a > dst) throw InputError("gamma morphism: entry " + std::to_string(a) + " out of range 0.." +
                                           std::to_string(dst));
  return GammaMorphism{src, dst, std::move(map)};
}

GammaMorphism GammaMorphism::from_json(const json& j) {
  try {
    return make(j.at("src").get<int>(), j.at("dst").get<int>(), j.at("map").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw InputError(std::string("gamma morphism: ") + e.what());
  }
}

GammaMorphism compose(const GammaMorphism& g, const GammaMorphism& f) {
  if (f.dst != g.src) throw InputError("gamma morphism: composing " + g.name() + " after " + f.name());
  GammaMorphism h{f.src, g.dst, std::vector<int>(f.src)};
  for (int i = 0; i < f.src; ++i) h.map[i] = g(f.map[i]);
  return h;
}

InertActive factor_inert_active(const GammaMorphism& f) {
  InertActive out;
  out.support = f.support();
  const int s = static_cast<int>(out.support.size());
  out.inert = GammaMorphism{f.src, s, std::vector<int>(f.src, 0)};
  out.active = GammaMorphism{s, f.dst, std::vector<int>(s)};
  for (int j = 0; j < s; ++j) {
    out.inert.map[out.support[j] - 1] = j + 1;
    out.active.map[j] = f(out.support[j]);
  }
  return out;
}

GammaMorphism smash(const GammaMorphism& a, const GammaMorphism& b) {
  GammaMorphism h{a.src * b.src, a.dst * b.dst, {}};
  h.map.resize(h.src);
  for (int i = 1; i <= a.src; ++i)
    for (int j = 1; j <= b.src; ++j) h.map[smash_index(i, j, b.src) - 1] = smash_index(a(i), b(j), b.dst);
  return h;
}

GammaMorphism sum(const GammaMorphism& a, const GammaMorphism& b) {
  GammaMorphism h{a.src + b.src, a.dst + b.dst, {}};
  for (int v : a.map) h.map.push_back(v);
  for (int v : b.map) h.map.push_back(v == 0 ? 0 : v + a.dst);
  return h;
}

GammaMorphism delta_first(int k, int l) {
  GammaMorphism f{k + l, k, std::vector<int>(k + l, 0)};
  for (int i = 1; i <= k; ++i) f.map[i - 1] = i;
  return f;
}

GammaMorphism delta_second(int k, int l) {
  GammaMorphism f{k + l, l, std::vector<int>(k + l, 0)};
  for (int j = 1; j <= l; ++j) f.map[k + j - 1] = j;
  return f;
}

GammaMorphism include_first(int k, int l) {
  GammaMorphism f = GammaMorphism::identity(k);
  f.dst = k + l;
  return f;
}

GammaMorphism include_second(int k, int l) {
  GammaMorphism f{l, k + l, {}};
  for (int j = 1; j <= l; ++j) f.map.push_back(k + j);
  return f;
}

std::uint64_t hom_count(int n, int m) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c *= static_cast<std::uint64_t>(m + 1);
  return c;
}

std::uint64_t encode(const GammaMorphism& f) {
  std::uint64_t idx = 0;
  for (int i = f.src; i-- > 0;) idx = idx * static_cast<std::uint64_t>(f.dst + 1) + f.map[i];
  return idx;
}

GammaMorphism decode(int n, int m, std::uint64_t index) {
  GammaMorphism f{n, m, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    f.map[i] = static_cast<int>(index % static_cast<std::uint64_t>(m + 1));
    index /= static_cast<std::uint64_t>(m + 1);
  }
  return f;
}

std::vector<GammaMorphism> enumerate_homs(int n, int m) {
  std::vector<GammaMorphism> out;
  const std::uint64_t total = hom_count(n, m);
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(decode(n, m, i));
  return out;
}

namespace {

struct LevelBlocks {
  std::vector<std::vector<std::uint64_t>> offset;  // [n][m]
};

LevelBlocks blocks(int max_level) {
  LevelBlocks b;
  b.offset.assign(max_level + 1, std::vector<std::uint64_t>(max_level + 1));
  std::uint64_t at = 0;
  for (int n = 0; n <= max_level; ++n)
    for (int m = 0; m <= max_level; ++m) {
      b.offset[n][m] = at;
      at += hom_count(n, m);
    }
  return b;
}

}  // namespace

FinCat gamma_op_category(int max_level) {
  if (max_level > 4) throw ResourceError("Γop category: dense table limited to levels <= 4");
  const LevelBlocks b = blocks(max_level);
  std::vector<std::string> objs;
  for (int n = 0; n <= max_level; ++n) objs.push_back(std::to_string(n) + "+");
  std::vector<FinCat::Arrow> arrows;
  std::vector<GammaMorphism> morph;
  for (int n = 0; n <= max_level; ++n)
    for (int m = 0; m <= max_level; ++m)
      for (auto& f : enumerate_homs(n, m)) {
        arrows.push_back({f.name(), n, m});
        morph.push_back(std::move(f));
      }
  std::vector<int> ids;
  for (int n = 0; n <= max_level; ++n)
    ids.push_back(static_cast<int>(b.offset[n][n] + encode(GammaMorphism::identity(n))));
  const std::size_t na = arrows.size();
  std::vector<int> table(na * na, -1);
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t f = 0; f < na; ++f) {
      if (morph[f].dst != morph[g].src) continue;
      const GammaMorphism h = compose(morph[g], morph[f]);
      table[g * na + f] = static_cast<int>(b.offset[h.src][h.dst] + encode(h));
    }
  return FinCat(std::move(objs), std::move(arrows), std::move(ids), std::move(table), false);
}

int gamma_arrow(const FinCat& gop, const GammaMorphism& f) {
  const int max_level = gop.object_count() - 1;
  if (f.src > max_level || f.dst > max_level) return -1;
  return static_cast<int>(blocks(max_level).offset[f.src][f.dst] + encode(f));
}

GammaMorphism gamma_of_arrow(const FinCat& gop, int arrow) {
  const auto& a = gop.arrow(arrow);
  const int max_level = gop.object_count() - 1;
  return decode(a.src, a.dst, static_cast<std::uint64_t>(arrow) - blocks(max_level).offset[a.src][a.dst]);
}

}  // namespace gs
