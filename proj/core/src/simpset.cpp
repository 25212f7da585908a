#include <gammaspace/simpset.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <unordered_map>

namespace gs {

namespace {

constexpr int kMaxDim = 12;

using Surj = std::array<int, kMaxDim + 2>;

// Surjection [n] -> [k] encoded by the mask of repeated positions.
Surj surj_of(int n, unsigned mask) {
  Surj s{};
  s[0] = 0;
  for (int t = 0; t < n; ++t) s[t + 1] = s[t] + (((mask >> t) & 1u) ? 0 : 1);
  return s;
}

unsigned mask_of(const Surj& s, int n) {
  unsigned m = 0;
  for (int t = 0; t < n; ++t)
    if (s[t] == s[t + 1]) m |= 1u << t;
  return m;
}

std::vector<int> deg_of_mask(unsigned mask) {
  std::vector<int> deg;
  for (int t = 31; t >= 0; --t)
    if ((mask >> t) & 1u) deg.push_back(t);
  return deg;
}

std::uint64_t hash_ints(std::span<const int> v) {
  std::uint64_t h = 1469598103934665603ull;
  for (int a : v) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

std::string vertex_label(std::span<const int> verts, int n) {
  std::string s;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (n > 9 && i > 0) s += '.';
    s += std::to_string(verts[i]);
  }
  return s;
}

}  // namespace

struct SimpSet::Data {
  int bound = 0;
  std::vector<std::vector<Cell>> cells;
  std::optional<int> bp;
  std::vector<std::unordered_map<std::string, int>> index;
  FullTable table;
  std::vector<std::vector<int>> offsets;
  std::vector<std::vector<int>> base;
  std::vector<std::vector<unsigned>> mask;

  mutable std::once_flag face_once;
  mutable std::vector<std::unordered_map<std::uint64_t, std::vector<int>>> face_idx;

  int from_ref(int n, const SimplexRef& r) const {
    unsigned m = 0;
    int prev = n;
    for (int j : r.deg) {
      if (j < 0 || j >= prev || j >= n) throw InputError("degeneracy indices must be strictly decreasing and in range");
      m |= 1u << j;
      prev = j;
    }
    const int k = n - static_cast<int>(r.deg.size());
    if (k < 0 || r.base < 0 || r.base >= static_cast<int>(cells[k].size()))
      throw InputError("simplex reference out of range in dimension " + std::to_string(k));
    return offsets[n][m] + r.base;
  }

  void build() {
    if (bound < 0 || bound > kMaxDim) throw InputError("dim_bound out of supported range");
    cells.resize(bound + 1);
    index.resize(bound + 1);
    for (int n = 0; n <= bound; ++n) {
      for (int c = 0; c < static_cast<int>(cells[n].size()); ++c) {
        const Cell& cell = cells[n][c];
        if (!index[n].emplace(cell.id, c).second)
          throw InputError("duplicate cell id '" + cell.id + "' in dimension " + std::to_string(n));
        if (static_cast<int>(cell.faces.size()) != (n == 0 ? 0 : n + 1))
          throw InputError("cell '" + cell.id + "' has the wrong number of faces");
      }
    }
    table = FullTable(bound);
    offsets.assign(bound + 1, {});
    base.assign(bound + 1, {});
    mask.assign(bound + 1, {});
    for (int n = 0; n <= bound; ++n) {
      offsets[n].assign(1u << n, 0);
      int total = 0;
      for (unsigned m = 0; m < (1u << n); ++m) {
        offsets[n][m] = total;
        total += static_cast<int>(cells[n - std::popcount(m)].size());
      }
      table.count[n] = total;
      base[n].resize(total);
      mask[n].resize(total);
      for (unsigned m = 0; m < (1u << n); ++m) {
        const int k = n - std::popcount(m);
        for (int b = 0; b < static_cast<int>(cells[k].size()); ++b) {
          base[n][offsets[n][m] + b] = b;
          mask[n][offsets[n][m] + b] = m;
        }
      }
    }
    for (int n = 1; n <= bound; ++n) {
      auto& fc = table.face[n];
      fc.assign(static_cast<std::size_t>(table.count[n]) * (n + 1), -1);
      for (int c = 0; c < static_cast<int>(cells[n].size()); ++c)
        for (int i = 0; i <= n; ++i) fc[c * (n + 1) + i] = from_ref(n - 1, cells[n][c].faces[i]);
      for (int x = static_cast<int>(cells[n].size()); x < table.count[n]; ++x) {
        const unsigned m = mask[n][x];
        const int b = base[n][x];
        const Surj sg = surj_of(n, m);
        for (int i = 0; i <= n; ++i) {
          Surj s1{};
          for (int t = 0, u = 0; t <= n; ++t)
            if (t != i) s1[u++] = sg[t];
          const int v = sg[i];
          const bool still = (i > 0 && sg[i - 1] == v) || (i < n && sg[i + 1] == v);
          if (still) {
            fc[x * (n + 1) + i] = offsets[n - 1][mask_of(s1, n - 1)] + b;
            continue;
          }
          const int k = n - std::popcount(m);
          for (int t = 0; t < n; ++t)
            if (s1[t] > v) --s1[t];
          const int y = table.face[k][b * (k + 1) + v];
          const int z = base[k - 1][y];
          const Surj rho = surj_of(k - 1, mask[k - 1][y]);
          Surj comp{};
          for (int t = 0; t < n; ++t) comp[t] = rho[s1[t]];
          fc[x * (n + 1) + i] = offsets[n - 1][mask_of(comp, n - 1)] + z;
        }
      }
    }
    for (int n = 0; n < bound; ++n) {
      auto& dg = table.degen[n];
      dg.resize(static_cast<std::size_t>(table.count[n]) * (n + 1));
      for (int x = 0; x < table.count[n]; ++x) {
        const Surj sg = surj_of(n, mask[n][x]);
        for (int j = 0; j <= n; ++j) {
          Surj comp{};
          for (int t = 0; t <= n + 1; ++t) comp[t] = sg[t <= j ? t : t - 1];
          dg[x * (n + 1) + j] = offsets[n + 1][mask_of(comp, n + 1)] + base[n][x];
        }
      }
    }
  }
};

SimpSet::SimpSet() : SimpSet(4, {}) {}

SimpSet::SimpSet(int dim_bound, std::vector<std::vector<Cell>> cells, std::optional<std::string> basepoint) {
  auto d = std::make_shared<Data>();
  d->bound = dim_bound;
  if (static_cast<int>(cells.size()) > dim_bound + 1) {
    for (std::size_t n = dim_bound + 1; n < cells.size(); ++n)
      if (!cells[n].empty()) throw InputError("cells above dim_bound");
    cells.resize(dim_bound + 1);
  }
  d->cells = std::move(cells);
  d->build();
  if (basepoint) {
    auto it = d->index[0].find(*basepoint);
    if (it == d->index[0].end()) throw InputError("basepoint '" + *basepoint + "' is not a vertex");
    d->bp = it->second;
  }
  d_ = std::move(d);
  if (!simplicial_identities_hold(*this)) throw InputError("simplicial identities fail");
}

int SimpSet::dim_bound() const { return d_->bound; }
int SimpSet::cell_count(int n) const {
  return n >= 0 && n <= d_->bound ? static_cast<int>(d_->cells[n].size()) : 0;
}
const std::vector<Cell>& SimpSet::cells(int n) const { return d_->cells[n]; }
int SimpSet::find_cell(int n, std::string_view id) const {
  if (n < 0 || n > d_->bound) return -1;
  auto it = d_->index[n].find(std::string(id));
  return it == d_->index[n].end() ? -1 : it->second;
}
std::optional<int> SimpSet::basepoint() const { return d_->bp; }
SimpSet SimpSet::with_basepoint(std::optional<int> vertex) const {
  std::optional<std::string> id;
  if (vertex) id = d_->cells[0].at(*vertex).id;
  return SimpSet(d_->bound, d_->cells, id);
}
std::vector<int> SimpSet::cell_counts() const {
  std::vector<int> c;
  for (int n = 0; n <= d_->bound; ++n) c.push_back(cell_count(n));
  return c;
}
std::size_t SimpSet::total_cells() const {
  std::size_t t = 0;
  for (int n = 0; n <= d_->bound; ++n) t += d_->cells[n].size();
  return t;
}

int SimpSet::size(int n) const { return n >= 0 && n <= d_->bound ? d_->table.count[n] : 0; }
int SimpSet::face(int n, int x, int i) const { return d_->table.d(n, x, i); }
int SimpSet::degen(int n, int x, int j) const { return d_->table.s(n, x, j); }
int SimpSet::table_id(int, int cell) const { return cell; }
int SimpSet::cell_of(int n, int x) const { return x < static_cast<int>(d_->cells[n].size()) ? x : -1; }
int SimpSet::base_cell(int n, int x) const { return d_->base[n][x]; }
unsigned SimpSet::mask(int n, int x) const { return d_->mask[n][x]; }
int SimpSet::base_dim(int n, int x) const { return n - std::popcount(d_->mask[n][x]); }
int SimpSet::from_ref(int n, const SimplexRef& r) const { return d_->from_ref(n, r); }
SimplexRef SimpSet::ref(int n, int x) const { return SimplexRef{d_->base[n][x], deg_of_mask(d_->mask[n][x])}; }

std::string SimpSet::ref_name(int n, int x) const {
  const SimplexRef r = ref(n, x);
  const std::string& id = d_->cells[n - static_cast<int>(r.deg.size())][r.base].id;
  if (r.deg.empty()) return id;
  std::string s;
  for (int j : r.deg) s += "s" + std::to_string(j);
  return s + "(" + id + ")";
}

int SimpSet::degenerate(int n, unsigned m, int x) const {
  int dim = n - std::popcount(m);
  for (int t = 0; t < n; ++t) {
    if ((m >> t) & 1u) {
      x = degen(dim, x, t);
      ++dim;
    }
  }
  return x;
}

int SimpSet::vertex(int n, int x, int k) const {
  while (n > 0) {
    if (k < n) {
      x = face(n, x, n);
    } else {
      x = face(n, x, 0);
      --k;
    }
    --n;
  }
  return x;
}

int SimpSet::restrict_to(int n, int x, std::span<const int> positions) const {
  int dim = n;
  for (int p = n; p >= 0; --p) {
    if (std::find(positions.begin(), positions.end(), p) == positions.end()) {
      x = face(dim, x, p);
      --dim;
    }
  }
  return x;
}

const FullTable& SimpSet::table() const { return d_->table; }

void SimpSet::with_faces(int n, std::span<const int> faces, std::vector<int>& out) const {
  const Data& d = *d_;
  std::call_once(d.face_once, [&d] {
    d.face_idx.resize(d.bound + 1);
    for (int m = 1; m <= d.bound; ++m) {
      for (int x = 0; x < d.table.count[m]; ++x) {
        std::span<const int> f(&d.table.face[m][x * (m + 1)], m + 1);
        d.face_idx[m][hash_ints(f)].push_back(x);
      }
    }
  });
  auto it = d.face_idx[n].find(hash_ints(faces));
  if (it == d.face_idx[n].end()) return;
  for (int x : it->second) {
    if (std::equal(faces.begin(), faces.end(), d.table.face[n].begin() + x * (n + 1))) out.push_back(x);
  }
}

bool SimpSet::operator==(const SimpSet& o) const {
  if (d_ == o.d_) return true;
  if (d_->bound != o.d_->bound || d_->bp != o.d_->bp) return false;
  for (int n = 0; n <= d_->bound; ++n) {
    const auto& a = d_->cells[n];
    const auto& b = o.d_->cells[n];
    if (a.size() != b.size()) return false;
    for (std::size_t c = 0; c < a.size(); ++c)
      if (a[c].id != b[c].id || a[c].faces != b[c].faces) return false;
  }
  return true;
}

bool simplicial_identities_hold(const SimpSet& x) {
  for (int n = 2; n <= x.dim_bound(); ++n) {
    for (int c = 0; c < x.cell_count(n); ++c) {
      const int s = x.table_id(n, c);
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(n - 1, x.face(n, s, j), i) != x.face(n - 1, x.face(n, s, i), j - 1)) return false;
    }
  }
  return true;
}

// SimpMap

SimpMap::SimpMap(SimpSet source, SimpSet target, const std::vector<std::vector<int>>& cell_images)
    : src_(std::move(source)), tgt_(std::move(target)) {
  const int top = std::min(src_.dim_bound(), tgt_.dim_bound());
  if (static_cast<int>(cell_images.size()) < top + 1) throw InputError("map images missing dimensions");
  img_.assign(top + 1, {});
  for (int n = 0; n <= top; ++n) {
    if (static_cast<int>(cell_images[n].size()) != src_.cell_count(n)) throw InputError("map images have the wrong size");
    img_[n].resize(src_.size(n));
    for (int x = 0; x < src_.size(n); ++x) {
      const int b = src_.base_cell(n, x);
      const unsigned m = src_.mask(n, x);
      const int k = n - std::popcount(m);
      const int y = cell_images[k][b];
      if (y < 0 || y >= tgt_.size(k)) throw InputError("map image out of range");
      img_[n][x] = m == 0 ? y : tgt_.degenerate(n, m, y);
    }
  }
  for (int n = 1; n <= top; ++n)
    for (int c = 0; c < src_.cell_count(n); ++c)
      for (int i = 0; i <= n; ++i)
        if (tgt_.face(n, img_[n][c], i) != img_[n - 1][src_.face(n, c, i)])
          throw InputError("assignment does not commute with faces at cell '" + src_.cell(n, c).id + "'");
}

SimpMap SimpMap::from_table(SimpSet source, SimpSet target, std::vector<std::vector<int>> images) {
  std::vector<std::vector<int>> cells(images.size());
  for (std::size_t n = 0; n < images.size(); ++n)
    cells[n].assign(images[n].begin(), images[n].begin() + source.cell_count(static_cast<int>(n)));
  return SimpMap(std::move(source), std::move(target), cells);
}

SimpMap SimpMap::identity(const SimpSet& x) {
  SimpMap f;
  f.src_ = x;
  f.tgt_ = x;
  f.img_.resize(x.dim_bound() + 1);
  for (int n = 0; n <= x.dim_bound(); ++n) {
    f.img_[n].resize(x.size(n));
    for (int i = 0; i < x.size(n); ++i) f.img_[n][i] = i;
  }
  return f;
}

SimpMap SimpMap::then(const SimpMap& g) const {
  SimpMap h;
  h.src_ = src_;
  h.tgt_ = g.tgt_;
  const int top = std::min({this->top(), g.top(), h.src_.dim_bound(), h.tgt_.dim_bound()});
  h.img_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    h.img_[n].resize(img_[n].size());
    for (std::size_t x = 0; x < img_[n].size(); ++x) h.img_[n][x] = g.img_[n][img_[n][x]];
  }
  return h;
}

bool SimpMap::is_mono() const {
  for (int n = 0; n <= top(); ++n) {
    std::vector<char> seen(tgt_.size(n), 0);
    for (int y : img_[n]) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

bool SimpMap::is_surjective() const {
  for (int n = 0; n <= top(); ++n) {
    std::vector<char> seen(tgt_.size(n), 0);
    for (int y : img_[n]) seen[y] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  return true;
}

bool SimpMap::preserves_basepoint() const {
  if (!src_.basepoint() || !tgt_.basepoint()) return true;
  return img_[0][*src_.basepoint()] == *tgt_.basepoint();
}

std::vector<int> SimpMap::key() const {
  std::vector<int> k;
  for (int n = 0; n <= top(); ++n) k.insert(k.end(), img_[n].begin(), img_[n].begin() + src_.cell_count(n));
  return k;
}

// Extraction

Extracted extract(const FullTable& t, const Namer& name, std::optional<int> base_vertex) {
  const int bound = t.dim_bound;
  std::vector<std::vector<Cell>> cells(bound + 1);
  std::vector<std::vector<int>> cell_idx(bound + 1), base_of(bound + 1);
  std::vector<std::vector<unsigned>> mask_of_x(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    const int cnt = t.count[n];
    cell_idx[n].assign(cnt, -1);
    base_of[n].assign(cnt, -1);
    mask_of_x[n].assign(cnt, 0);
    for (int x = 0; x < cnt; ++x) {
      unsigned m = 0;
      for (int j = 0; j < n; ++j) {
        const int y = t.d(n, x, j);
        if (t.s(n - 1, y, j) == x) m |= 1u << j;
      }
      if (m == 0) {
        cell_idx[n][x] = static_cast<int>(cells[n].size());
        base_of[n][x] = cell_idx[n][x];
        Cell c;
        c.id = name ? name(n, x) : std::to_string(cells[n].size());
        cells[n].push_back(std::move(c));
      } else {
        int y = x, dim = n;
        for (int j = n - 1; j >= 0; --j) {
          if ((m >> j) & 1u) {
            y = t.d(dim, y, j);
            --dim;
          }
        }
        base_of[n][x] = cell_idx[dim][y];
        if (base_of[n][x] < 0) throw InputError("extraction: base is not nondegenerate");
      }
      mask_of_x[n][x] = m;
    }
    if (n > 0) {
      for (int x = 0; x < cnt; ++x) {
        if (cell_idx[n][x] < 0) continue;
        Cell& c = cells[n][cell_idx[n][x]];
        for (int i = 0; i <= n; ++i) {
          const int y = t.d(n, x, i);
          c.faces.push_back(SimplexRef{base_of[n - 1][y], deg_of_mask(mask_of_x[n - 1][y])});
        }
      }
    }
  }
  std::optional<std::string> bp;
  if (base_vertex) bp = cells[0].at(cell_idx[0].at(*base_vertex)).id;
  Extracted out{SimpSet(bound, std::move(cells), bp), {}};
  out.to_set.resize(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    out.to_set[n].resize(t.count[n]);
    for (int x = 0; x < t.count[n]; ++x)
      out.to_set[n][x] = out.set.from_ref(n, SimplexRef{base_of[n][x], deg_of_mask(mask_of_x[n][x])});
  }
  return out;
}

Sub subcomplex(const SimpSet& x, const std::function<bool(int n, int x)>& keep) {
  const int bound = x.dim_bound();
  std::vector<std::vector<int>> newidx(bound + 1);
  std::vector<std::vector<Cell>> cells(bound + 1);
  std::vector<std::vector<int>> images(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    newidx[n].assign(x.cell_count(n), -1);
    for (int c = 0; c < x.cell_count(n); ++c) {
      if (!keep(n, x.table_id(n, c))) continue;
      newidx[n][c] = static_cast<int>(cells[n].size());
      Cell cell{x.cell(n, c).id, {}};
      for (SimplexRef r : x.cell(n, c).faces) {
        const int k = n - 1 - static_cast<int>(r.deg.size());
        if (newidx[k][r.base] < 0) throw InputError("subcomplex is not closed under faces");
        r.base = newidx[k][r.base];
        cell.faces.push_back(std::move(r));
      }
      cells[n].push_back(std::move(cell));
      images[n].push_back(x.table_id(n, c));
    }
  }
  std::optional<std::string> bp;
  if (x.basepoint() && newidx[0][*x.basepoint()] >= 0) bp = x.cell(0, *x.basepoint()).id;
  SimpSet s(bound, std::move(cells), bp);
  SimpMap incl(s, x, images);
  return Sub{std::move(s), std::move(incl)};
}

// Standard shapes

SimpSet standard_simplex(int n, int dim_bound) {
  const int bound = std::max(n, dim_bound);
  std::vector<std::vector<Cell>> cells(bound + 1);
  std::vector<std::unordered_map<unsigned, int>> at(n + 1);
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned s = 1; s < (1u << (n + 1)); ++s) subsets[std::popcount(s) - 1].push_back(s);
  for (int m = 0; m <= n; ++m) {
    // lexicographic order on vertex sequences
    std::sort(subsets[m].begin(), subsets[m].end(), [n](unsigned a, unsigned b) {
      for (int v = 0; v <= n; ++v) {
        const bool ia = (a >> v) & 1u, ib = (b >> v) & 1u;
        if (ia != ib) return ia;
      }
      return false;
    });
    for (unsigned s : subsets[m]) {
      std::vector<int> verts;
      for (int v = 0; v <= n; ++v)
        if ((s >> v) & 1u) verts.push_back(v);
      Cell c{vertex_label(verts, n), {}};
      if (m > 0) {
        for (int i = 0; i <= m; ++i) c.faces.push_back(SimplexRef{at[m - 1].at(s & ~(1u << verts[i])), {}});
      }
      at[m][s] = static_cast<int>(cells[m].size());
      cells[m].push_back(std::move(c));
    }
  }
  return SimpSet(bound, std::move(cells));
}

SimpSet point(int dim_bound) { return standard_simplex(0, dim_bound); }

SimpSet empty_set(int dim_bound) { return SimpSet(dim_bound, std::vector<std::vector<Cell>>(dim_bound + 1)); }

SimpSet discrete(int points, int dim_bound) {
  std::vector<std::vector<Cell>> cells(dim_bound + 1);
  for (int i = 0; i < points; ++i) cells[0].push_back(Cell{std::to_string(i), {}});
  return SimpSet(dim_bound, std::move(cells));
}

SimpMap boundary_inclusion(int n, int dim_bound) {
  const SimpSet delta = standard_simplex(n, dim_bound);
  return subcomplex(delta, [n](int m, int) { return m < n; }).inclusion;
}

SimpMap horn_inclusion(int n, int k, int dim_bound) {
  if (n < 1 || k < 0 || k > n) throw InputError("horn index out of range");
  const SimpSet delta = standard_simplex(n, dim_bound);
  // the face opposite vertex k is the (n-1)-cell that omits k
  std::string omit;
  {
    std::vector<int> verts;
    for (int v = 0; v <= n; ++v)
      if (v != k) verts.push_back(v);
    omit = vertex_label(verts, n);
  }
  return subcomplex(delta, [&](int m, int x) {
           if (m == n) return false;
           return !(m == n - 1 && delta.cell(m, x).id == omit);
         })
      .inclusion;
}

SimpSet boundary(int n, int dim_bound) { return boundary_inclusion(n, dim_bound).source(); }
SimpSet horn(int n, int k, int dim_bound) { return horn_inclusion(n, k, dim_bound).source(); }

std::vector<int> simplex_vertices(const SimpSet& delta, int dim, int x) {
  std::vector<int> v(dim + 1);
  for (int k = 0; k <= dim; ++k) v[k] = delta.vertex(dim, x, k);
  return v;
}

int simplex_from_vertices(const SimpSet& delta, std::span<const int> verts) {
  const int n = static_cast<int>(verts.size()) - 1;
  std::vector<int> distinct;
  unsigned m = 0;
  for (int t = 0; t <= n; ++t) {
    if (t > 0 && verts[t] == verts[t - 1]) {
      m |= 1u << (t - 1);
    } else {
      distinct.push_back(verts[t]);
    }
  }
  const int k = static_cast<int>(distinct.size()) - 1;
  const int c = delta.find_cell(k, vertex_label(distinct, delta.cell_count(0) - 1));
  if (c < 0) throw InputError("not a simplex of the standard simplex");
  return delta.degenerate(n, m, delta.table_id(k, c));
}

}  // namespace gs
