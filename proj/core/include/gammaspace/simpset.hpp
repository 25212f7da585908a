#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gammaspace/common.hpp>

namespace gs {

// Reference to a possibly degenerate simplex in Eilenberg-Zilber normal form:
// s_{deg[0]} ... s_{deg[r-1]} applied to nondegenerate cell `base`, with deg
// strictly decreasing. The dimension of `base` is implied by context.
struct SimplexRef {
  int base = 0;
  std::vector<int> deg;

  bool operator==(const SimplexRef&) const = default;
};

struct Cell {
  std::string id;
  std::vector<SimplexRef> faces;  // d_0 .. d_n
};

// Every simplex, degenerate ones included, per dimension 0..dim_bound.
struct FullTable {
  int dim_bound = 0;
  std::vector<int> count;
  std::vector<std::vector<int>> face;   // face[n][x * (n + 1) + i], n >= 1
  std::vector<std::vector<int>> degen;  // degen[n][x * (n + 1) + j], n < dim_bound

  explicit FullTable(int bound = 0)
      : dim_bound(bound), count(bound + 1, 0), face(bound + 1), degen(bound + 1) {}
  int d(int n, int x, int i) const { return face[n][x * (n + 1) + i]; }
  int s(int n, int x, int j) const { return degen[n][x * (n + 1) + j]; }
};

// Truncated finite simplicial set. Stores nondegenerate cells in dimensions
// 0..dim_bound and is read coskeletally above the bound. Immutable; copies
// share state.
//
// Besides the cells, every set carries a derived table of all simplices in
// each dimension. Table ids for dimension n are laid out in blocks indexed by
// the degeneracy mask (bit t set when the surjection repeats t and t+1).
class SimpSet {
 public:
  SimpSet();
  SimpSet(int dim_bound, std::vector<std::vector<Cell>> cells,
          std::optional<std::string> basepoint = std::nullopt);

  int dim_bound() const;
  int cell_count(int n) const;
  const std::vector<Cell>& cells(int n) const;
  const Cell& cell(int n, int c) const { return cells(n)[c]; }
  int find_cell(int n, std::string_view id) const;  // -1 when absent
  std::optional<int> basepoint() const;             // vertex cell index
  SimpSet with_basepoint(std::optional<int> vertex) const;
  std::vector<int> cell_counts() const;
  std::size_t total_cells() const;
  bool is_empty() const { return cell_count(0) == 0; }

  // Table view.
  int size(int n) const;
  int face(int n, int x, int i) const;
  int degen(int n, int x, int j) const;
  int table_id(int n, int cell) const;  // table id of a nondegenerate cell
  int cell_of(int n, int x) const;      // cell index, or -1 when degenerate
  int base_cell(int n, int x) const;
  unsigned mask(int n, int x) const;
  int base_dim(int n, int x) const;
  int from_ref(int n, const SimplexRef& r) const;
  SimplexRef ref(int n, int x) const;
  std::string ref_name(int n, int x) const;
  // Applies the degeneracy mask of a dimension-n surjection to simplex x of
  // dimension n - popcount(mask).
  int degenerate(int n, unsigned mask, int x) const;
  int vertex(int n, int x, int k) const;
  // Face spanned by the given strictly increasing vertex positions.
  int restrict_to(int n, int x, std::span<const int> positions) const;
  const FullTable& table() const;

  // Candidates with prescribed faces, for n >= 1; appends to `out`.
  void with_faces(int n, std::span<const int> faces, std::vector<int>& out) const;

  // Structural equality: bound, basepoint, cell ids and faces.
  bool operator==(const SimpSet& o) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit SimpSet(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

// Simplicial map, stored as table images in dimensions 0..top() with
// top = min of the two bounds.
class SimpMap {
 public:
  SimpMap() = default;
  // Images of nondegenerate cells (target table ids). Validates faces.
  SimpMap(SimpSet source, SimpSet target, const std::vector<std::vector<int>>& cell_images);
  // Full table images; validated only for nondegenerate cells.
  static SimpMap from_table(SimpSet source, SimpSet target, std::vector<std::vector<int>> images);
  static SimpMap identity(const SimpSet& x);

  const SimpSet& source() const { return src_; }
  const SimpSet& target() const { return tgt_; }
  int top() const { return static_cast<int>(img_.size()) - 1; }
  int operator()(int n, int x) const { return img_[n][x]; }
  int cell_image(int n, int c) const { return img_[n][src_.table_id(n, c)]; }
  const std::vector<int>& images(int n) const { return img_[n]; }

  // g after this.
  SimpMap then(const SimpMap& g) const;
  bool is_mono() const;
  bool is_surjective() const;
  bool is_iso() const { return is_mono() && is_surjective(); }
  bool preserves_basepoint() const;
  std::vector<int> key() const;  // images of nondegenerate cells, concatenated
  bool operator==(const SimpMap& o) const { return key() == o.key(); }

 private:
  SimpSet src_, tgt_;
  std::vector<std::vector<int>> img_;
};

struct Extracted {
  SimpSet set;
  std::vector<std::vector<int>> to_set;  // table id in the FullTable -> table id in set
};

using Namer = std::function<std::string(int n, int x)>;

// Builds a SimpSet from a full table: nondegenerate simplices are those not in
// the image of a degeneracy. `name` labels them; the default is the running
// index per dimension.
Extracted extract(const FullTable& t, const Namer& name = {},
                  std::optional<int> base_vertex = std::nullopt);

struct Sub {
  SimpSet set;
  SimpMap inclusion;
};

// Sub-simplicial set on the table simplices accepted by `keep`. The kept set
// must be closed under faces; degeneracies of kept simplices are kept.
Sub subcomplex(const SimpSet& x, const std::function<bool(int n, int x)>& keep);

// Standard shapes. Bounds below the shape's dimension are raised to it.
SimpSet standard_simplex(int n, int dim_bound = 4);
SimpSet boundary(int n, int dim_bound = 4);
SimpSet horn(int n, int k, int dim_bound = 4);
SimpSet point(int dim_bound = 4);
SimpSet empty_set(int dim_bound = 4);
SimpSet discrete(int points, int dim_bound = 4);
SimpMap boundary_inclusion(int n, int dim_bound = 4);
SimpMap horn_inclusion(int n, int k, int dim_bound = 4);

// Monotone vertex sequence of a simplex of Δ[n] given by its table id.
std::vector<int> simplex_vertices(const SimpSet& delta, int dim, int x);
// Table id in Δ[n] of the monotone sequence.
int simplex_from_vertices(const SimpSet& delta, std::span<const int> verts);

// Checks d_i d_j = d_{j-1} d_i on every nondegenerate cell.
bool simplicial_identities_hold(const SimpSet& x);

}  // namespace gs
