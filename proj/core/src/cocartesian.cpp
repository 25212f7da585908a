#include <gammaspace/cocartesian.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace gs {

void validate(const RelativeNerveInput& in) {
  const FinCat& c = in.base;
  if (static_cast<int>(in.values.size()) != c.object_count()) throw InputError("diagram: one value per object required");
  if (static_cast<int>(in.arrows.size()) != c.arrow_count()) throw InputError("diagram: one map per arrow required");
  for (int a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    if (!(in.arrows[a].source() == in.values[ar.src]) || !(in.arrows[a].target() == in.values[ar.dst]))
      throw InputError("diagram: map for arrow '" + ar.id + "' has wrong endpoints");
  }
  for (int x = 0; x < c.object_count(); ++x)
    if (!(in.arrows[c.identity(x)] == SimpMap::identity(in.values[x])))
      throw InputError("diagram: identity of '" + c.object(x) + "' is not sent to an identity");
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int x = 0; x < c.object_count(); ++x)
      for (int f : c.hom(x, c.arrow(g).src))
        if (!(in.arrows[c.compose(g, f)] == in.arrows[f].then(in.arrows[g])))
          throw InputError("diagram: composition not preserved at " + c.arrow(g).id + " o " + c.arrow(f).id);
}

RelativeNerveInput constant_diagram(const FinCat& base, const SimpSet& value) {
  RelativeNerveInput in{base, std::vector<SimpSet>(base.object_count(), value), {}};
  in.arrows.assign(base.arrow_count(), SimpMap::identity(value));
  return in;
}

RelativeNerveInput gamma_diagram(const TabulatedGammaSpace& x, int max_level) {
  RelativeNerveInput in{gamma_op_category(max_level), {}, {}};
  for (int n = 0; n <= max_level; ++n) in.values.push_back(x.value(n));
  for (int a = 0; a < in.base.arrow_count(); ++a) in.arrows.push_back(x.act(gamma_of_arrow(in.base, a)));
  return in;
}

RelativeNerveInput category_diagram(const FinCat& base, const std::vector<FinCat>& cats,
                                    const std::vector<CatFunctor>& functors, int dim_bound) {
  if (static_cast<int>(cats.size()) != base.object_count() || static_cast<int>(functors.size()) != base.arrow_count())
    throw InputError("category diagram: sizes do not match the base");
  RelativeNerveInput in{base, {}, {}};
  for (const auto& c : cats) in.values.push_back(nerve(c, dim_bound));
  for (int a = 0; a < base.arrow_count(); ++a) {
    const auto& ar = base.arrow(a);
    if (!is_functor(cats[ar.src], cats[ar.dst], functors[a]))
      throw InputError("category diagram: map for '" + ar.id + "' is not a functor");
    in.arrows.push_back(nerve_map(cats[ar.src], cats[ar.dst], functors[a], in.values[ar.src], in.values[ar.dst]));
  }
  return in;
}

namespace {

struct Chain {
  std::vector<int> objects;  // n + 1
  std::vector<int> arrows;   // n
};

void enumerate_chains(const FinCat& c, int n, const std::function<void(const Chain&)>& visit) {
  Chain ch;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(ch.arrows.size()) == n) {
      visit(ch);
      return;
    }
    const int last = ch.objects.back();
    for (int y = 0; y < c.object_count(); ++y)
      for (int a : c.hom(last, y)) {
        ch.arrows.push_back(a);
        ch.objects.push_back(y);
        rec();
        ch.arrows.pop_back();
        ch.objects.pop_back();
      }
  };
  for (int x = 0; x < c.object_count(); ++x) {
    ch.objects = {x};
    ch.arrows.clear();
    rec();
  }
}

// between[i][j] = composite of the chain arrows from position i to j (i <= j).
std::vector<std::vector<int>> composites(const FinCat& c, const Chain& ch) {
  const int n = static_cast<int>(ch.arrows.size());
  std::vector<std::vector<int>> between(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i) {
    between[i][i] = c.identity(ch.objects[i]);
    for (int j = i + 1; j <= n; ++j) between[i][j] = c.compose(ch.arrows[j - 1], between[i][j - 1]);
  }
  return between;
}

std::vector<int> subset_order(int n) {
  std::vector<int> masks;
  for (int m = 1; m < (1 << (n + 1)); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](int a, int b) { return std::popcount(unsigned(a)) < std::popcount(unsigned(b)); });
  return masks;
}

int top_bit(int mask) { return 31 - std::countl_zero(static_cast<unsigned>(mask)); }

std::vector<int> members(int mask) {
  std::vector<int> out;
  for (int b = 0; mask >> b; ++b)
    if (mask >> b & 1) out.push_back(b);
  return out;
}

// Families over a chain: sigma[J] in value(obj(max J)) of dimension |J| - 1 with
// prescribed faces.
void enumerate_families(const RelativeNerveInput& in, const Chain& ch, Budget& budget,
                        const std::function<void(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(ch.arrows.size());
  const auto between = composites(in.base, ch);
  const auto order = subset_order(n);
  std::vector<int> sigma((1 << (n + 1)) - 1, -1);
  std::vector<int> faces, cands;
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == order.size()) {
      visit(sigma);
      return;
    }
    const int J = order[p];
    const int top = top_bit(J);
    const SimpSet& v = in.values[ch.objects[top]];
    const auto mem = members(J);
    const int m = static_cast<int>(mem.size()) - 1;
    std::vector<int> local;
    if (m == 0) {
      for (int x = 0; x < v.size(0); ++x) local.push_back(x);
    } else {
      faces.assign(m + 1, 0);
      for (int i = 0; i <= m; ++i) {
        const int Jp = J & ~(1 << mem[i]);
        const int s = sigma[Jp - 1];
        faces[i] = i == m ? in.arrows[between[top_bit(Jp)][top]](m - 1, s) : s;
      }
      cands.clear();
      v.with_faces(m, faces, cands);
      local = cands;
    }
    for (int x : local) {
      budget.charge();
      sigma[J - 1] = x;
      rec(p + 1);
    }
    sigma[J - 1] = -1;
  };
  rec(0);
}

std::string chain_name(const FinCat& c, const std::vector<int>& chain, int n) {
  if (n == 0) return c.object(chain[0]);
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? ";" : "") + c.arrow(chain[i]).id;
  return s;
}

}  // namespace

RelativeNerve relative_nerve(const RelativeNerveInput& in, int dim_cap, Budget& budget) {
  const FinCat& c = in.base;
  for (const auto& v : in.values)
    if (v.dim_bound() < dim_cap) throw InputError("relative nerve: dim_cap exceeds a value's dimension bound");
  RelativeNerve rn;
  rn.dim_cap = dim_cap;
  rn.chain.resize(dim_cap + 1);
  rn.sigma.resize(dim_cap + 1);
  std::vector<std::map<std::pair<std::vector<int>, std::vector<int>>, int>> index(dim_cap + 1);
  std::vector<std::vector<std::vector<int>>> objects(dim_cap + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    enumerate_chains(c, n, [&](const Chain& ch) {
      enumerate_families(in, ch, budget, [&](const std::vector<int>& sigma) {
        std::vector<int> key = n == 0 ? ch.objects : ch.arrows;
        index[n].emplace(std::make_pair(key, sigma), static_cast<int>(rn.chain[n].size()));
        rn.chain[n].push_back(std::move(key));
        rn.sigma[n].push_back(sigma);
        objects[n].push_back(ch.objects);
      });
    });
  }
  FullTable t(dim_cap);
  for (int n = 0; n <= dim_cap; ++n) t.count[n] = static_cast<int>(rn.chain[n].size());
  auto lookup = [&](int n, std::vector<int> key, std::vector<int> sigma) {
    auto it = index[n].find({key, sigma});
    if (it == index[n].end()) throw InputError("relative nerve: simplicial operator leaves the enumerated simplices");
    return it->second;
  };
  for (int n = 1; n <= dim_cap; ++n) {
    t.face[n].resize(static_cast<std::size_t>(t.count[n]) * (n + 1));
    for (int x = 0; x < t.count[n]; ++x) {
      const auto& ar = rn.chain[n][x];
      const auto& ob = objects[n][x];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> key;
        if (n == 1) {
          key = {ob[i == 0 ? 1 : 0]};
        } else if (i == 0) {
          key.assign(ar.begin() + 1, ar.end());
        } else if (i == n) {
          key.assign(ar.begin(), ar.end() - 1);
        } else {
          key.assign(ar.begin(), ar.begin() + (i - 1));
          key.push_back(c.compose(ar[i], ar[i - 1]));
          key.insert(key.end(), ar.begin() + (i + 1), ar.end());
        }
        std::vector<int> sig((1 << n) - 1);
        for (int J = 1; J < (1 << n); ++J) {
          const int low = J & ((1 << i) - 1);
          const int high = (J >> i) << (i + 1);
          sig[J - 1] = rn.sigma[n][x][(low | high) - 1];
        }
        t.face[n][static_cast<std::size_t>(x) * (n + 1) + i] = lookup(n - 1, key, sig);
      }
    }
  }
  for (int n = 0; n < dim_cap; ++n) {
    t.degen[n].resize(static_cast<std::size_t>(t.count[n]) * (n + 1));
    for (int x = 0; x < t.count[n]; ++x) {
      const auto& ar = rn.chain[n][x];
      const auto& ob = objects[n][x];
      for (int j = 0; j <= n; ++j) {
        std::vector<int> key = n == 0 ? std::vector<int>{} : ar;
        key.insert(key.begin() + j, c.identity(ob[j]));
        std::vector<int> sig((1 << (n + 2)) - 1);
        for (int J = 1; J < (1 << (n + 2)); ++J) {
          // s^j merges j and j + 1.
          const int low = J & ((1 << (j + 1)) - 1);
          const int high = (J >> (j + 1)) << j;
          const int image = low | high;
          const int value = rn.sigma[n][x][image - 1];
          const bool both = (J >> j & 1) && (J >> (j + 1) & 1);
          if (!both) {
            sig[J - 1] = value;
          } else {
            const int pos = std::popcount(static_cast<unsigned>(J & ((1 << j) - 1)));
            const int dim = std::popcount(static_cast<unsigned>(image)) - 1;
            sig[J - 1] = in.values[ob[top_bit(image)]].degen(dim, value, pos);
          }
        }
        t.degen[n][static_cast<std::size_t>(x) * (n + 1) + j] = lookup(n + 1, key, sig);
      }
    }
  }
  Extracted ex = extract(t, [&](int n, int x) {
    std::string name = chain_name(c, rn.chain[n][x], n) + "|";
    const auto& sg = rn.sigma[n][x];
    const auto order = subset_order(n);
    for (std::size_t p = 0; p < order.size(); ++p) {
      const int J = order[p];
      const int dim = std::popcount(static_cast<unsigned>(J)) - 1;
      if (p) name += ",";
      name += in.values[objects[n][x][top_bit(J)]].ref_name(dim, sg[J - 1]);
    }
    return name;
  });
  rn.total = ex.set;
  // Reorder the per-simplex data to the extracted table ids.
  for (int n = 0; n <= dim_cap; ++n) {
    std::vector<std::vector<int>> ch(t.count[n]), sg(t.count[n]), ob(t.count[n]);
    for (int x = 0; x < t.count[n]; ++x) {
      ch[ex.to_set[n][x]] = rn.chain[n][x];
      sg[ex.to_set[n][x]] = rn.sigma[n][x];
      ob[ex.to_set[n][x]] = objects[n][x];
    }
    rn.chain[n] = std::move(ch);
    rn.sigma[n] = std::move(sg);
    rn.objects.push_back(std::move(ob));
  }
  rn.base_nerve = nerve(c, dim_cap);
  std::vector<std::map<std::vector<int>, int>> nidx(dim_cap + 1);
  for (int n = 1; n <= dim_cap; ++n)
    for (int s = 0; s < rn.base_nerve.size(n); ++s) nidx[n].emplace(nerve_chain(c, rn.base_nerve, n, s), s);
  std::vector<std::vector<int>> img(dim_cap + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    img[n].resize(rn.total.size(n));
    for (int x = 0; x < rn.total.size(n); ++x)
      img[n][x] = n == 0 ? rn.base_nerve.table_id(0, rn.chain[0][x][0]) : nidx[n].at(rn.chain[n][x]);
  }
  rn.proj = SimpMap::from_table(rn.total, rn.base_nerve, std::move(img));
  return rn;
}

Sub fiber(const RelativeNerve& rn, int object) {
  return subcomplex(rn.total, [&rn, object](int n, int t) {
    // Over the degenerate simplex at `object`: the projection is the fully degenerate vertex.
    const int base = rn.proj(n, t);
    const SimpSet& b = rn.base_nerve;
    return b.base_dim(n, base) == 0 && b.base_cell(n, base) == object;
  });
}

SimpMap fiber_to_value(const RelativeNerve& rn, const Sub& fib, const RelativeNerveInput& in, int object) {
  const int top = fib.set.dim_bound();
  std::vector<std::vector<int>> img(top + 1);
  for (int n = 0; n <= top; ++n) {
    img[n].resize(fib.set.size(n));
    for (int x = 0; x < fib.set.size(n); ++x) img[n][x] = rn.sigma[n][fib.inclusion(n, x)].back();
  }
  return SimpMap::from_table(fib.set, in.values[object], std::move(img));
}

std::uint64_t relative_nerve_count(const RelativeNerveInput& in, int n, Budget& budget) {
  const FinCat& c = in.base;
  std::uint64_t count = 0;
  const int subsets = (1 << (n + 1)) - 1;
  enumerate_chains(c, n, [&](const Chain& ch) {
    const auto between = composites(c, ch);
    std::vector<int> sigma(subsets, -1);
    std::function<void(int)> rec = [&](int J) {
      if (J > subsets) {
        ++count;
        return;
      }
      const auto mem = members(J);
      const int dim = static_cast<int>(mem.size()) - 1;
      const int top = mem.back();
      const SimpSet& v = in.values[ch.objects[top]];
      for (int x = 0; x < v.size(dim); ++x) {
        budget.charge();
        bool ok = true;
        // Every proper nonempty subset K of J is already assigned (K < J numerically).
        for (int K = (J - 1) & J; K > 0 && ok; K = (K - 1) & J) {
          std::vector<int> pos;
          for (int i = 0; i <= dim; ++i)
            if (K >> mem[i] & 1) pos.push_back(i);
          const int restricted = v.restrict_to(dim, x, pos);
          const int moved = in.arrows[between[top_bit(K)][top]](static_cast<int>(pos.size()) - 1, sigma[K - 1]);
          ok = restricted == moved;
        }
        if (!ok) continue;
        sigma[J - 1] = x;
        rec(J + 1);
      }
      sigma[J - 1] = -1;
    };
    rec(1);
  });
  return count;
}

std::uint64_t relative_nerve_edge_count(const RelativeNerveInput& in) {
  const FinCat& c = in.base;
  std::uint64_t count = 0;
  for (int e = 0; e < c.arrow_count(); ++e) {
    const SimpSet& src = in.values[c.arrow(e).src];
    const SimpSet& dst = in.values[c.arrow(e).dst];
    for (int x = 0; x < src.size(0); ++x) {
      const int fx = in.arrows[e](0, x);
      for (int h = 0; h < dst.size(1); ++h)
        if (dst.face(1, h, 1) == fx) ++count;
    }
  }
  return count;
}

// ---- coCartesian edges ----

Verdict is_cocartesian_edge(const SimpMap& p, int edge, int dim_cap, Budget& budget) {
  Verdict v;
  v.tier = "lifting";
  const int bound = p.source().dim_bound();
  const int top = std::min(dim_cap, bound);
  v.range = "2<=n<=" + std::to_string(top);
  for (int n = 2; n <= top; ++n) {
    const SimpMap incl = horn_inclusion(n, 0, std::max(n, bound));
    const SimpSet& h = incl.source();
    const std::array<int, 2> verts{0, 1};
    const int target = simplex_from_vertices(incl.target(), verts);
    std::vector<std::vector<int>> fixed(2);
    fixed[0].assign(h.cell_count(0), -1);
    fixed[1].assign(h.cell_count(1), -1);
    for (int c = 0; c < h.cell_count(1); ++c)
      if (incl(1, h.table_id(1, c)) == target) fixed[1][c] = edge;
    const Verdict r = has_rlp(p, incl, n, budget, fixed);
    if (!r.holds()) {
      v.status = r.status;
      v.detail = "Λ^0[" + std::to_string(n) + "]" + (r.detail.empty() ? "" : ": " + r.detail);
      v.witness = r.witness;
      return v;
    }
  }
  return v;
}

CocartesianResult cocartesian_edges(const SimpMap& p, int dim_cap, Budget& budget) {
  CocartesianResult out;
  const SimpSet& x = p.source();
  out.detection.tier = "lifting";
  out.detection.range = "2<=n<=" + std::to_string(std::min(dim_cap, x.dim_bound()));
  try {
    for (int e = 0; e < x.size(1); ++e) {
      const Verdict v = is_cocartesian_edge(p, e, dim_cap, budget);
      if (v.status == Status::inconclusive) throw BudgetExceeded(v.detail);
      if (v.holds()) out.edges.push_back(e);
    }
    out.fibration = is_inner_fibration_up_to(p, std::min(dim_cap, x.dim_bound()), budget);
    out.fibration.tier = "inner-fibration+cocartesian-lifts";
    if (out.fibration.holds()) {
      const SimpSet& s = p.target();
      std::vector<char> detected(x.size(1), 0);
      for (int e : out.edges) detected[e] = 1;
      for (int b = 0; b < s.cell_count(1) && out.fibration.holds(); ++b) {
        const int bt = s.table_id(1, b);
        const int from = s.face(1, bt, 1);
        for (int v = 0; v < x.size(0); ++v) {
          if (p(0, v) != from) continue;
          bool found = false;
          for (int e = 0; e < x.size(1) && !found; ++e)
            found = detected[e] && p(1, e) == bt && x.face(1, e, 1) == v;
          if (!found) {
            out.fibration.status = Status::fails;
            out.fibration.detail = "no coCartesian lift of base edge '" + s.cell(1, b).id + "' from vertex '" +
                                   x.ref_name(0, v) + "'";
            out.fibration.witness = json{{"base_edge", s.cell(1, b).id}, {"vertex", x.ref_name(0, v)}};
            break;
          }
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    out.detection.status = Status::inconclusive;
    out.detection.detail = e.what();
    out.fibration.status = Status::inconclusive;
  }
  out.natural_marking = MarkedSimpSet(x, out.edges);
  return out;
}

Verdict cocartesian_crosscheck(const RelativeNerve& rn, const RelativeNerveInput& in, const CocartesianResult& r,
                               int word_cap) {
  Verdict v;
  v.tier = "exhaustive";
  v.range = r.detection.range;
  if (!r.detection.holds()) {
    v.status = Status::inconclusive;
    v.detail = "detection incomplete";
    return v;
  }
  std::vector<Tau1> taus;
  for (const auto& val : in.values) taus.push_back(tau1(val, word_cap));
  std::vector<char> detected(rn.total.size(1), 0);
  for (int e : r.edges) detected[e] = 1;
  for (int e = 0; e < rn.total.size(1); ++e) {
    // sigma for J = {0, 1} is the edge h in the value at the target.
    const int target = in.base.arrow(rn.chain[1][e][0]).dst;
    const int h = rn.sigma[1][e][2];
    const Tau1& t = taus[target];
    const bool invertible = t.cat.is_iso(t.arrow_of_edge[h]);
    if (invertible != static_cast<bool>(detected[e])) {
      v.status = Status::fails;
      v.detail = "edge '" + rn.total.ref_name(1, e) + "': lifting says " + (detected[e] ? "coCartesian" : "not") +
                 ", invertibility says " + (invertible ? "coCartesian" : "not");
      return v;
    }
  }
  return v;
}

namespace {

SimpMap inverse_map(const SimpMap& f) {
  const int top = f.top();
  std::vector<std::vector<int>> img(top + 1);
  for (int n = 0; n <= top; ++n) {
    img[n].assign(f.target().size(n), -1);
    for (int x = 0; x < f.source().size(n); ++x) img[n][f(n, x)] = x;
  }
  return SimpMap::from_table(f.target(), f.source(), std::move(img));
}

}  // namespace

SmQcatResult sm_qcat_check(const RelativeNerve& rn, const RelativeNerveInput& in, SegalTier tier, int max_sum,
                           Budget& budget, int word_cap) {
  SmQcatResult out;
  Verdict& v = out.verdict;
  v.tier = to_string(tier);
  const int levels = in.base.object_count() - 1;
  for (int n = 0; n <= levels; ++n)
    if (in.base.object(n) != std::to_string(n) + "+")
      throw InputError("sm-check: the base must be Γop on consecutive levels 0+, 1+, ...");
  auto to_value = std::make_shared<std::vector<SimpMap>>();
  auto from_value = std::make_shared<std::vector<SimpMap>>();
  std::vector<SimpSet> values;
  for (int n = 0; n <= levels; ++n) {
    const Sub f = fiber(rn, n);
    SimpMap m = fiber_to_value(rn, f, in, n);
    if (!m.is_iso()) {
      v.status = Status::fails;
      v.detail = "fiber over " + in.base.object(n) + " is not isomorphic to the diagram value";
      return out;
    }
    values.push_back(f.set);
    from_value->push_back(inverse_map(m));
    to_value->push_back(std::move(m));
  }
  // Transport along δ: the edge (δ, x, f(δ)x, id) must exist over each fiber vertex.
  for (int s = 2; s <= std::min(max_sum, levels); ++s)
    for (int k = 1; k < s; ++k)
      for (const auto& d : {delta_first(k, s - k), delta_second(k, s - k)}) {
        const int a = gamma_arrow(in.base, d);
        for (int x = 0; x < in.values[s].size(0); ++x) {
          const int fx = in.arrows[a](0, x);
          bool found = false;
          for (int e = 0; e < rn.total.size(1) && !found; ++e) {
            const auto& sg = rn.sigma[1][e];
            found = rn.chain[1][e][0] == a && sg[0] == x && sg[1] == fx &&
                    in.values[d.dst].cell_of(1, sg[2]) < 0;
          }
          if (!found) throw InputError("sm-check: missing transport edge over " + d.name());
        }
      }
  auto arrows = std::make_shared<std::vector<SimpMap>>(in.arrows);
  FinCat base = in.base;
  out.fibers = TabulatedGammaSpace(levels, values, [to_value, from_value, arrows, base](const GammaMorphism& f) {
    return (*to_value)[f.src].then((*arrows)[gamma_arrow(base, f)]).then((*from_value)[f.dst]);
  });
  v = segal_sweep(out.fibers, max_sum, tier, budget, word_cap);
  return out;
}

// ---- over the base ----

OverObject make_over_object(MarkedSimpSet total, SimpMap proj) {
  if (!(proj.source() == total.set())) throw InputError("over-object: projection source mismatch");
  return OverObject{std::move(total), std::move(proj)};
}

OverObject nelg(const FinCat& gop, int k, int dim_bound) {
  if (k >= gop.object_count()) throw ResourceError("nelg: level exceeds the base");
  const Slice s = coslice(gop, k);
  const SimpSet total = nerve(s.cat, dim_bound);
  const SimpSet base = nerve(gop, dim_bound);
  return OverObject{sharp(total), nerve_map(s.cat, gop, s.projection, total, base)};
}

Upsilon upsilon(const FinCat& gop, int k, int l, int dim_bound) {
  if (k + l >= gop.object_count()) throw ResourceError("upsilon: k + l exceeds the base");
  const Slice sk = coslice(gop, k);
  const Slice sl = coslice(gop, l);
  const Slice skl = coslice(gop, k + l);
  const SimpSet nk = nerve(sk.cat, dim_bound);
  const SimpSet nl = nerve(sl.cat, dim_bound);
  const SimpSet nkl = nerve(skl.cat, dim_bound);
  const SimpSet base = nerve(gop, dim_bound);
  std::map<int, int> object_of_arrow;
  for (int o = 0; o < skl.cat.object_count(); ++o) object_of_arrow[skl.arrow_of_object[o]] = o;
  std::map<std::array<int, 3>, int> arrow_of;
  for (int a = 0; a < skl.cat.arrow_count(); ++a) {
    const auto& ar = skl.cat.arrow(a);
    arrow_of[{ar.src, ar.dst, skl.projection.on_arrows[a]}] = a;
  }
  auto precompose = [&](const Slice& s, const GammaMorphism& delta) {
    const int d = gamma_arrow(gop, delta);
    CatFunctor F;
    for (int o = 0; o < s.cat.object_count(); ++o)
      F.on_objects.push_back(object_of_arrow.at(gop.compose(s.arrow_of_object[o], d)));
    for (int a = 0; a < s.cat.arrow_count(); ++a) {
      const auto& ar = s.cat.arrow(a);
      F.on_arrows.push_back(arrow_of.at({F.on_objects[ar.src], F.on_objects[ar.dst], s.projection.on_arrows[a]}));
    }
    return F;
  };
  const SimpMap fk = nerve_map(sk.cat, skl.cat, precompose(sk, delta_first(k, l)), nk, nkl);
  const SimpMap fl = nerve_map(sl.cat, skl.cat, precompose(sl, delta_second(k, l)), nl, nkl);
  Upsilon u;
  u.source_set = coproduct(nk, nl);
  const SimpMap pk = nerve_map(sk.cat, gop, sk.projection, nk, base);
  const SimpMap pl = nerve_map(sl.cat, gop, sl.projection, nl, base);
  const int top = dim_bound;
  std::vector<std::vector<int>> img(top + 1), proj(top + 1);
  for (int n = 0; n <= top; ++n) {
    img[n].assign(u.source_set.set.size(n), -1);
    proj[n].assign(u.source_set.set.size(n), -1);
    for (int x = 0; x < nk.size(n); ++x) {
      img[n][u.source_set.inl(n, x)] = fk(n, x);
      proj[n][u.source_set.inl(n, x)] = pk(n, x);
    }
    for (int x = 0; x < nl.size(n); ++x) {
      img[n][u.source_set.inr(n, x)] = fl(n, x);
      proj[n][u.source_set.inr(n, x)] = pl(n, x);
    }
  }
  u.source = OverObject{sharp(u.source_set.set), SimpMap::from_table(u.source_set.set, base, std::move(proj))};
  u.target = OverObject{sharp(nkl), nerve_map(skl.cat, gop, skl.projection, nkl, base)};
  u.map = SimpMap::from_table(u.source_set.set, nkl, std::move(img));
  return u;
}

namespace {

void require_same_base(const OverObject& x, const OverObject& y) {
  if (!(x.proj.target() == y.proj.target())) throw InputError("over-base: projections target different bases");
}

}  // namespace

OverHom hom_over_base(const OverObject& x, const OverObject& y, Budget& budget) {
  require_same_base(x, y);
  const ShapeFilter filter = [&x, &y](int, const Product& shape, int dim, int cell, int cand) {
    const int t = shape.set.table_id(dim, cell);
    const int xs = shape.pr2(dim, t);
    if (y.proj(dim, cand) != x.proj(dim, xs)) return false;
    if (dim != 1) return true;
    if (shape.pr1.target().cell_of(1, shape.pr1(1, t)) >= 0) return true;
    return !x.total.is_marked(xs) || y.total.is_marked(cand);
  };
  Exponential e = exponential(y.total.set(), x.total.set(), budget, filter);
  MarkedSimpSet plus(e.set, plus_marking(e, x.total, y.total));
  Sub sh = subcomplex(e.set, [&plus, &e](int n, int t) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        const std::array<int, 2> pos{p, q};
        if (!plus.is_marked(e.set.restrict_to(n, t, pos))) return false;
      }
    return true;
  });
  return OverHom{std::move(e), std::move(plus), std::move(sh)};
}

std::uint64_t count_over_base_maps(const OverObject& x, const OverObject& y, Budget& budget) {
  require_same_base(x, y);
  HomQuery q;
  q.source = &x.total.set();
  q.target = &y.total.set();
  q.filter = [&x, &y](int n, int c, int cand) {
    const int t = x.total.set().table_id(n, c);
    if (y.proj(n, cand) != x.proj(n, t)) return false;
    return n != 1 || !x.total.is_marked(t) || y.total.is_marked(cand);
  };
  std::uint64_t count = 0;
  enumerate_homs(q, budget, [&](const CellImages&) {
    ++count;
    return true;
  });
  return count;
}

OverObject tensor_over_base(const SimpSet& a, const OverObject& x) {
  const MarkedProduct p = marked_product(flat(a), x.total);
  return OverObject{p.set, p.product.pr2.then(x.proj)};
}

OverObject cotensor_over_base(const OverObject& x, const SimpSet& a, Budget& budget) {
  if (a.is_empty()) throw InputError("cotensor over the base needs a nonempty shape");
  const MarkedSimpSet af = flat(a);
  const ShapeFilter marking = [&af, &x](int, const Product& shape, int dim, int cell, int cand) {
    if (dim != 1) return true;
    const int t = shape.set.table_id(1, cell);
    if (shape.pr1.target().cell_of(1, shape.pr1(1, t)) >= 0) return true;
    return !af.is_marked(shape.pr2(1, t)) || x.total.is_marked(cand);
  };
  const Exponential e = exponential(x.total.set(), a, budget, marking);
  // Keep simplices whose projection is constant along A.
  auto base_of = [&](int n, int t) {
    const Product& shape = e.shapes[n];
    int found = -1;
    // The top simplex of Δ[n] paired with every n-simplex of A.
    const SimpSet& delta = shape.pr1.target();
    const int top_simplex = delta.table_id(n, 0);
    for (int s = 0; s < a.size(n); ++s) {
      const int img = x.proj(n, e.apply(n, t, n, shape.pair(n, top_simplex, s)));
      if (found >= 0 && img != found) return -2;
      found = img;
    }
    return found;
  };
  Sub sub = subcomplex(e.set, [&](int n, int t) { return base_of(n, t) != -2; });
  const std::vector<int> plus = plus_marking(e, af, x.total);
  std::vector<int> marked;
  for (int edge = 0; edge < sub.set.size(1); ++edge)
    if (std::binary_search(plus.begin(), plus.end(), sub.inclusion(1, edge))) marked.push_back(edge);
  std::vector<std::vector<int>> proj(sub.set.dim_bound() + 1);
  for (int n = 0; n <= sub.set.dim_bound() && n <= x.proj.top(); ++n) {
    proj[n].resize(sub.set.size(n));
    for (int t = 0; t < sub.set.size(n); ++t) proj[n][t] = base_of(n, sub.inclusion(n, t));
  }
  proj.resize(std::min(sub.set.dim_bound(), x.proj.top()) + 1);
  return OverObject{MarkedSimpSet(sub.set, marked), SimpMap::from_table(sub.set, x.proj.target(), std::move(proj))};
}

MarkedSimpSet r_plus_level(const OverObject& x, const FinCat& gop, int k, Budget& budget) {
  const OverObject n = nelg(gop, k, x.proj.target().dim_bound());
  return hom_over_base(n, x, budget).plus;
}

}  // namespace gs
