#include <gammaspace/gamma_checks.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace gs {

SegalTier parse_segal_tier(const std::string& s) {
  if (s == "iso") return SegalTier::iso;
  if (s == "cat-equiv") return SegalTier::cat_equiv;
  if (s == "ho-necessary") return SegalTier::ho_necessary;
  throw InputError("unknown tier '" + s + "' (expected iso, cat-equiv or ho-necessary)");
}

std::string to_string(SegalTier t) {
  switch (t) {
    case SegalTier::iso: return "iso";
    case SegalTier::cat_equiv: return "cat-equiv";
    case SegalTier::ho_necessary: return "ho-necessary";
  }
  return "?";
}

SegalMap segal_map(const TabulatedGammaSpace& x, int k, int l) {
  const SimpSet& src = x.value(k + l);
  SegalMap out{product(x.value(k), x.value(l)), {}};
  const SimpMap first = x.act(delta_first(k, l));
  const SimpMap second = x.act(delta_second(k, l));
  const int top = std::min({src.dim_bound(), out.product.set.dim_bound(), first.top(), second.top()});
  std::vector<std::vector<int>> img(top + 1);
  for (int d = 0; d <= top; ++d) {
    img[d].resize(src.size(d));
    for (int t = 0; t < src.size(d); ++t) img[d][t] = out.product.pair(d, first(d, t), second(d, t));
  }
  out.map = SimpMap::from_table(src, out.product.set, std::move(img));
  return out;
}

CatFunctor tau1_map(const Tau1& x, const Tau1& y, const SimpMap& f) {
  const FinCat& c = x.cat;
  const FinCat& d = y.cat;
  CatFunctor F;
  for (int v = 0; v < c.object_count(); ++v) F.on_objects.push_back(f(0, f.source().table_id(0, v)));
  F.on_arrows.assign(c.arrow_count(), -1);
  for (int v = 0; v < c.object_count(); ++v) F.on_arrows[c.identity(v)] = d.identity(F.on_objects[v]);
  for (int t = 0; t < static_cast<int>(x.arrow_of_edge.size()); ++t) {
    const int a = x.arrow_of_edge[t];
    const int b = y.arrow_of_edge[f(1, t)];
    if (F.on_arrows[a] >= 0 && F.on_arrows[a] != b) throw InputError("τ1 map: edge images disagree");
    F.on_arrows[a] = b;
  }
  // Remaining arrows are composites of edge arrows.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g = 0; g < c.arrow_count(); ++g) {
      if (F.on_arrows[g] < 0) continue;
      for (int h = 0; h < c.arrow_count(); ++h) {
        if (F.on_arrows[h] < 0 || c.arrow(h).dst != c.arrow(g).src) continue;
        const int gh = c.compose(g, h);
        const int img = d.compose(F.on_arrows[g], F.on_arrows[h]);
        if (F.on_arrows[gh] < 0) {
          F.on_arrows[gh] = img;
          changed = true;
        } else if (F.on_arrows[gh] != img) {
          throw InputError("τ1 map: not compatible with composition");
        }
      }
    }
  }
  if (std::find(F.on_arrows.begin(), F.on_arrows.end(), -1) != F.on_arrows.end())
    throw InputError("τ1 map: arrow not generated by edges");
  return F;
}

bool is_nerve_of_tau1(const SimpSet& x, const Tau1& t) {
  const int bound = x.dim_bound();
  const SimpSet n = nerve(t.cat, bound);
  std::vector<std::map<std::vector<int>, int>> index(bound + 1);
  for (int d = 1; d <= bound; ++d)
    for (int s = 0; s < n.size(d); ++s) index[d].emplace(nerve_chain(t.cat, n, d, s), s);
  std::vector<std::vector<int>> img(bound + 1);
  for (int v = 0; v < x.cell_count(0); ++v) img[0].push_back(n.table_id(0, v));
  for (int d = 1; d <= bound; ++d)
    for (int c = 0; c < x.cell_count(d); ++c) {
      std::vector<int> chain;
      for (int p = 0; p < d; ++p) {
        const std::array<int, 2> pos{p, p + 1};
        chain.push_back(t.arrow_of_edge[x.restrict_to(d, x.table_id(d, c), pos)]);
      }
      auto it = index[d].find(chain);
      if (it == index[d].end()) return false;
      img[d].push_back(it->second);
    }
  try {
    return SimpMap(x, n, img).is_iso();
  } catch (const InputError&) {
    return false;
  }
}

namespace {

Verdict equivalence_of_tau1(const SimpSet& src, const SimpSet& tgt, const SimpMap& f, int word_cap,
                            bool require_nerves) {
  Verdict v;
  v.tier = require_nerves ? "cat-equiv" : "ho-necessary";
  const Tau1 ts = tau1(src, word_cap);
  const Tau1 tt = tau1(tgt, word_cap);
  if (require_nerves && !(is_nerve_of_tau1(src, ts) && is_nerve_of_tau1(tgt, tt))) {
    v = equivalence_of_tau1(src, tgt, f, word_cap, false);
    v.detail = "downgraded from cat-equiv: a side is not the nerve of its fundamental category" +
               (v.detail.empty() ? std::string() : "; " + v.detail);
    return v;
  }
  const CatFunctor F = tau1_map(ts, tt, f);
  if (!is_functor(ts.cat, tt.cat, F)) throw InputError("τ1 map is not a functor");
  if (!is_fully_faithful(ts.cat, tt.cat, F)) {
    v.status = Status::fails;
    v.detail = "induced functor on fundamental categories is not fully faithful";
  } else if (!is_essentially_surjective(ts.cat, tt.cat, F)) {
    v.status = Status::fails;
    v.detail = "induced functor on fundamental categories is not essentially surjective";
  } else if (!require_nerves) {
    v.detail = "necessary condition only";
  }
  return v;
}

json count_json(const SimpSet& s) { return s.cell_counts(); }

}  // namespace

Verdict segal_check(const TabulatedGammaSpace& x, int k, int l, SegalTier tier, Budget& budget, int word_cap) {
  (void)budget;
  Verdict v;
  v.range = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
  if (k + l > x.level_bound()) {
    v.status = Status::inconclusive;
    v.tier = to_string(tier);
    v.detail = "k + l exceeds the level bound";
    return v;
  }
  const SegalMap s = segal_map(x, k, l);
  try {
    if (tier == SegalTier::iso) {
      v.tier = "iso";
      if (!s.map.is_iso()) {
        v.status = Status::fails;
        const SimpSet& a = s.map.source();
        const SimpSet& b = s.product.set;
        v.detail = "Segal map X(" + std::to_string(k + l) + "+) -> X(" + std::to_string(k) + "+) x X(" +
                   std::to_string(l) + "+) is not an isomorphism: " + std::to_string(a.cell_count(0)) + " vs " +
                   std::to_string(b.cell_count(0)) + " vertices";
        v.witness = json{{"source_cells", count_json(a)}, {"target_cells", count_json(b)},
                         {"mono", s.map.is_mono()}, {"surjective", s.map.is_surjective()}};
      }
    } else {
      const Verdict e = equivalence_of_tau1(s.map.source(), s.product.set, s.map, word_cap,
                                            tier == SegalTier::cat_equiv);
      const std::string range = v.range;
      v = e;
      v.range = range;
    }
  } catch (const ResourceError& e) {
    v.status = Status::inconclusive;
    v.tier = to_string(tier);
    v.detail = e.what();
  }
  return v;
}

Verdict segal_sweep(const TabulatedGammaSpace& x, int max_sum, SegalTier tier, Budget& budget, int word_cap) {
  Verdict out;
  out.tier = to_string(tier);
  const int top = std::min(max_sum, x.level_bound());
  out.range = "k+l<=" + std::to_string(top);
  for (int s = 2; s <= top; ++s)
    for (int k = 1; k < s; ++k) {
      Verdict v = segal_check(x, k, s - k, tier, budget, word_cap);
      if (v.tier != out.tier) out.tier = v.tier;  // downgrades propagate
      if (!v.holds()) {
        out.status = combine(out.status, v.status);
        if (v.fails()) {
          out.detail = v.range + ": " + v.detail;
          out.witness = v.witness;
          return out;
        }
        if (out.detail.empty()) out.detail = v.range + ": " + v.detail;
      } else if (!v.detail.empty() && out.detail.empty()) {
        out.detail = v.detail;
      }
    }
  return out;
}

FinCat homotopy_category(const TabulatedGammaSpace& x, int word_cap) { return tau1(x.value(1), word_cap).cat; }

// ---- unital part and normalization ----

UnitalPart unital_part(const TabulatedGammaSpace& x) {
  UnitalPart out{constant_gamma_space(x.value(0), x.level_bound()), {}};
  out.iota = GammaSpaceMap{out.space, x, {}};
  for (int n = 0; n <= x.level_bound(); ++n) out.iota.levels.push_back(x.act(GammaMorphism::zero(0, n)));
  return out;
}

Normalization normalize(const TabulatedGammaSpace& x) {
  const UnitalPart u = unital_part(x);
  auto pushouts = std::make_shared<std::vector<Pushout>>();
  std::vector<SimpSet> values;
  for (int n = 0; n <= x.level_bound(); ++n) {
    if (!u.iota.levels[n].is_mono()) throw InputError("unital part is not a levelwise monomorphism");
    pushouts->push_back(collapse(u.iota.levels[n]));
    values.push_back(pushouts->back().set);
  }
  TabulatedGammaSpace space(x.level_bound(), std::move(values), [x, pushouts](const GammaMorphism& f) {
    const Pushout& a = (*pushouts)[f.src];
    const Pushout& b = (*pushouts)[f.dst];
    return a.induced(x.act(f).then(b.inl), b.inr);
  });
  Normalization out{space, GammaSpaceMap{x, space, {}}, *pushouts};
  for (const auto& p : out.pushouts) out.eta.levels.push_back(p.inl);
  return out;
}

GammaSpaceMap normalization_counit(const Normalization& n, const TabulatedGammaSpace& y) {
  if (y.value(0).cell_count(0) != 1) throw InputError("counit needs a normalized Γ-space");
  GammaSpaceMap out{n.space, y, {}};
  for (int k = 0; k < static_cast<int>(n.pushouts.size()); ++k)
    out.levels.push_back(
        n.pushouts[k].induced(SimpMap::identity(y.value(k)), y.act(GammaMorphism::zero(0, k))));
  return out;
}

Verdict normalized_mapping_check(const TabulatedGammaSpace& x, const TabulatedGammaSpace& y, int max_level,
                                 Budget& budget) {
  Verdict v;
  v.tier = "iso";
  v.range = "levels<=" + std::to_string(max_level);
  try {
    const SimpSet pointed = natural_mapping_space(x, y, max_level, true, budget);
    const SimpSet plain = natural_mapping_space(x, y, max_level, false, budget);
    const IsoResult r = iso_check(pointed, plain, budget);
    v.status = r.verdict.status;
    v.detail = r.verdict.detail;
    v.witness = json{{"pointed", pointed.cell_counts()}, {"unpointed", plain.cell_counts()}};
  } catch (const BudgetExceeded& e) {
    v.status = Status::inconclusive;
    v.detail = e.what();
  }
  return v;
}

// ---- trivial fibrations ----

namespace {

// Squares ∂Δ[m] -> X, Δ[m] -> Y against p and their lifts, through hom sets.
bool adjoint_route(const SimpMap& p, int m, int dim_bound, Budget& budget, json& witness) {
  const SimpMap incl = boundary_inclusion(m, dim_bound);
  const SimpSet& a = incl.source();
  const SimpSet& b = incl.target();
  const auto tops = hom_set(a, p.source(), budget);
  const auto bottoms = hom_set(b, p.target(), budget);
  const auto lifts = hom_set(b, p.source(), budget);
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> lifted;
  for (const auto& c : lifts) lifted[{incl.then(c).key(), c.then(p).key()}] = 1;
  for (const auto& u : tops) {
    const auto pu = u.then(p).key();
    for (const auto& w : bottoms) {
      if (incl.then(w).key() != pu) continue;
      if (!lifted.count({u.key(), w.key()})) {
        witness = json{{"m", m}, {"top", u.key()}, {"bottom", w.key()}};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Verdict trivial_fibration_check(const GammaSpaceMap& p, int level_cap, int dim_cap, Budget& budget) {
  Verdict out;
  out.tier = "exhaustive";
  const int levels = std::min(level_cap, static_cast<int>(p.levels.size()) - 1);
  out.range = "levels<=" + std::to_string(levels) + ",dim<=" + std::to_string(dim_cap);
  try {
    for (int n = 0; n <= levels; ++n) {
      const SimpMap& pn = p.levels[n];
      const int bound = std::min(pn.source().dim_bound(), pn.target().dim_bound());
      for (int m = 0; m <= std::min(dim_cap, bound); ++m) {
        const Verdict direct = has_rlp(pn, boundary_inclusion(m, bound), dim_cap, budget);
        if (direct.status == Status::inconclusive) {
          out.status = Status::inconclusive;
          out.detail = direct.detail;
          return out;
        }
        json w;
        const bool adjoint = adjoint_route(pn, m, bound, budget, w);
        if (adjoint != direct.holds()) {
          out.status = Status::fails;
          out.detail = "lifting routes disagree at level " + std::to_string(n) + ", m=" + std::to_string(m);
          return out;
        }
        if (!adjoint) {
          out.status = Status::fails;
          out.detail = "no lift for Γ^" + std::to_string(n) + " ⊗ (∂Δ[" + std::to_string(m) + "] ⊂ Δ[" +
                       std::to_string(m) + "])";
          out.witness = direct.witness;
          out.witness["level"] = n;
          return out;
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    out.status = Status::inconclusive;
    out.detail = e.what();
  }
  return out;
}

// ---- semiadditivity ----

json SemiadditivityReport::to_json() const {
  return json{{"level_bound", level_bound},
              {"coproduct_comparison", coproduct.to_json()},
              {"product_comparison", product.to_json()},
              {"levels", levels}};
}

SemiadditivityReport semiadditivity_probe(const PresentedGammaSpace& x, int level_bound, Budget& budget) {
  SemiadditivityReport r;
  r.level_bound = level_bound;
  const int bound = x.dim_bound();
  const PresentedMap h = day_convolve(x, h_map(1, 1, bound));
  r.composite = tabulate(h, level_bound);
  const TabulatedGammaSpace xx = tabulate(coproduct(x, x), level_bound);
  const TabulatedGammaSpace tx = tabulate(x, level_bound);
  const TabulatedGammaSpace prod = levelwise_product(tx, tx);
  const TabulatedGammaSpace& conv2 = r.composite.target;
  const TabulatedGammaSpace& conv11 = r.composite.source;
  r.coproduct.tier = r.product.tier = "iso";
  r.coproduct.range = r.product.range = "levels<=" + std::to_string(level_bound);
  try {
    for (int n = 0; n <= level_bound; ++n) {
      const IsoResult c = iso_check(xx.value(n), conv11.value(n), budget);
      const IsoResult p = iso_check(conv2.value(n), prod.value(n), budget);
      r.levels.push_back(json{{"level", n},
                              {"x_sqcup_x", xx.value(n).cell_counts()},
                              {"x_conv_gamma2", conv2.value(n).cell_counts()},
                              {"x_times_x", prod.value(n).cell_counts()},
                              {"coproduct_iso", to_string(c.verdict.status)},
                              {"product_iso", to_string(p.verdict.status)}});
      r.coproduct.status = combine(r.coproduct.status, c.verdict.status);
      r.product.status = combine(r.product.status, p.verdict.status);
      if (!c.verdict.holds() && r.coproduct.detail.empty())
        r.coproduct.detail = "level " + std::to_string(n) + ": " + c.verdict.detail;
      if (!p.verdict.holds() && r.product.detail.empty())
        r.product.detail = "level " + std::to_string(n) + ": " + p.verdict.detail;
    }
  } catch (const BudgetExceeded& e) {
    r.product.status = combine(r.product.status, Status::inconclusive);
    r.product.detail = e.what();
  }
  return r;
}

}  // namespace gs
